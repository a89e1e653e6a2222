#include "statcore/reference_oracle.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace statcore {

LogicalVector dense_apply_step(LogicalVector vec, const GateStep &step) {
    size_t n = line_count_of(vec);
    for (const auto &[a, b] : swap_pairs(step, n)) {
        std::swap(vec[a], vec[b]);
    }
    return vec;
}

LogicalVector run_dense(const Circuit &circuit, LogicalVector start) {
    if (line_count_of(start) != circuit.num_lines) {
        throw std::invalid_argument(
            "circuit has " + std::to_string(circuit.num_lines) + " lines but the start vector has length " +
            std::to_string(start.size()));
    }
    for (const auto &step : circuit.steps) {
        start = dense_apply_step(std::move(start), step);
    }
    return start;
}

}  // namespace statcore
