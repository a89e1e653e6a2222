#include "statcore/verify.h"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "statcore/reference_oracle.h"

namespace statcore {

uint64_t draw_below(std::mt19937_64 &rng, uint64_t bound) {
    // Rejection sampling keeps the draw unbiased.
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

GateStep random_step(std::mt19937_64 &rng, size_t num_lines, size_t max_controls) {
    std::vector<Line> lines(num_lines);
    std::iota(lines.begin(), lines.end(), Line{0});
    // Partial Fisher-Yates: lines[0] is the target, the next k are controls.
    size_t k = draw_below(rng, std::min(num_lines - 1, max_controls) + 1);
    for (size_t i = 0; i <= k; i++) {
        std::swap(lines[i], lines[i + draw_below(rng, num_lines - i)]);
    }
    return GateStep{lines[0], std::vector<Line>(lines.begin() + 1, lines.begin() + 1 + k)};
}

Circuit random_circuit(std::mt19937_64 &rng, size_t num_lines, size_t depth) {
    Circuit c{num_lines, {}};
    c.steps.reserve(depth);
    for (size_t i = 0; i < depth; i++) {
        c.steps.push_back(random_step(rng, num_lines));
    }
    return c;
}

LogicalVector random_trits(std::mt19937_64 &rng, size_t num_lines) {
    LogicalVector v(size_t{1} << num_lines);
    for (auto &e : v) {
        e = static_cast<int64_t>(draw_below(rng, 3)) - 1;
    }
    return v;
}

VerifyResult verify_equivalence(const VerifyOptions &options, const StationaryExecutor &executor) {
    if (options.max_lines < 1 || options.max_lines > kMaxAddressBits) {
        throw std::invalid_argument("max line count must be at least 1");
    }
    StationaryExecutor run = executor ? executor : [](const Circuit &c, std::span<const int64_t> start) {
        return run_stationary(c, start, kMaxAddressBits);
    };
    std::mt19937_64 rng(options.seed);
    VerifyResult result;
    for (size_t t = 0; t < options.trials; t++) {
        size_t n = 1 + draw_below(rng, options.max_lines);
        size_t depth = draw_below(rng, options.max_depth + 1);
        Circuit circuit = random_circuit(rng, n, depth);
        LogicalVector start = random_trits(rng, n);

        LogicalVector stationary = run(circuit, start);
        LogicalVector dense = run_dense(circuit, start);
        result.trials_run++;
        if (stationary != dense) {
            result.failure = Counterexample{t, std::move(circuit), std::move(start), std::move(stationary), std::move(dense)};
            break;
        }
    }
    return result;
}

}  // namespace statcore
