#include "statcore/state_core.h"

#include <stdexcept>
#include <string>

namespace statcore {

Trit to_trit(int64_t value) {
    switch (value) {
        case -1:
            return Trit::Minus;
        case 0:
            return Trit::Zero;
        case 1:
            return Trit::Plus;
        default:
            throw std::invalid_argument("amplitude " + std::to_string(value) + " is not in {-1, 0, +1}");
    }
}

StateCore::StateCore(size_t num_lines, size_t max_lines) : num_lines_(num_lines) {
    if (max_lines > kMaxAddressBits) {
        max_lines = kMaxAddressBits;
    }
    if (num_lines < 1 || num_lines > max_lines) {
        throw std::invalid_argument(
            "line count " + std::to_string(num_lines) + " outside [1, " + std::to_string(max_lines) + "]");
    }
    size_t n = size_t{1} << num_lines;
    words_.resize(n);
    for (size_t i = 0; i < n; i++) {
        words_[i].tag = i;
    }
}

StateCore StateCore::init_basis(size_t num_lines, Address index, size_t max_lines) {
    StateCore core(num_lines, max_lines);
    if (index >= core.size()) {
        throw std::invalid_argument(
            "basis index " + std::to_string(index) + " out of range for " + std::to_string(num_lines) + " lines");
    }
    core.words_[index].amp = Trit::Plus;
    return core;
}

StateCore StateCore::load_signs(size_t num_lines, std::span<const int64_t> values, size_t max_lines) {
    StateCore core(num_lines, max_lines);
    if (values.size() != core.size()) {
        throw std::invalid_argument(
            "vector of length " + std::to_string(values.size()) + " does not fit " + std::to_string(num_lines) +
            " lines");
    }
    for (size_t i = 0; i < values.size(); i++) {
        core.words_[i].amp = to_trit(values[i]);
    }
    return core;
}

void StateCore::apply_step(const GateStep &step) {
    require_valid_step(step, num_lines_);
    const Address controls = step.control_mask();
    const Address flip = step.target_mask();
    // Each word decides from its own tag alone; no word reads another.
    for (Word &w : words_) {
        w.tag ^= flip & -static_cast<Address>((w.tag & controls) == controls);
    }
}

LogicalVector StateCore::readout() const {
    LogicalVector out(words_.size());
    for (const Word &w : words_) {
        out[w.tag] = to_int(w.amp);
    }
    return out;
}

LogicalVector run_stationary(const Circuit &circuit, std::span<const int64_t> start, size_t max_lines) {
    StateCore core = StateCore::load_signs(circuit.num_lines, start, max_lines);
    for (const auto &step : circuit.steps) {
        core.apply_step(step);
    }
    return core.readout();
}

}  // namespace statcore
