#include "statcore/gate_model.h"

#include <stdexcept>

namespace statcore {

Address GateStep::control_mask() const {
    Address mask = 0;
    for (Line c : controls) {
        mask |= Address{1} << c;
    }
    return mask;
}

std::optional<StepViolation> validate_step(const GateStep &step, size_t num_lines) {
    if (step.target >= num_lines) {
        return StepViolation{
            StepViolationKind::IndexOutOfRange,
            "target A" + std::to_string(step.target) + " out of range for " + std::to_string(num_lines) + " lines"};
    }
    Address seen = 0;
    for (Line c : step.controls) {
        if (c >= num_lines) {
            return StepViolation{
                StepViolationKind::IndexOutOfRange,
                "control A" + std::to_string(c) + " out of range for " + std::to_string(num_lines) + " lines"};
        }
        if (c == step.target) {
            return StepViolation{
                StepViolationKind::TargetInControls, "target A" + std::to_string(c) + " is also a control"};
        }
        Address bit = Address{1} << c;
        if (seen & bit) {
            return StepViolation{
                StepViolationKind::DuplicateControl, "control A" + std::to_string(c) + " listed twice"};
        }
        seen |= bit;
    }
    return std::nullopt;
}

void require_valid_step(const GateStep &step, size_t num_lines) {
    if (auto violation = validate_step(step, num_lines)) {
        throw std::invalid_argument(violation->description);
    }
}

std::vector<std::pair<Address, Address>> swap_pairs(const GateStep &step, size_t num_lines) {
    require_valid_step(step, num_lines);
    if (num_lines > kMaxAddressBits) {
        throw std::invalid_argument("too many lines to enumerate");
    }
    Address controls = step.control_mask();
    Address flip = step.target_mask();
    std::vector<std::pair<Address, Address>> result;
    result.reserve(size_t{1} << (num_lines - 1 - step.controls.size()));
    Address size = Address{1} << num_lines;
    for (Address a = 0; a < size; a++) {
        if ((a & controls) == controls && !(a & flip)) {
            result.emplace_back(a, a | flip);
        }
    }
    return result;
}

void Circuit::validate() const {
    for (const auto &step : steps) {
        require_valid_step(step, num_lines);
    }
}

std::string format_address(Address address, size_t num_lines) {
    std::string out(num_lines, '0');
    for (size_t k = 0; k < num_lines; k++) {
        if ((address >> k) & 1) {
            out[num_lines - 1 - k] = '1';
        }
    }
    return out;
}

}  // namespace statcore
