#ifndef STATCORE_GATE_MODEL_H
#define STATCORE_GATE_MODEL_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace statcore {

/// Index of a wire in a wiring diagram. Line A_k addresses bit k of a tag (A0 is the LSB).
using Line = uint32_t;

/// An n-bit address. Bit k is line A_k.
using Address = uint64_t;

/// Widest address the emulator can represent.
constexpr size_t kMaxAddressBits = 63;

/// One wiring-diagram step: flip `target` on every address whose `controls` all read 1.
///
/// No controls is an unconditional NOT (UNC), one is a single controlled NOT (SCN), two is a
/// double controlled NOT (DCN). More than two controls is accepted in software only.
struct GateStep {
    Line target = 0;
    std::vector<Line> controls;

    Address control_mask() const;
    Address target_mask() const {
        return Address{1} << target;
    }

    bool operator==(const GateStep &other) const = default;
};

enum class StepViolationKind {
    TargetInControls,
    IndexOutOfRange,
    DuplicateControl,
};

struct StepViolation {
    StepViolationKind kind;
    std::string description;
};

/// Checks a step against a line count. Returns nullopt when the step is valid.
std::optional<StepViolation> validate_step(const GateStep &step, size_t num_lines);

/// Like validate_step, but throws std::invalid_argument with the violation description.
void require_valid_step(const GateStep &step, size_t num_lines);

/// Every interchange a step performs, as pairs {a, a ^ 2^target} with the smaller address first,
/// listed in ascending order of the smaller address.
std::vector<std::pair<Address, Address>> swap_pairs(const GateStep &step, size_t num_lines);

struct Circuit {
    size_t num_lines = 0;
    std::vector<GateStep> steps;

    /// Throws std::invalid_argument if any step is invalid for num_lines.
    void validate() const;

    bool operator==(const Circuit &other) const = default;
};

/// Formats an address MSB-first, e.g. format_address(3, 4) == "0011".
std::string format_address(Address address, size_t num_lines);

}  // namespace statcore

#endif
