#ifndef STATCORE_CIRCUIT_FORMAT_H
#define STATCORE_CIRCUIT_FORMAT_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "statcore/gate_model.h"

namespace statcore {

/// A complete run: initial basis state, optional Hadamard pre/post processing, and the wiring
/// diagram in between.
struct Program {
    size_t num_lines = 0;
    /// Explicit `init` directive, if any. Absent means basis state 0...01.
    std::optional<Address> init;
    bool pre_hadamard = false;
    std::vector<GateStep> steps;
    bool post_hadamard = false;

    Address init_index() const {
        return init.value_or(1);
    }

    Circuit circuit() const {
        return Circuit{num_lines, steps};
    }

    bool operator==(const Program &other) const = default;
};

struct ParseError : std::runtime_error {
    ParseError(size_t line, const std::string &reason);

    size_t line() const {
        return line_;
    }
    const std::string &reason() const {
        return reason_;
    }

   private:
    size_t line_;
    std::string reason_;
};

/// Parses a `.qwd` wiring diagram:
///
///     # comment
///     lines 3
///     init 001
///     pre hadamard
///     step CX A1 A0
///     step CX A2 A0
///     post hadamard
///
/// Step forms are `X At`, `CX Ac At`, `CCX Ac1 Ac2 At` and `MCX Ac1 ... Acm At`; the last line
/// named is the target. Directives must appear in the order shown. Throws ParseError.
Program parse_program(std::string_view text);

/// Canonical text for `program`, LF line endings. parse_program(emit_program(p)) == p.
std::string emit_program(const Program &program);

/// Canonical text of a single step, e.g. "step CCX A2 A1 A0".
std::string emit_step(const GateStep &step);

}  // namespace statcore

#endif
