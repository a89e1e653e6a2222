#ifndef STATCORE_VERIFY_H
#define STATCORE_VERIFY_H

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>

#include "statcore/gate_model.h"
#include "statcore/state_core.h"
#include "statcore/transforms.h"

namespace statcore {

struct VerifyOptions {
    uint64_t seed = 1;
    size_t trials = 200;
    size_t max_lines = 10;
    size_t max_depth = 64;
};

/// Anything that executes a circuit data-stationarily. Swappable so the checker can be tested.
using StationaryExecutor = std::function<LogicalVector(const Circuit &, std::span<const int64_t>)>;

struct Counterexample {
    size_t trial = 0;
    Circuit circuit;
    LogicalVector start;
    LogicalVector stationary;
    LogicalVector dense;
};

struct VerifyResult {
    size_t trials_run = 0;
    std::optional<Counterexample> failure;

    bool passed() const {
        return !failure.has_value();
    }
};

/// Uniform in [0, bound). Fixed arithmetic so streams reproduce across standard libraries.
uint64_t draw_below(std::mt19937_64 &rng, uint64_t bound);

/// Random valid step on `num_lines` lines with at most `max_controls` controls.
GateStep random_step(std::mt19937_64 &rng, size_t num_lines, size_t max_controls = 3);

Circuit random_circuit(std::mt19937_64 &rng, size_t num_lines, size_t depth);

LogicalVector random_trits(std::mt19937_64 &rng, size_t num_lines);

/// Runs random (circuit, trit vector) pairs through `executor` and run_dense, stopping at the
/// first mismatch. Deterministic in options.seed.
VerifyResult verify_equivalence(const VerifyOptions &options, const StationaryExecutor &executor = {});

}  // namespace statcore

#endif
