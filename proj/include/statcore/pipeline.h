#ifndef STATCORE_PIPELINE_H
#define STATCORE_PIPELINE_H

#include <optional>
#include <string>
#include <vector>

#include "statcore/analysis.h"
#include "statcore/circuit_format.h"
#include "statcore/state_core.h"
#include "statcore/transforms.h"

namespace statcore {

struct RunReport {
    /// Core contents after the last step, in logical address order.
    LogicalVector final_core_vector;
    /// Present iff the program asked for post-processing.
    std::optional<LogicalVector> spectrum;
    /// Common factor of the spectrum, or of the core vector when there is no spectrum.
    FactoredVector factored;
    std::optional<SpectralReport> spectral_report;
    /// Indices of steps with more than two controls.
    std::vector<size_t> unpriced_steps;
};

/// preprocess -> load into core -> apply every step -> readout -> optional fwht -> factor.
RunReport run_program(const Program &program, size_t max_lines = kDefaultMaxLines);

struct ClassifyReport {
    TruthTable table;
    Program program;
    RunReport run;
    SpectralReport spectral;
    GroundTruth truth;
    /// Non-empty when the spectral verdicts contradict the truth table. Always an internal error.
    std::vector<std::string> disagreements;
};

/// Wraps the synthesized oracle in init 0...01, pre and post Hadamard, runs it and compares the
/// spectral verdicts with direct inspection of the table.
ClassifyReport classify_function(const TruthTable &tt, size_t max_lines = kDefaultMaxLines);

}  // namespace statcore

#endif
