#include "statcore/pipeline.h"

#include "statcore/cost_model.h"

namespace statcore {

RunReport run_program(const Program &program, size_t max_lines) {
    program.circuit().validate();
    LogicalVector start = preprocess(program.num_lines, program.init_index(), program.pre_hadamard);

    StateCore core = StateCore::load_signs(program.num_lines, start, max_lines);
    RunReport report;
    for (size_t i = 0; i < program.steps.size(); i++) {
        if (!hardware_supported(program.steps[i])) {
            report.unpriced_steps.push_back(i);
        }
        core.apply_step(program.steps[i]);
    }
    report.final_core_vector = core.readout();

    if (program.post_hadamard) {
        report.spectrum = fwht(report.final_core_vector);
        report.factored = extract_common_factor(*report.spectrum);
        report.spectral_report = classify_spectrum(*report.spectrum, program.num_lines);
    } else {
        report.factored = extract_common_factor(report.final_core_vector);
    }
    return report;
}

ClassifyReport classify_function(const TruthTable &tt, size_t max_lines) {
    ClassifyReport r;
    r.table = tt;
    Circuit oracle = synthesize_oracle(tt);
    r.program.num_lines = oracle.num_lines;
    r.program.pre_hadamard = true;
    r.program.steps = std::move(oracle.steps);
    r.program.post_hadamard = true;

    r.run = run_program(r.program, max_lines);
    r.spectral = *r.run.spectral_report;
    r.truth = classify_truth_table(tt);

    if (r.spectral.constant != r.truth.constant) {
        r.disagreements.push_back(
            std::string("spectrum says ") + (r.spectral.constant ? "constant" : "not constant") +
            ", truth table says " + (r.truth.constant ? "constant" : "not constant"));
    }
    if (r.spectral.balanced != r.truth.balanced) {
        r.disagreements.push_back(
            std::string("spectrum says ") + (r.spectral.balanced ? "balanced" : "not balanced") +
            ", truth table says " + (r.truth.balanced ? "balanced" : "not balanced"));
    }
    if (r.spectral.affine && !(r.truth.symmetric || r.truth.anti_symmetric)) {
        r.disagreements.push_back("single-basis spectrum but truth table is neither symmetric nor anti-symmetric");
    }
    return r;
}

}  // namespace statcore
