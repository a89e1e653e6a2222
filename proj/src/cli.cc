#include "statcore/cli.h"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "statcore/circuit_format.h"
#include "statcore/cost_model.h"
#include "statcore/pipeline.h"
#include "statcore/verify.h"

namespace statcore {

using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

size_t line_cap_from_env() {
    const char *env = std::getenv("STATCORE_MAX_N");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaxLines;
    }
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v < 1 || v > kMaxAddressBits) {
        throw UsageError("STATCORE_MAX_N must be an integer in [1, " + std::to_string(kMaxAddressBits) + "]");
    }
    return v;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string yes_no(bool b) {
    return b ? "yes" : "no";
}

void warn_unpriced(const std::vector<GateStep> &steps, const std::vector<size_t> &unpriced, std::ostream &err) {
    for (size_t i : unpriced) {
        err << "warning: step " << i + 1 << " (" << emit_step(steps[i]) << ") has " << steps[i].controls.size()
            << " controls; the hardware cost model covers at most 2\n";
    }
}

ordered_json spectral_json(const SpectralReport &s, size_t num_lines) {
    ordered_json j;
    j["marker_address"] = format_address(1, num_lines);
    j["marker_entry"] = s.marker_entry;
    j["single_basis"] = s.is_single_basis;
    j["basis_address"] = s.basis_address ? ordered_json(format_address(*s.basis_address, num_lines)) : ordered_json();
    j["constant"] = s.constant;
    j["balanced"] = s.balanced;
    j["affine"] = s.affine;
    return j;
}

void print_spectral_text(const SpectralReport &s, size_t num_lines, std::ostream &out) {
    out << "marker    " << format_address(1, num_lines) << " -> " << s.marker_entry << "\n";
    out << "basis     " << (s.basis_address ? format_address(*s.basis_address, num_lines) : "none") << "\n";
    out << "constant  " << yes_no(s.constant) << "\n";
    out << "balanced  " << yes_no(s.balanced) << "\n";
    out << "affine    " << yes_no(s.affine) << "\n";
}

int cmd_run(const std::string &path, const std::string &format, std::ostream &out, std::ostream &err) {
    Program program;
    try {
        program = parse_program(read_file(path));
    } catch (const ParseError &e) {
        err << path << ":" << e.line() << ": " << e.reason() << "\n";
        return kExitUsage;
    }
    size_t cap = line_cap_from_env();
    if (program.num_lines > cap) {
        err << path << ": " << program.num_lines << " lines exceeds the cap of " << cap
            << " (set STATCORE_MAX_N to raise it)\n";
        return kExitUsage;
    }
    RunReport r = run_program(program, cap);
    warn_unpriced(program.steps, r.unpriced_steps, err);

    if (format == "structured") {
        ordered_json j;
        j["lines"] = program.num_lines;
        j["init"] = format_address(program.init_index(), program.num_lines);
        j["steps"] = program.steps.size();
        j["core"] = r.final_core_vector;
        j["spectrum"] = r.spectrum ? ordered_json(*r.spectrum) : ordered_json();
        j["common_factor"] = r.factored.factor;
        j["reduced"] = r.factored.reduced;
        j["spectral_report"] =
            r.spectral_report ? spectral_json(*r.spectral_report, program.num_lines) : ordered_json();
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "lines     " << program.num_lines << "\n";
    out << "init      " << format_address(program.init_index(), program.num_lines) << "\n";
    out << "steps     " << program.steps.size() << "\n";
    out << "core      " << format_vector(r.final_core_vector) << "\n";
    if (r.spectrum) {
        out << "spectrum  " << format_vector(*r.spectrum) << "\n";
    }
    out << "factor    " << r.factored.factor << "\n";
    out << "reduced   " << format_vector(r.factored.reduced) << "\n";
    if (r.spectral_report) {
        print_spectral_text(*r.spectral_report, program.num_lines, out);
    }
    return kExitOk;
}

int cmd_classify(const std::string &table, const std::string &format, std::ostream &out, std::ostream &err) {
    TruthTable tt;
    try {
        tt = TruthTable::parse(table);
    } catch (const std::invalid_argument &e) {
        err << "bad truth table: " << e.what() << "\n";
        return kExitUsage;
    }
    size_t cap = line_cap_from_env();
    if (tt.domain_bits + 1 > cap) {
        err << "truth table needs " << tt.domain_bits + 1 << " lines, over the cap of " << cap << "\n";
        return kExitUsage;
    }
    ClassifyReport r = classify_function(tt, cap);
    warn_unpriced(r.program.steps, r.run.unpriced_steps, err);
    size_t n = r.program.num_lines;

    if (format == "structured") {
        ordered_json j;
        j["table"] = tt.str();
        j["lines"] = n;
        std::vector<std::string> steps;
        for (const auto &s : r.program.steps) {
            steps.push_back(emit_step(s));
        }
        j["oracle"] = steps;
        j["spectrum"] = r.spectral.spectrum;
        j["spectral"] = spectral_json(r.spectral, n);
        j["truth"] = {
            {"constant", r.truth.constant},
            {"balanced", r.truth.balanced},
            {"symmetric", r.truth.symmetric},
            {"anti_symmetric", r.truth.anti_symmetric},
        };
        j["disagreements"] = r.disagreements;
        out << j.dump(2) << "\n";
    } else {
        out << "table     " << tt.str() << "\n";
        out << "oracle    ";
        if (r.program.steps.empty()) {
            out << "(no steps)";
        }
        for (size_t i = 0; i < r.program.steps.size(); i++) {
            out << (i ? "; " : "") << emit_step(r.program.steps[i]);
        }
        out << "\n";
        out << "spectrum  " << format_vector(r.spectral.spectrum) << "\n";
        print_spectral_text(r.spectral, n, out);
        out << "truth     constant=" << yes_no(r.truth.constant) << " balanced=" << yes_no(r.truth.balanced)
            << " symmetric=" << yes_no(r.truth.symmetric) << " anti_symmetric=" << yes_no(r.truth.anti_symmetric)
            << "\n";
        out << "agreement " << (r.disagreements.empty() ? "ok" : "MISMATCH") << "\n";
    }
    for (const auto &d : r.disagreements) {
        err << "internal error: " << d << "\n";
    }
    return r.disagreements.empty() ? kExitOk : kExitFailure;
}

int cmd_cost(const std::string &config_path, const std::string &format, std::ostream &out, std::ostream &err) {
    TechParams params;
    if (!config_path.empty()) {
        try {
            params = TechParams::parse_config(read_file(config_path));
        } catch (const std::invalid_argument &e) {
            err << config_path << ": " << e.what() << "\n";
            return kExitUsage;
        }
    }
    CostReport r = wafer_report(params);
    if (format == "structured") {
        ordered_json j;
        j["transistors_per_word"] = r.transistors_per_word;
        j["wafer_transistors"] = r.wafer_transistors;
        j["word_capacity"] = r.word_capacity;
        j["word_capacity_gw"] = r.word_capacity_gw;
        j["address_space_bits"] = r.address_space_bits;
        j["gate_delay_ns"] = r.gate_delay_ns;
        j["feasible"] = r.feasible;
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    std::ostringstream gw;
    gw << std::fixed << std::setprecision(2) << r.word_capacity_gw;
    out << std::left;
    out << std::setw(22) << "transistors per word" << r.transistors_per_word << "\n";
    out << std::setw(22) << "wafer transistors" << r.wafer_transistors << "\n";
    out << std::setw(22) << "word capacity" << r.word_capacity << " (" << gw.str() << " GW, 1 GW = 2^30 words)\n";
    out << std::setw(22) << "address space bits" << r.address_space_bits << "\n";
    out << std::setw(22) << "gate delay" << r.gate_delay_ns << " ns\n";
    if (!r.feasible) {
        out << "infeasible: the wafer cannot hold a single word\n";
    }
    return kExitOk;
}

int cmd_verify(const VerifyOptions &options, std::ostream &out) {
    size_t cap = line_cap_from_env();
    if (options.max_lines > cap) {
        throw UsageError("--max-n " + std::to_string(options.max_lines) + " exceeds the cap of " + std::to_string(cap));
    }
    VerifyResult r = verify_equivalence(options);
    if (r.passed()) {
        out << "PASS " << r.trials_run << " trials (seed " << options.seed << ", n <= " << options.max_lines
            << ", depth <= " << options.max_depth << ")\n";
        return kExitOk;
    }
    const Counterexample &c = *r.failure;
    Program p{c.circuit.num_lines, std::nullopt, false, c.circuit.steps, false};
    out << "FAIL at trial " << c.trial << " (seed " << options.seed << ")\n";
    out << "circuit:\n" << emit_program(p);
    out << "start      " << format_vector(c.start) << "\n";
    out << "stationary " << format_vector(c.stationary) << "\n";
    out << "dense      " << format_vector(c.dense) << "\n";
    return kExitFailure;
}

}  // namespace

std::string format_vector(const LogicalVector &vec) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < vec.size(); i++) {
        if (i) {
            out << (i % 4 == 0 ? ", " : " ");
        }
        out << vec[i];
    }
    out << ")";
    return out.str();
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Data-stationary quantum circuit emulator"};
    app.require_subcommand(1);

    std::string run_file;
    std::string format = "text";
    auto *run = app.add_subcommand("run", "Execute a .qwd wiring diagram");
    run->add_option("file", run_file, "Program file")->required();
    run->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

    std::string table;
    auto *classify = app.add_subcommand("classify", "Classify a boolean function with one oracle call");
    classify->add_option("table", table, "Truth table, e.g. 01,10")->required();
    classify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

    std::string config;
    auto *cost = app.add_subcommand("cost", "Print the hardware size and speed estimate");
    cost->add_option("--config", config, "key = value file overriding technology parameters");
    cost->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

    VerifyOptions verify_options;
    auto *verify = app.add_subcommand("verify", "Check data-stationary execution against the dense reference");
    verify->add_option("--seed", verify_options.seed, "Random seed");
    verify->add_option("--trials", verify_options.trials, "Number of random circuits");
    verify->add_option("--max-n", verify_options.max_lines, "Largest line count")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) {
            return cmd_run(run_file, format, out, err);
        }
        if (classify->parsed()) {
            return cmd_classify(table, format, out, err);
        }
        if (cost->parsed()) {
            return cmd_cost(config, format, out, err);
        }
        return cmd_verify(verify_options, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace statcore
