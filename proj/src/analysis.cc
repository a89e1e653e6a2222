#include "statcore/analysis.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace statcore {

TruthTable TruthTable::parse(std::string_view text) {
    std::vector<bool> values;
    for (char c : text) {
        switch (c) {
            case '0':
                values.push_back(false);
                break;
            case '1':
                values.push_back(true);
                break;
            case ',':
            case '|':
                break;
            default:
                throw std::invalid_argument(std::string("unexpected character '") + c + "' in truth table");
        }
    }
    return from_values(std::move(values));
}

TruthTable TruthTable::from_values(std::vector<bool> values) {
    if (!std::has_single_bit(values.size())) {
        throw std::invalid_argument(
            "truth table length " + std::to_string(values.size()) + " is not a power of two");
    }
    if (values.size() > (size_t{1} << (kMaxAddressBits - 1))) {
        throw std::invalid_argument("truth table too large");
    }
    TruthTable tt;
    tt.domain_bits = std::countr_zero(values.size());
    tt.values = std::move(values);
    return tt;
}

std::string TruthTable::str() const {
    std::string out;
    for (size_t i = 0; i < values.size(); i++) {
        if (i && i % 4 == 0) {
            out.push_back(',');
        }
        out.push_back(values[i] ? '1' : '0');
    }
    return out;
}

size_t Monomial::degree() const {
    return std::popcount(lines);
}

std::vector<Monomial> anf(const TruthTable &tt) {
    std::vector<uint8_t> coef(tt.values.begin(), tt.values.end());
    const size_t size = coef.size();
    // Moebius transform: coef[m] becomes the XOR of f over all subsets of m.
    for (size_t half = 1; half < size; half <<= 1) {
        for (size_t i = 0; i < size; i++) {
            if (i & half) {
                coef[i] ^= coef[i ^ half];
            }
        }
    }
    std::vector<Monomial> out;
    for (size_t m = 0; m < size; m++) {
        if (coef[m]) {
            out.push_back(Monomial{static_cast<Address>(m) << 1});
        }
    }
    std::sort(out.begin(), out.end(), [](const Monomial &a, const Monomial &b) {
        if (a.degree() != b.degree()) {
            return a.degree() < b.degree();
        }
        return a.lines < b.lines;
    });
    return out;
}

Circuit synthesize_oracle(const TruthTable &tt) {
    Circuit circuit{tt.domain_bits + 1, {}};
    for (const Monomial &m : anf(tt)) {
        GateStep step{0, {}};
        for (Line k = static_cast<Line>(tt.domain_bits); k >= 1; k--) {
            if ((m.lines >> k) & 1) {
                step.controls.push_back(k);
            }
        }
        circuit.steps.push_back(std::move(step));
    }
    return circuit;
}

SpectralReport classify_spectrum(const LogicalVector &spectrum, size_t num_lines) {
    if (num_lines < 1 || num_lines > kMaxAddressBits || spectrum.size() != (size_t{1} << num_lines)) {
        throw std::invalid_argument(
            "spectrum of length " + std::to_string(spectrum.size()) + " does not match " +
            std::to_string(num_lines) + " lines");
    }
    constexpr Address marker = 1;
    SpectralReport report;
    report.spectrum = spectrum;
    report.marker_entry = spectrum[marker];

    size_t nonzero = 0;
    Address last = 0;
    for (Address a = 0; a < spectrum.size(); a++) {
        if (spectrum[a] != 0) {
            nonzero++;
            last = a;
        }
    }
    report.is_single_basis = nonzero == 1;
    if (report.is_single_basis) {
        report.basis_address = last;
    }

    uint64_t full = uint64_t{1} << num_lines;
    uint64_t marker_mag = report.marker_entry < 0 ? uint64_t{0} - static_cast<uint64_t>(report.marker_entry)
                                                  : static_cast<uint64_t>(report.marker_entry);
    report.constant = marker_mag == full;
    report.balanced = report.marker_entry == 0;
    report.affine = report.is_single_basis;
    return report;
}

GroundTruth classify_truth_table(const TruthTable &tt) {
    const auto &v = tt.values;
    GroundTruth g;
    g.constant = std::all_of(v.begin(), v.end(), [&](bool b) { return b == v.front(); });
    if (g.constant) {
        g.constant_value = v.front();
    }
    size_t ones = std::count(v.begin(), v.end(), true);
    g.balanced = v.size() >= 2 && ones * 2 == v.size();
    g.symmetric = std::equal(v.begin(), v.end(), v.rbegin());
    g.anti_symmetric = true;
    for (size_t i = 0; i < v.size(); i++) {
        if (v[v.size() - 1 - i] == v[i]) {
            g.anti_symmetric = false;
            break;
        }
    }
    return g;
}

}  // namespace statcore
