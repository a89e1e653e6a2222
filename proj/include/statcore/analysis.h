#ifndef STATCORE_ANALYSIS_H
#define STATCORE_ANALYSIS_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "statcore/gate_model.h"
#include "statcore/transforms.h"

namespace statcore {

/// Boolean function f on `domain_bits` inputs. values[i] is f(i).
///
/// In an oracle circuit the domain occupies lines A1..A_x (index LSB on A1, MSB on A_x) and A0
/// records the function value.
struct TruthTable {
    size_t domain_bits = 0;
    std::vector<bool> values;

    /// Parses '0'/'1' characters, ignoring ',' and '|'. The length must be a power of two.
    static TruthTable parse(std::string_view text);

    static TruthTable from_values(std::vector<bool> values);

    /// Groups of four separated by ',' when the table is longer than four, e.g. "0111,0001".
    std::string str() const;

    bool operator==(const TruthTable &other) const = default;
};

/// Product of the circuit lines set in `lines` (bit k is A_k). Zero is the constant-1 term.
struct Monomial {
    Address lines = 0;

    size_t degree() const;
    bool operator==(const Monomial &other) const = default;
};

/// Algebraic normal form over GF(2): f = XOR of the returned monomials.
/// Sorted by degree, then by line-set value.
std::vector<Monomial> anf(const TruthTable &tt);

/// Permutation oracle on domain_bits + 1 lines mapping |a, b> to |a, b ^ f(a)>, built as one
/// multi-controlled NOT on A0 per ANF monomial. Controls are listed highest line first.
Circuit synthesize_oracle(const TruthTable &tt);

struct SpectralReport {
    LogicalVector spectrum;
    /// Signed entry at the marker address 0...01.
    int64_t marker_entry = 0;
    bool is_single_basis = false;
    std::optional<Address> basis_address;
    bool constant = false;
    bool balanced = false;
    bool affine = false;
};

/// Reads the function class off a post-Hadamard spectrum on `num_lines` lines.
SpectralReport classify_spectrum(const LogicalVector &spectrum, size_t num_lines);

struct GroundTruth {
    bool constant = false;
    std::optional<bool> constant_value;
    bool balanced = false;
    bool symmetric = false;
    bool anti_symmetric = false;
};

/// Direct truth-table inspection. Each flag is computed on its own.
GroundTruth classify_truth_table(const TruthTable &tt);

}  // namespace statcore

#endif
