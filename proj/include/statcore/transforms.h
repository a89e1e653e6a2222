#ifndef STATCORE_TRANSFORMS_H
#define STATCORE_TRANSFORMS_H

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "statcore/gate_model.h"

namespace statcore {

/// Exact integer vector indexed by logical address. Length is always a power of two.
using LogicalVector = std::vector<int64_t>;

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// log2 of the vector length. Throws std::invalid_argument if the length is not a power of two.
size_t line_count_of(const LogicalVector &vec);

/// Unnormalized Walsh-Hadamard transform, out[a] = sum_x (-1)^popcount(a & x) * vec[x].
/// Throws OverflowError if an intermediate sum leaves int64 range.
LogicalVector fwht(LogicalVector vec);

struct FactoredVector {
    int64_t factor = 1;
    LogicalVector reduced;
};

/// Pulls the gcd of the entries out as a positive factor. The zero vector has factor 1.
FactoredVector extract_common_factor(const LogicalVector &vec);

/// Basis vector at `basis_index`, optionally Hadamard transformed into a +-1 character vector.
LogicalVector preprocess(size_t num_lines, Address basis_index, bool apply_hadamard);

}  // namespace statcore

#endif
