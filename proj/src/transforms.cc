#include "statcore/transforms.h"

#include <bit>
#include <numeric>
#include <string>
#include <utility>

namespace statcore {

size_t line_count_of(const LogicalVector &vec) {
    if (!std::has_single_bit(vec.size())) {
        throw std::invalid_argument("vector length " + std::to_string(vec.size()) + " is not a power of two");
    }
    return std::countr_zero(vec.size());
}

LogicalVector fwht(LogicalVector vec) {
    line_count_of(vec);
    const size_t n = vec.size();
    for (size_t half = 1; half < n; half <<= 1) {
        for (size_t block = 0; block < n; block += half << 1) {
            for (size_t i = block; i < block + half; i++) {
                int64_t a = vec[i];
                int64_t b = vec[i + half];
                if (__builtin_add_overflow(a, b, &vec[i]) || __builtin_sub_overflow(a, b, &vec[i + half])) {
                    throw OverflowError("Walsh-Hadamard butterfly overflowed 64-bit integers");
                }
            }
        }
    }
    return vec;
}

FactoredVector extract_common_factor(const LogicalVector &vec) {
    uint64_t g = 0;
    for (int64_t v : vec) {
        uint64_t mag = v < 0 ? uint64_t{0} - static_cast<uint64_t>(v) : static_cast<uint64_t>(v);
        g = std::gcd(g, mag);
    }
    if (g == 0) {
        return {1, vec};
    }
    if (g > static_cast<uint64_t>(INT64_MAX)) {
        // Only reachable when every entry is INT64_MIN.
        throw OverflowError("common factor does not fit a signed 64-bit integer");
    }
    FactoredVector out{static_cast<int64_t>(g), vec};
    for (int64_t &v : out.reduced) {
        v /= out.factor;
    }
    return out;
}

LogicalVector preprocess(size_t num_lines, Address basis_index, bool apply_hadamard) {
    if (num_lines > kMaxAddressBits) {
        throw std::invalid_argument("too many lines: " + std::to_string(num_lines));
    }
    Address size = Address{1} << num_lines;
    if (basis_index >= size) {
        throw std::invalid_argument(
            "basis index " + std::to_string(basis_index) + " out of range for " + std::to_string(num_lines) + " lines");
    }
    LogicalVector vec(size, 0);
    vec[basis_index] = 1;
    if (apply_hadamard) {
        return fwht(std::move(vec));
    }
    return vec;
}

}  // namespace statcore
