#include "statcore/transforms.h"

#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "oracles.h"
#include "statcore/verify.h"

using namespace statcore;

namespace {

LogicalVector random_wide(std::mt19937_64 &rng, size_t n, int64_t bound) {
    LogicalVector v(size_t{1} << n);
    for (auto &e : v) {
        e = static_cast<int64_t>(draw_below(rng, 2 * bound + 1)) - bound;
    }
    return v;
}

}  // namespace

TEST(transforms, fwht_of_basis_one) {
    EXPECT_EQ(fwht({0, 1, 0, 0, 0, 0, 0, 0}), (LogicalVector{1, -1, 1, -1, 1, -1, 1, -1}));
}

TEST(transforms, fwht_of_xor_result_is_eight_at_111) {
    LogicalVector expected = statcore_test::brute_force_hadamard({1, -1, -1, 1, -1, 1, 1, -1});
    ASSERT_EQ(expected, (LogicalVector{0, 0, 0, 0, 0, 0, 0, 8}));
    EXPECT_EQ(fwht({1, -1, -1, 1, -1, 1, 1, -1}), expected);
}

TEST(transforms, fwht_rejects_non_power_of_two) {
    EXPECT_THROW(fwht({1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(fwht({}), std::invalid_argument);
    EXPECT_EQ(fwht({5}), (LogicalVector{5}));
}

TEST(transforms, fwht_detects_overflow) {
    EXPECT_THROW(fwht({INT64_MAX, 1}), OverflowError);
    EXPECT_THROW(fwht({INT64_MIN, 1}), OverflowError);
}

TEST(transforms, fwht_matches_double_sum) {
    std::mt19937_64 rng(5);
    for (size_t n = 1; n <= 10; n++) {
        LogicalVector v = random_wide(rng, n, 1000);
        EXPECT_EQ(fwht(v), statcore_test::brute_force_hadamard(v)) << n;
    }
}

TEST(transforms, fwht_involution_parseval_linearity) {
    std::mt19937_64 rng(9);
    for (size_t n = 1; n <= 10; n++) {
        for (int trial = 0; trial < 10; trial++) {
            LogicalVector u = random_wide(rng, n, 50);
            LogicalVector v = random_wide(rng, n, 50);
            LogicalVector fu = fwht(u);

            LogicalVector twice = fwht(fu);
            int64_t sum_u = 0;
            int64_t sum_fu = 0;
            for (size_t i = 0; i < u.size(); i++) {
                EXPECT_EQ(twice[i], (int64_t{1} << n) * u[i]);
                sum_u += u[i] * u[i];
                sum_fu += fu[i] * fu[i];
            }
            EXPECT_EQ(sum_fu, (int64_t{1} << n) * sum_u);

            LogicalVector combo(u.size());
            for (size_t i = 0; i < u.size(); i++) {
                combo[i] = 3 * u[i] - 7 * v[i];
            }
            LogicalVector fv = fwht(v);
            LogicalVector fcombo = fwht(combo);
            for (size_t i = 0; i < u.size(); i++) {
                EXPECT_EQ(fcombo[i], 3 * fu[i] - 7 * fv[i]);
            }
        }
    }
}

TEST(transforms, basis_transforms_to_character) {
    for (size_t n = 1; n <= 6; n++) {
        for (Address i = 0; i < (Address{1} << n); i++) {
            LogicalVector f = preprocess(n, i, true);
            for (Address x = 0; x < f.size(); x++) {
                EXPECT_EQ(f[x], (std::popcount(i & x) & 1) ? -1 : 1);
            }
        }
    }
}

TEST(transforms, extract_common_factor) {
    auto eight = extract_common_factor({0, 0, 0, 0, 0, 0, 0, 8});
    EXPECT_EQ(eight.factor, 8);
    EXPECT_EQ(eight.reduced, (LogicalVector{0, 0, 0, 0, 0, 0, 0, 1}));

    auto reduced = extract_common_factor({1, -1, 1, -1});
    EXPECT_EQ(reduced.factor, 1);
    EXPECT_EQ(reduced.reduced, (LogicalVector{1, -1, 1, -1}));

    auto zero = extract_common_factor({0, 0, 0, 0});
    EXPECT_EQ(zero.factor, 1);
    EXPECT_EQ(zero.reduced, (LogicalVector{0, 0, 0, 0}));

    auto mixed = extract_common_factor({-6, 4, 0, 10});
    EXPECT_EQ(mixed.factor, 2);
    EXPECT_EQ(mixed.reduced, (LogicalVector{-3, 2, 0, 5}));
}

TEST(transforms, extract_common_factor_reconstructs) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; trial++) {
        LogicalVector v = random_wide(rng, 1 + draw_below(rng, 6), 100);
        int64_t k = 1 + static_cast<int64_t>(draw_below(rng, 9));
        for (auto &e : v) e *= k;
        auto f = extract_common_factor(v);
        EXPECT_GT(f.factor, 0);
        EXPECT_EQ(f.factor % k, 0);
        for (size_t i = 0; i < v.size(); i++) {
            EXPECT_EQ(f.factor * f.reduced[i], v[i]);
        }
    }
}

TEST(transforms, preprocess) {
    EXPECT_EQ(preprocess(3, 0b001, true), (LogicalVector{1, -1, 1, -1, 1, -1, 1, -1}));
    EXPECT_EQ(preprocess(3, 0b001, false), (LogicalVector{0, 1, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(preprocess(2, 0, true), (LogicalVector{1, 1, 1, 1}));
    EXPECT_THROW(preprocess(3, 8, true), std::invalid_argument);
}
