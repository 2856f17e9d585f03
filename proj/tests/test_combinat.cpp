#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wmas/combinat.hpp"

using namespace wmas;

TEST(IntPolynomial, ArithmeticAndNormalisation) {
    const IntPolynomial one = IntPolynomial::constant(1), x = IntPolynomial::monomial(1);
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_EQ((x - x).degree(), -1);
    const auto p = (one + x) * (one - x);
    EXPECT_EQ(p, one - IntPolynomial::monomial(2));
    EXPECT_EQ(p.evaluate(3), -8);
    EXPECT_EQ(p.str(), "1 - x^2");
    EXPECT_EQ(p.exact_div(one + x), one - x);
    EXPECT_THROW((void)(one + x * x).exact_div(one + x), std::domain_error);
    EXPECT_THROW((void)one.exact_div(IntPolynomial{}), std::domain_error);
    EXPECT_EQ(p.truncated_mul(p, 2), one - IntPolynomial::monomial(2, 2));
}

TEST(Partitions, PublishedValues) {
    EXPECT_EQ(partition_count(0), 1);
    EXPECT_EQ(partition_count(5), 7);
    EXPECT_EQ(partition_count(100), BigInt("190569292"));
}

TEST(Partitions, PentagonalMatchesRecursionOracle) {
    const auto p = partition_counts_upto(120);
    for (int n = 0; n <= 120; ++n) EXPECT_EQ(p[static_cast<std::size_t>(n)], oracle::partitions(n)) << n;
}

TEST(Partitions, BoundedPartsMatchOracle) {
    for (std::size_t s = 1; s <= 6; ++s) {
        const auto series = bounded_part_partition_series(60, s);
        for (int e = 0; e <= 60; ++e) EXPECT_EQ(series[static_cast<std::size_t>(e)], oracle::partitions_max_part(e, static_cast<int>(s)));
    }
    EXPECT_EQ(bounded_part_partition_count(9, 2), 5);
    EXPECT_EQ(bounded_part_partition_count(0, 3), 1);
    // s >= e: no restriction
    EXPECT_EQ(bounded_part_partition_count(15, 20), partition_count(15));
}

TEST(Asymptotics, RamanujanRatioTendsToOne) {
    double prev = 0;
    for (std::size_t n : {100u, 400u, 1600u}) {
        const double ratio = partition_count(n).convert_to<double>() / ramanujan_asymptotic(n);
        EXPECT_LT(std::abs(1 - ratio), 0.05) << n;
        if (prev > 0) { EXPECT_LT(std::abs(1 - ratio), std::abs(1 - prev)); }
        prev = ratio;
    }
    EXPECT_THROW(ramanujan_asymptotic(0), std::invalid_argument);
}

TEST(Asymptotics, SchurFixedPartBound) {
    // p_{<=s}(e) ~ e^{s-1} / (s!(s-1)!)
    for (std::size_t s : {2u, 3u, 4u}) {
        const std::size_t e = 4000;
        const double ratio = bounded_part_partition_count(e, s).convert_to<double>() / schur_asymptotic(e, s);
        EXPECT_NEAR(ratio, 1.0, 0.02) << s;
    }
    EXPECT_DOUBLE_EQ(schur_asymptotic(10, 2), 5.0);
    EXPECT_THROW(schur_asymptotic(10, 1), std::invalid_argument);
}

TEST(Binomial, MatchesPascal) {
    for (int n = 0; n <= 40; ++n)
        for (int k = 0; k <= n + 2; ++k) EXPECT_EQ(binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(k)), oracle::binomial(n, k));
    EXPECT_EQ(binomial(112, 32), BigInt("10484776488844408407191115273"));
}

TEST(GaussianBinomial, MatchesRecursionOracle) {
    for (int n = 0; n <= 14; ++n)
        for (int m = 0; m <= n; ++m) {
            const auto g = gaussian_binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
            EXPECT_EQ(g.coefficients(), oracle::gaussian(n, m)) << n << "," << m;
            // at x = 1 it degenerates to C(n, m)
            EXPECT_EQ(g.evaluate(1), binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(m)));
        }
    EXPECT_THROW(gaussian_binomial(2, 3), std::invalid_argument);
}

TEST(GaussianBinomial, SymmetricAndPalindromic) {
    for (std::size_t n = 1; n <= 12; ++n)
        for (std::size_t m = 0; m <= n; ++m) {
            const auto g = gaussian_binomial(n, m);
            EXPECT_EQ(g, gaussian_binomial(n, n - m));
            const auto& c = g.coefficients();
            EXPECT_EQ(static_cast<std::size_t>(g.degree()), m * (n - m));
            for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c[i], c[c.size() - 1 - i]);
        }
}

TEST(Compositions, WeakCompositionCumulative) {
    for (int e = 0; e <= 12; ++e)
        for (int k = 1; k <= 5; ++k)
            EXPECT_EQ(weak_composition_cumulative(static_cast<std::size_t>(e), static_cast<std::size_t>(k)),
                      oracle::bounded_tuples(std::vector<int>(static_cast<std::size_t>(k), e), e));
    EXPECT_EQ(weak_composition_cumulative(4, 10), 1001);
}

TEST(Compositions, BoundedTupleCountMatchesEnumeration) {
    const std::vector<std::vector<int>> shapes{{1, 1, 1}, {2, 5}, {3, 1, 4, 1}, {6}, {2, 2, 2, 2}};
    for (const auto& caps : shapes) {
        std::vector<std::size_t> b(caps.begin(), caps.end());
        for (int e = 0; e <= 20; ++e) EXPECT_EQ(bounded_tuple_count(static_cast<std::size_t>(e), b), oracle::bounded_tuples(caps, e));
    }
    EXPECT_EQ(bounded_tuple_count(2, std::vector<std::size_t>{1, 1, 1}), 7);
}

TEST(CombinatExamples, SmallValues) {
    EXPECT_EQ(partition_count(4), 5);
    EXPECT_EQ(partition_count(10), oracle::partitions(10));
    EXPECT_EQ(partition_count(10), 42);
    EXPECT_EQ(bounded_part_partition_count(4, 2), 3);
    EXPECT_EQ(bounded_part_partition_count(6, 3), 7);
    EXPECT_DOUBLE_EQ(ramanujan_asymptotic(1), std::exp(std::numbers::pi * std::sqrt(2.0 / 3.0)) / (4 * std::sqrt(3.0)));
    EXPECT_DOUBLE_EQ(schur_asymptotic(100, 4), 1e6 / 144.0);
    EXPECT_EQ(binomial(14, 4), 1001);
    EXPECT_EQ(binomial(7, 0), 1);
    EXPECT_EQ(binomial(35, 10), 183579396);
    EXPECT_EQ(gaussian_binomial(2, 1).str(), "1 + x");
    EXPECT_EQ(gaussian_binomial(5, 0).str(), "1");
    EXPECT_EQ(gaussian_binomial(4, 2).str(), "1 + x + 2x^2 + x^3 + x^4");
    EXPECT_EQ(weak_composition_cumulative(2, 3), 10);
    EXPECT_EQ(weak_composition_cumulative(0, 4), 1);
    EXPECT_EQ(bounded_tuple_count(0, std::vector<std::size_t>{3, 1}), 1);
    EXPECT_EQ(bounded_tuple_count(99, std::vector<std::size_t>{3, 1, 2}), 4 * 2 * 3);
}

TEST(CombinatExamples, RamanujanTrendOverSmallN) {
    double prev_err = 1;
    for (std::size_t n : {50u, 100u, 200u}) {
        const double err = std::abs(1 - partition_count(n).convert_to<double>() / ramanujan_asymptotic(n));
        EXPECT_LT(err, prev_err);
        prev_err = err;
    }
}

TEST(CombinatExamples, SchurTrendForThreeParts) {
    double prev_err = 1;
    for (std::size_t e : {200u, 500u, 1000u}) {
        const double err = std::abs(1 - bounded_part_partition_count(e, 3).convert_to<double>() / schur_asymptotic(e, 3));
        EXPECT_LT(err, prev_err);
        prev_err = err;
    }
}

TEST(CombinatProperties, BoundedTupleEqualsUnboundedBelowMinimum) {
    const std::vector<std::size_t> b{4, 6, 5};
    for (std::size_t e = 0; e <= 4; ++e) EXPECT_EQ(bounded_tuple_count(e, b), weak_composition_cumulative(e, 3));
    EXPECT_LT(bounded_tuple_count(5, b), weak_composition_cumulative(5, 3));
}
