#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wmas/dispersion.hpp"

using namespace wmas;

TEST(LeeDelta, Examples) {
    EXPECT_EQ(lee_delta(4, 10, 3), 2);
    EXPECT_EQ(lee_delta(7, 5, 0), 1);
    EXPECT_EQ(lee_delta(6, 2, 4), 2);  // {3+1, 2+2}
}

TEST(LeeDispersion, Examples) {
    EXPECT_EQ(lee_dispersion(4, 20, 9), 30);
    EXPECT_EQ(lee_dispersion(9, 3, 0), 1);
    EXPECT_EQ(lee_dispersion(8, 100, 40), 7386);
}

TEST(LeeDispersion, MatchesEnumerationGrid) {
    for (int q = 2; q <= 8; ++q)
        for (int n = 1; n <= 8; ++n) {
            const auto series = lee_dispersion_series(q, static_cast<std::size_t>(n), 30);
            for (int e = 0; e <= 30; ++e) EXPECT_EQ(series[static_cast<std::size_t>(e)], oracle::lee_dispersion(q, n, e)) << q << " " << n << " " << e;
        }
}

TEST(LeeDispersion, CumulativeDeltaAndLengthIndependence) {
    for (int q : {4, 6, 8})
        for (std::size_t n : {3u, 12u}) {
            BigInt acc = 0;
            for (std::size_t e = 0; e <= 25; ++e) {
                acc += lee_delta(q, n, e);
                EXPECT_EQ(acc, lee_dispersion(q, n, e));
            }
        }
    // once n >= e the length constraint is inactive
    for (int q : {4, 6, 8})
        for (std::size_t e = 0; e <= 30; ++e) EXPECT_EQ(lee_dispersion(q, e, e), lee_dispersion(q, e + 17, e));
    // and agrees with cumulative bounded-part partition counts
    const auto parts = bounded_part_partition_series(40, 3);
    BigInt acc = 0;
    for (std::size_t e = 0; e <= 40; ++e) {
        acc += parts[e];
        EXPECT_EQ(lee_dispersion(6, 50, e), acc);
    }
}

TEST(SumRankDispersion, UnconstrainedAndBoundedRegimes) {
    EXPECT_EQ(sumrank_dispersion(5, 3, 0), 1);
    for (std::size_t t = 1; t <= 6; ++t)
        for (std::size_t d = 1; d <= 4; ++d)
            for (std::size_t e = 0; e <= 12; ++e) {
                const BigInt expected = oracle::bounded_tuples(std::vector<int>(t, static_cast<int>(d)), static_cast<int>(e));
                EXPECT_EQ(sumrank_dispersion(t, d, e), expected);
                if (e <= d) { EXPECT_EQ(sumrank_dispersion(t, d, e), binomial(t + e, e)); }
            }
    // e > d: exact bounded count, not C(t+e, e)
    EXPECT_EQ(sumrank_dispersion(10, 1, 4), 386);
    EXPECT_EQ(weak_composition_cumulative(4, 10), 1001);
    EXPECT_EQ(weak_composition_cumulative(10, 25), 183579396);
    EXPECT_EQ(sumrank_dispersion(25, 10, 10), 183579396);
}

TEST(MixedDispersion, Examples) {
    EXPECT_EQ(mixed_dispersion({1, 1, 1}, 2), 7);
    EXPECT_EQ(mixed_dispersion({4, 2}, 0), 1);
    EXPECT_EQ(mixed_dispersion({5, 6, 7}, 4), weak_composition_cumulative(4, 3));
    EXPECT_THROW(mixed_dispersion({}, 1), std::invalid_argument);
    EXPECT_THROW(mixed_dispersion({2, 0}, 1), std::invalid_argument);
}

TEST(MixedDispersion, MatchesEnumeration) {
    const std::vector<std::vector<int>> grids{{1}, {6}, {2, 3}, {1, 4, 2}, {6, 6, 6, 6}, {3, 1, 5, 2}};
    for (const auto& caps : grids)
        for (int e = 0; e <= 15; ++e) {
            std::vector<std::size_t> b(caps.begin(), caps.end());
            EXPECT_EQ(mixed_dispersion(b, static_cast<std::size_t>(e)), oracle::bounded_tuples(caps, e));
        }
}

TEST(NrtDispersion, ExamplesAndEnumeration) {
    EXPECT_EQ(nrt_dispersion(2, 2, 2), 4);
    EXPECT_EQ(nrt_dispersion(3, 4, 0), 1);
    for (int r = 1; r <= 4; ++r)
        for (int n = 1; n <= 8; ++n)
            for (int e = 0; e <= 30; ++e)
                EXPECT_EQ(nrt_dispersion(static_cast<std::size_t>(r), static_cast<std::size_t>(n), static_cast<std::size_t>(e)),
                          oracle::nrt_dispersion(r, n, e));
    // n > e: cumulative bounded-part partitions
    const auto parts = bounded_part_partition_series(20, 3);
    BigInt acc = 0;
    for (std::size_t e = 0; e <= 20; ++e) {
        acc += parts[e];
        EXPECT_EQ(nrt_dispersion(3, 25, e), acc);
    }
}

TEST(JohnsonDispersion, ClosedFormMatchesEnumeration) {
    EXPECT_EQ(johnson_dispersion(3, 2), 4);
    EXPECT_EQ(johnson_dispersion(7, 0), 1);
    for (std::size_t w = 1; w <= 30; ++w) {
        EXPECT_EQ(johnson_dispersion(w, 2 * w), BigInt((w + 1) * (w + 2) / 2));
        for (std::size_t e = 0; e <= 2 * w + 10; ++e)
            EXPECT_EQ(johnson_dispersion(w, e), oracle::johnson_dispersion(static_cast<int>(w), static_cast<int>(e))) << w << " " << e;
    }
    EXPECT_THROW(johnson_dispersion(0, 3), std::invalid_argument);
}

TEST(HomogeneousDispersion, ExamplesAndEnumeration) {
    EXPECT_EQ(homogeneous_dispersion(2, 1), 3);
    EXPECT_EQ(homogeneous_dispersion(9, 0), 1);
    for (int n = 1; n <= 20; ++n) {
        EXPECT_EQ(homogeneous_dispersion(static_cast<std::size_t>(n), static_cast<std::size_t>(2 * n)), binomial(static_cast<std::size_t>(n) + 3, 3));
        for (int t = 0; t <= 2 * n + 2; ++t) {
            EXPECT_EQ(homogeneous_dispersion(static_cast<std::size_t>(n), static_cast<std::size_t>(t)), oracle::homogeneous_dispersion(n, t));
            EXPECT_EQ(homogeneous_dispersion_k(2, static_cast<std::size_t>(n), static_cast<std::size_t>(t)), oracle::homogeneous_dispersion(n, t, false));
        }
    }
}

TEST(DispersionProfile, MonotoneSaturatingWithDeltas) {
    const std::vector<SchemeFamilyParams> fams{
        family::Lee{5, 3},           family::Lee{8, 2},      family::NRT{2, 3, 2},
        family::SumRank{2, {3, 2}, {3, 3}}, family::Mixed{{{2, 2}, {1, 3}, {3, 2}}},
        family::Johnson{2, 4, 9},    family::Homogeneous{3, 4}, family::Homogeneous{2, 4},
        family::ClarkLiang{}};
    for (const auto& f : fams) {
        const auto prof = dispersion_profile(f, 40);
        EXPECT_EQ(prof.values.front(), 1) << family_name(f);
        for (std::size_t e = 1; e < prof.values.size(); ++e) {
            EXPECT_GE(prof.values[e], prof.values[e - 1]);
            EXPECT_EQ(prof.values[e] - prof.values[e - 1], prof.delta[e]);
        }
        EXPECT_EQ(prof.values.back(), total_class_count(f)) << family_name(f);
    }
    EXPECT_EQ(total_class_count(family::Lee{7, 3}), binomial(6, 3));
    EXPECT_EQ(total_class_count(family::Johnson{3, 5, 10}), 21);
    EXPECT_EQ(total_class_count(family::Homogeneous{3, 6}), binomial(9, 3));
}

TEST(Validation, RejectsBadParameters) {
    EXPECT_THROW(validate(family::Lee{1, 3}), std::invalid_argument);
    EXPECT_THROW(validate(family::SumRank{2, {2, 3}, {2, 3}}), std::invalid_argument);
    EXPECT_THROW(validate(family::SumRank{2, {3}, {2}}), std::invalid_argument);
    EXPECT_THROW(validate(family::Johnson{2, 0, 4}), std::invalid_argument);
    EXPECT_THROW(validate(family::Johnson{2, 3, 5}), std::invalid_argument);
    EXPECT_THROW(validate(family::Homogeneous{1, 3}), std::invalid_argument);
    EXPECT_THROW(validate(family::Mixed{}), std::invalid_argument);
    EXPECT_NO_THROW(validate(family::SumRank{2, {2, 1}, {3, 2}}));
}
