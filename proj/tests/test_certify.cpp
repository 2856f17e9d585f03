#include <gtest/gtest.h>

#include <limits>

#include "oracles.hpp"
#include "wmas/certify.hpp"

using namespace wmas;

TEST(SzBound, Examples) {
    EXPECT_EQ(sz_bound(9, 3, 2), 27);
    for (long e : {0L, 1L, 17L}) EXPECT_EQ(sz_bound(e, 99, 1), e);
    EXPECT_EQ(sz_bound(4, 2, 10), 2048);
    EXPECT_THROW(sz_bound(1, 0, 2), std::invalid_argument);
    EXPECT_THROW(sz_bound(1, 2, 0), std::invalid_argument);
    EXPECT_THROW(sz_bound(-1, 2, 2), std::invalid_argument);
}

TEST(MasterTest, LeeTableRegime) {
    const auto yes = master_test(family::Lee{4, 9}, 9);
    EXPECT_EQ(yes.Pi - 1, 29);
    EXPECT_EQ(yes.bound, 27);
    EXPECT_EQ(yes.r, 2);
    EXPECT_EQ(yes.S_size, 3);
    EXPECT_EQ(yes.verdict, Verdict::Nonexistent);
    EXPECT_EQ(yes.regime, "tables");

    const auto no = master_test(family::Lee{4, 7}, 7);
    EXPECT_EQ(no.Pi - 1, 19);
    EXPECT_EQ(no.bound, 21);
    EXPECT_EQ(no.verdict, Verdict::Inconclusive);
}

TEST(MasterTest, CorollaryRegimeAndUnsupportedCombinations) {
    const auto c = master_test(family::Lee{4, 9}, 9, Regime::Corollary1);
    EXPECT_EQ(c.r, 3);
    EXPECT_EQ(c.S_size, 10);
    EXPECT_EQ(c.bound, 900);
    EXPECT_EQ(c.verdict, Verdict::Inconclusive);
    EXPECT_EQ(master_test(family::NRT{2, 5, 3}, 4, Regime::Corollary1).S_size, 6);
    EXPECT_THROW(master_test(family::SumRank{2, {1}, {1}}, 3, Regime::Corollary1), std::invalid_argument);
    EXPECT_THROW(master_test(family::ClarkLiang{}, 1), std::invalid_argument);
    EXPECT_THROW(master_test(family::Lee{4, 3}, -1), std::invalid_argument);
    EXPECT_THROW(parse_regime("other"), std::invalid_argument);
    EXPECT_EQ(parse_regime("corollary1"), Regime::Corollary1);
}

TEST(MasterTest, SumRankUsesExactBoundedCount) {
    // with d = 1 every rank is 0 or 1, so Pi(10) counts subsets of size <= 10
    std::vector<int> rows(25, 1);
    const auto c = master_test(family::SumRank{2, rows, rows}, 10);
    BigInt subsets = 0;
    for (int i = 0; i <= 10; ++i) subsets += oracle::binomial(25, i);
    EXPECT_EQ(c.Pi, subsets);
    EXPECT_EQ(c.Pi - 1, 7119515);
    EXPECT_EQ(c.bound, 167772160);
    EXPECT_EQ(c.verdict, Verdict::Inconclusive);
    ASSERT_FALSE(c.notes.empty());
    EXPECT_NE(c.notes.front().find("183579395"), std::string::npos);
}

TEST(MasterTest, VerdictIsAPureFunctionOfItsInputs) {
    for (long e = 0; e <= 40; ++e) {
        const auto a = master_test(family::Lee{6, 40}, e), b = master_test(family::Lee{6, 40}, e);
        EXPECT_EQ(a.Pi, b.Pi);
        EXPECT_EQ(a.bound, b.bound);
        EXPECT_EQ(a.verdict, b.verdict);
        EXPECT_EQ(a.bound, BigInt(e) * ipow(a.S_size, static_cast<unsigned>(a.r - 1)));
        EXPECT_EQ(a.verdict == Verdict::Nonexistent, a.Pi - 1 > a.bound);
    }
    EXPECT_FALSE(master_test(family::Lee{6, 4}, 0).notes.empty());
}

TEST(MasterTest, OtherFamilies) {
    const auto m = master_test(family::Mixed{{{10, 2}, {10, 2}, {10, 2}}}, 15);
    EXPECT_EQ(m.Pi, oracle::bounded_tuples({10, 10, 10}, 15));
    EXPECT_EQ(m.bound, 15 * 121);
    const auto j = master_test(family::Johnson{3, 5, 10}, 4);
    EXPECT_EQ(j.r, 2);
    EXPECT_EQ(j.S_size, 6);
    const auto h = master_test(family::Homogeneous{3, 5}, 6);
    EXPECT_EQ(h.r, 4);
    EXPECT_EQ(h.S_size, 6);
    EXPECT_EQ(h.verdict, Verdict::Inconclusive);
}

TEST(MasterTest, LeeMonotoneSufficiency) {
    for (int q = 3; q <= 8; ++q) {
        const auto pi = lee_dispersion_series(q, 201, 200);
        const long s = q / 2;
        bool fired = false;
        for (long e = 1; e <= 200; ++e) {
            const bool now = pi[static_cast<std::size_t>(e)] - 1 > sz_bound(e, s + 1, s);
            if (fired) { EXPECT_TRUE(now) << "q=" << q << " e=" << e; }
            fired = fired || now;
        }
        if (q >= 4) { EXPECT_TRUE(fired) << q; }
    }
}

TEST(Thresholds, LeeCorollaryAndTables) {
    EXPECT_NEAR(lee_threshold_corollary(2), 12.0, 1e-12);
    EXPECT_NEAR(lee_threshold_corollary(3), 24.0, 1e-12);
    EXPECT_NEAR(lee_threshold_corollary(4), 5 * std::pow(24.0, 2.0 / 3.0), 1e-12);
    EXPECT_NEAR(lee_threshold_corollary(4), 41.6017, 1e-4);
    EXPECT_EQ(lee_threshold_tables(2), 12);
    EXPECT_EQ(lee_threshold_tables(3), 144);
    EXPECT_EQ(lee_threshold_tables(4), 2880);
    for (long r = 2; r <= 6; ++r) EXPECT_DOUBLE_EQ(nrt_threshold(r), lee_threshold_corollary(r));
    EXPECT_THROW(lee_threshold_corollary(1), std::invalid_argument);
    EXPECT_THROW(nrt_threshold(1), std::invalid_argument);
}

TEST(Thresholds, SumRank) {
    EXPECT_NEAR(sumrank_threshold(0.4), 1.311, 1e-3);
    EXPECT_NEAR(sumrank_threshold(1.0), 3.0, 1e-12);
    double prev = std::numeric_limits<double>::infinity();
    for (double a : {10.0, 100.0, 1000.0, 1e5}) {
        const double ratio = sumrank_threshold(a) / sumrank_threshold_approx(a);
        EXPECT_GT(ratio, 1.0);
        EXPECT_LT(ratio, prev);
        prev = ratio;
    }
    EXPECT_NEAR(prev, 1.0, 1e-4);
    for (int i = 1; i <= 1000; ++i) {
        const double a = 0.01 * i;
        EXPECT_GT(sumrank_threshold(a), std::exp(1.0) * a - 1) << a;
    }
    EXPECT_THROW(sumrank_threshold(0), std::invalid_argument);
}

TEST(MixedCondition, Examples) {
    const auto a = mixed_condition(3, 30, 15);
    EXPECT_DOUBLE_EQ(a.a, 0.5);
    EXPECT_TRUE(a.regime_satisfied);
    const auto b = mixed_condition(3, 30, 5);
    EXPECT_FALSE(b.regime_satisfied);
    const auto c = mixed_condition({10, 10, 10}, 15);
    EXPECT_EQ(c.certificate.Pi, oracle::bounded_tuples({10, 10, 10}, 15));
    EXPECT_EQ(c.certificate.Pi, 711);
    EXPECT_EQ(c.certificate.bound, 1815);
    EXPECT_EQ(c.certificate.verdict, Verdict::Inconclusive);
    EXPECT_THROW(mixed_condition(1, 5, 2), std::invalid_argument);
}

TEST(Counterchecks, HomogeneousAndJohnsonNeverFire) {
    const auto rep = example_counterchecks();
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.homogeneous_points, 1640u);
    EXPECT_EQ(rep.johnson_points, 1230u);
    const auto small = example_counterchecks(10, 5);
    EXPECT_TRUE(small.ok());
}

TEST(Tables, LeeTablesMatchPrintedRows) {
    for (int id : {1, 2, 3}) {
        for (const auto& row : reproduce_table(id)) {
            // recomputed independently of the library's dispersion code
            const BigInt pi = oracle::lee_dispersion(id == 1 ? 4 : id == 2 ? 6 : 8, static_cast<int>(std::min<long>(row.e, 12)), static_cast<int>(row.e));
            if (row.e <= 12) { EXPECT_EQ(row.pi_minus_1, pi - 1); }
            EXPECT_EQ(row.inequality, row.pi_minus_1 > row.sz_bound);
            const bool known_divergence = (id == 2 && row.e == 21) || (id == 3 && row.e >= 75);
            EXPECT_EQ(row.matches_printed, !known_divergence) << "table " << id << " e=" << row.e;
        }
    }
    const auto t1 = reproduce_table(1);
    const auto r12 = std::find_if(t1.begin(), t1.end(), [](const TableRow& r) { return r.e == 12; });
    ASSERT_NE(r12, t1.end());
    EXPECT_EQ(r12->pi_minus_1, 48);
    EXPECT_EQ(r12->sz_bound, 36);
    EXPECT_TRUE(r12->inequality);
    const auto t3 = reproduce_table(3);
    EXPECT_EQ(t3.front().pi_minus_1, 2723);
    EXPECT_EQ(t3.front().sz_bound, 3750);
    EXPECT_FALSE(t3.front().inequality);
    EXPECT_THROW(reproduce_table(5), std::invalid_argument);
}

TEST(Tables, DivergencesAreAnnotated) {
    const auto t2 = reproduce_table(2);
    const auto r21 = std::find_if(t2.begin(), t2.end(), [](const TableRow& r) { return r.e == 21; });
    ASSERT_NE(r21, t2.end());
    EXPECT_EQ(r21->pi_minus_1, 405);
    ASSERT_FALSE(r21->notes.empty());
    EXPECT_NE(r21->notes.front().find("printed 457"), std::string::npos);
    EXPECT_TRUE(r21->inequality);

    const std::vector<long> t3_recomputed{72729, 92581, 116236, 144163};
    const auto t3 = reproduce_table(3);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(t3[8 + i].pi_minus_1, t3_recomputed[i]);
}

TEST(Tables, SumRankTableWithDisplayRule) {
    const auto rows = reproduce_table(4);
    ASSERT_EQ(rows.size(), 9u);
    for (const auto& row : rows) {
        EXPECT_TRUE(row.matches_printed) << row.t << "," << row.e;
        EXPECT_EQ(row.pi_minus_1, oracle::binomial(static_cast<int>(row.t + row.e), static_cast<int>(row.e)) - 1);
        EXPECT_EQ(row.sz_bound, BigInt(row.e) * ipow(BigInt(2), static_cast<unsigned>(row.t - 1)));
        EXPECT_NEAR(row.a, 0.4, 1e-12);
        EXPECT_NEAR(row.f_a, 1.311, 1e-3);
    }
    EXPECT_EQ(rows[3].pi_minus_1, 183579395);
    EXPECT_TRUE(rows[3].inequality);
    EXPECT_EQ(rows[0].sz_bound, 2048);
    // printed exponents for the two largest rows do not place the mantissa correctly
    for (std::size_t i : {6u, 7u}) {
        bool exponent_note = false;
        for (const auto& n : rows[i].notes) exponent_note = exponent_note || n.find("exponent") != std::string::npos;
        EXPECT_TRUE(exponent_note) << rows[i].t;
    }
    EXPECT_EQ(table_caption(2), "Lee metric, q=6, s=3, e0=144");
}

TEST(Display, ScaledAndMatched) {
    EXPECT_EQ(scaled_display(999), "999");
    EXPECT_EQ(scaled_display(183579395), "184x10^6");
    EXPECT_EQ(scaled_display(2048), "2x10^3");
    const auto m = match_display(183579395, "184", 6);
    EXPECT_TRUE(m.mantissa);
    EXPECT_TRUE(m.exponent);
    const auto bad = match_display(183579395, "184", 5);
    EXPECT_TRUE(bad.mantissa);
    EXPECT_FALSE(bad.exponent);
    EXPECT_EQ(bad.expected_exponent, 6);
    EXPECT_FALSE(match_display(183579395, "185", 6).mantissa);
}

TEST(SchwartzZippel, UnivariateNeverExceedsDegree) {
    const auto rep = sz_empirical_check(1, 5, 30, 200, 7);
    EXPECT_TRUE(rep.all_within_bound);
    EXPECT_LE(rep.max_zero_count, 5u);
    EXPECT_EQ(rep.bound, 5);
}

TEST(SchwartzZippel, ProductOfVariablesIsTightFamily) {
    for (std::size_t n = 1; n <= 4; ++n)
        for (int S : {2, 3, 6}) {
            const auto z = count_zeros_on_grid(product_of_variables(n), S);
            const auto expected = ipow(BigInt(S), static_cast<unsigned>(n)) - ipow(BigInt(S - 1), static_cast<unsigned>(n));
            EXPECT_EQ(BigInt(z), expected);
            EXPECT_LE(BigInt(z), sz_bound(static_cast<long>(n), S, static_cast<long>(n)));
        }
    EXPECT_EQ(count_zeros_on_grid(product_of_variables(2), 10), 19u);
}

TEST(SchwartzZippel, RandomTrialsDeterministic) {
    const auto a = sz_empirical_check(3, 4, 10, 100, 42);
    EXPECT_TRUE(a.all_within_bound);
    EXPECT_EQ(a.zero_counts.size(), 100u);
    EXPECT_EQ(a.bound, 400);
    const auto b = sz_empirical_check(3, 4, 10, 100, 42);
    EXPECT_EQ(a.zero_counts, b.zero_counts);
    for (int i = 0; i < 5; ++i) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(i));
        const auto p = random_polynomial(3, 4, rng);
        EXPECT_EQ(p.total_degree(), 4);
    }
    EXPECT_THROW(sz_empirical_check(3, 4, 10, 0, 1), std::invalid_argument);
}
