#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wmas/mdistance.hpp"
#include "wmas/scheme.hpp"

using namespace wmas;

TEST(MonomialOrderCompare, Examples) {
    const auto dl = MonomialOrder::deglex(2);
    EXPECT_EQ(dl.compare(MLength{0, 2}, MLength{1, 1}), std::strong_ordering::less);
    EXPECT_EQ(MonomialOrder::deglex(2, {1, 0}).compare(MLength{0, 2}, MLength{1, 1}), std::strong_ordering::greater);
    for (const auto& a : box_domain(3, 2)) {
        EXPECT_EQ(dl.compare(a, a), std::strong_ordering::equal);
        EXPECT_EQ(MonomialOrder::lex(2).compare(a, a), std::strong_ordering::equal);
    }
    const auto lx = MonomialOrder::lex(2);
    EXPECT_EQ(compare(lx, MLength{1, 0}, MLength{0, 2}), std::strong_ordering::greater);
    EXPECT_THROW(dl.compare(MLength{1}, MLength{1, 0}), std::invalid_argument);
    EXPECT_THROW(MonomialOrder::deglex(2, {0, 0}), std::invalid_argument);
    EXPECT_THROW(MonomialOrder::lex(0), std::invalid_argument);
}

TEST(MonomialOrderCompare, TotalAndMultiplicativeOnGrid) {
    const auto dom = box_domain(3, 3);
    for (const auto& o : {MonomialOrder::deglex(3), MonomialOrder::lex(3), MonomialOrder::deglex(3, {2, 0, 1})}) {
        EXPECT_TRUE(is_multiplicative_on(o, dom)) << o.name();
        for (const auto& a : dom)
            for (const auto& b : dom) {
                EXPECT_EQ(o.compare(a, b) == 0, a == b);
                EXPECT_EQ(o.compare(a, b), 0 <=> o.compare(b, a));
            }
        // every finite subset has a minimum: the zero vector
        for (const auto& a : dom) EXPECT_FALSE(o.less(a, MLength(3, 0)));
    }
}

TEST(MonomialOrderCustom, ValidatesTables) {
    // deglex on {0..2}^1 expressed as a table
    const std::vector<MLength> dom{{0}, {1}, {2}};
    const std::vector<std::vector<int>> ok{{0, -1, -1}, {1, 0, -1}, {1, 1, 0}};
    const auto o = MonomialOrder::custom(dom, ok);
    EXPECT_TRUE(o.less(MLength{0}, MLength{2}));
    EXPECT_THROW(o.compare(MLength{3}, MLength{0}), std::out_of_range);
    EXPECT_TRUE(is_l1_compatible(o, dom).compatible);

    const std::vector<std::vector<int>> asym{{0, -1, -1}, {-1, 0, -1}, {1, 1, 0}};
    EXPECT_THROW(MonomialOrder::custom(dom, asym), std::invalid_argument);
    const std::vector<std::vector<int>> cyc{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}};
    EXPECT_THROW(MonomialOrder::custom(dom, cyc), std::invalid_argument);
    // 1 < 0 breaks multiplicativity: adding 1 would require 2 < 1
    const std::vector<std::vector<int>> nonmult{{0, 1, -1}, {-1, 0, -1}, {1, 1, 0}};
    EXPECT_THROW(MonomialOrder::custom(dom, nonmult), std::invalid_argument);
}

TEST(L1Compatibility, Examples) {
    const auto dom = box_domain(5, 2);
    EXPECT_TRUE(is_l1_compatible(MonomialOrder::deglex(2), dom).compatible);
    const auto lx = is_l1_compatible(MonomialOrder::lex(2), dom);
    EXPECT_FALSE(lx.compatible);
    ASSERT_TRUE(lx.witness.has_value());
    const auto& [a, b] = *lx.witness;
    EXPECT_TRUE(MonomialOrder::lex(2).compare(a, b) <= 0);
    EXPECT_GT(l1_norm(a), l1_norm(b));
    EXPECT_TRUE(is_l1_compatible(MonomialOrder::lex(1), box_domain(9, 1)).compatible);
}

TEST(ColoredGraphValidation, RejectsMalformedGraphs) {
    EXPECT_THROW(ColoredGraph(3, {{0, 1, 1}}), std::invalid_argument);
    EXPECT_THROW(ColoredGraph(2, {{0, 0, 1}, {0, 1, 1}}), std::invalid_argument);
    EXPECT_THROW(ColoredGraph(2, {{0, 1, 3}}, 2), std::invalid_argument);
    EXPECT_THROW(ColoredGraph(3, {{0, 1, 1}, {1, 2, 1}}, 2), std::invalid_argument);
    EXPECT_THROW(ColoredGraph(2, {{0, 5, 1}}), std::invalid_argument);
    EXPECT_NO_THROW(ColoredGraph(1, {}));
}

TEST(MDistance, OneColourIsBfs) {
    for (const auto& g : {cycle_graph(7), path_graph(5), petersen_graph(), complete_graph(6)}) {
        const auto bfs = oracle::bfs_all(g);
        const auto o = MonomialOrder::deglex(1);
        for (std::size_t x = 0; x < g.size(); ++x) {
            const auto d = m_distances_from(g, x, o);
            for (std::size_t y = 0; y < g.size(); ++y) EXPECT_EQ(d[y], MLength{bfs[x][y]});
        }
    }
    EXPECT_THROW(m_distance(cycle_graph(4), 0, 9, MonomialOrder::deglex(1)), std::out_of_range);
    EXPECT_THROW(m_distance(cycle_graph(4), 0, 1, MonomialOrder::deglex(2)), std::invalid_argument);
}

TEST(MDistance, MatchesWalkEnumerationOnRandomGraphs) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 3 + rng() % 10;
        const int m = 1 + static_cast<int>(rng() % 3);
        const auto g = oracle::random_connected_graph(n, m, 0.25, rng);
        const auto m_sz = static_cast<std::size_t>(m);
        for (const auto& o : {MonomialOrder::deglex(m_sz), MonomialOrder::lex(m_sz)}) {
            const auto t = all_pairs_m_distance(g, o);
            for (std::size_t x = 0; x < n; ++x) {
                EXPECT_EQ(t.d[x][x], MLength(m_sz, 0));
                for (std::size_t y = 0; y < n; ++y) {
                    EXPECT_EQ(t.d[x][y], t.d[y][x]);
                    if (x != y) { EXPECT_GT(l1_norm(t.d[x][y]), 0); }
                    if (x < y && (x + y + static_cast<std::size_t>(trial)) % 3 == 0) {
                        EXPECT_EQ(t.d[x][y], oracle::min_walk_length(g, x, y, o, static_cast<int>(2 * n))) << "trial " << trial << " " << o.name();
                    }
                }
            }
        }
    }
}

TEST(MDistanceMatrices, PartitionAndSymmetry) {
    const auto p3 = m_distance_matrices(path_graph(3), MonomialOrder::deglex(1));
    ASSERT_EQ(p3.D.size(), 3u);
    EXPECT_EQ(p3.D[0], MLength{0});
    EXPECT_EQ(p3.D[2], MLength{2});
    std::mt19937_64 rng(5);
    const auto g = oracle::random_connected_graph(9, 2, 0.3, rng);
    const auto M = m_distance_matrices(g, MonomialOrder::deglex(2));
    EXPECT_EQ(M.D.front(), MLength(2, 0));
    const std::size_t N = M.n;
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            int total = 0;
            for (const auto& A : M.A) {
                total += A[x * N + y];
                EXPECT_EQ(A[x * N + y], A[y * N + x]);
            }
            EXPECT_EQ(total, 1);
        }
    for (std::size_t k = 1; k < M.D.size(); ++k) EXPECT_TRUE(MonomialOrder::deglex(2).less(M.D[k - 1], M.D[k]));
}

TEST(Regularity, ClassicalDistanceRegularGraphs) {
    const auto o = MonomialOrder::deglex(1);
    const auto c5 = is_m_distance_regular(cycle_graph(5), o);
    ASSERT_TRUE(c5.regular());
    // intersection array {2, 1; 1, 1}: b_i = p^i_{1,i+1}, c_i = p^i_{1,i-1}
    EXPECT_EQ(c5.at(1, 1, 0), 2);
    EXPECT_EQ(c5.at(1, 2, 1), 1);
    EXPECT_EQ(c5.at(1, 0, 1), 1);
    EXPECT_EQ(c5.at(1, 1, 2), 1);

    const auto pet = is_m_distance_regular(petersen_graph(), o);
    ASSERT_TRUE(pet.regular());
    EXPECT_EQ(pet.at(1, 1, 0), 3);
    EXPECT_EQ(pet.at(1, 2, 1), 2);
    EXPECT_EQ(pet.at(1, 1, 2), 1);
    EXPECT_EQ(pet.at(1, 1, 1), 0);

    const auto k6 = is_m_distance_regular(complete_graph(6), o);
    ASSERT_TRUE(k6.regular());
    EXPECT_EQ(k6.D, (std::vector<MLength>{{0}, {1}}));
    EXPECT_EQ(k6.at(1, 1, 1), 4);

    EXPECT_FALSE(is_m_distance_regular(path_graph(4), o).regular());
    EXPECT_EQ(is_m_distance_regular(path_graph(4), o).status, RegularityReport::Status::NotRegular);
}

TEST(Regularity, RandomColouredNegativeControl) {
    std::mt19937_64 rng(11);
    bool found = false;
    for (int trial = 0; trial < 200 && !found; ++trial) {
        const auto g = oracle::random_connected_graph(7, 2, 0.3, rng);
        const auto rep = is_m_distance_regular(g, MonomialOrder::deglex(2));
        if (rep.status == RegularityReport::Status::NotRegular) {
            found = true;
            ASSERT_TRUE(rep.witness.has_value());
            EXPECT_FALSE(rep.message.empty());
        }
    }
    EXPECT_TRUE(found);
}

TEST(Regularity, GatingAndNotApplicable) {
    // two colours on a 4-cycle: colour 1 edges 0-1, 2-3; colour 2 edges 1-2, 3-0
    const ColoredGraph sq(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 0, 2}});
    const auto rep = is_m_distance_regular(sq, MonomialOrder::deglex(2));
    EXPECT_TRUE(rep.regular());
    EXPECT_THROW(is_m_distance_regular(sq, MonomialOrder::lex(2)), std::invalid_argument);
    // a parallel colour-2 edge always beats colour 1 under deglex, so e_1 never occurs
    const ColoredGraph parallel(2, {{0, 1, 1}, {0, 1, 2}});
    const auto na = is_m_distance_regular(parallel, MonomialOrder::deglex(2));
    EXPECT_EQ(na.status, RegularityReport::Status::NotApplicable);
    EXPECT_FALSE(na.message.empty());
}

TEST(Triangle, DeglexPassesAndLexIsAnnotated) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 15; ++trial) {
        const auto g = oracle::random_connected_graph(8, 1 + trial % 3, 0.3, rng);
        const auto r = triangle_inequality_check(g, MonomialOrder::deglex(static_cast<std::size_t>(g.colors())));
        EXPECT_TRUE(r.ok());
        EXPECT_TRUE(r.scalar_asserted);
        EXPECT_TRUE(r.scalar_ok);
    }
    EXPECT_TRUE(triangle_inequality_check(ColoredGraph(1, {}), MonomialOrder::deglex(1)).ok());
    const auto g = oracle::random_connected_graph(8, 2, 0.3, rng);
    const auto lx = triangle_inequality_check(g, MonomialOrder::lex(2));
    EXPECT_FALSE(lx.scalar_asserted);
    EXPECT_TRUE(lx.vector_ok);
    ASSERT_FALSE(lx.notes.empty());
    EXPECT_EQ(lx.notes.front(), "order not L1-compatible; scalar claim unproven");
}

TEST(Bridge, RegularGraphsGiveSchemes) {
    const auto o1 = MonomialOrder::deglex(1);
    for (const auto& g : {cycle_graph(5), cycle_graph(6), petersen_graph(), complete_graph(4)}) {
        ASSERT_TRUE(is_m_distance_regular(g, o1).regular());
        EXPECT_TRUE(verify_axioms(to_explicit_scheme(g, o1)).ok);
    }
    const ColoredGraph sq(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 0, 2}});
    const auto o2 = MonomialOrder::deglex(2);
    ASSERT_TRUE(is_m_distance_regular(sq, o2).regular());
    const auto rep = verify_axioms(to_explicit_scheme(sq, o2));
    EXPECT_TRUE(rep.ok) << rep.message;
    EXPECT_FALSE(verify_axioms(to_explicit_scheme(path_graph(4), o1)).ok);
}
