#include <gtest/gtest.h>

#include <random>

#include "ferrers_lab/resistance.hpp"
#include "oracles.hpp"

using namespace ferrers;

namespace {

Graph cycle(std::size_t n) {
    Graph c(n);
    for (std::size_t i = 0; i < n; ++i) c.add_edge(i, (i + 1) % n);
    return c;
}

Graph complete(std::size_t n) {
    Graph k(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) k.add_edge(a, b);
    return k;
}

}  // namespace

TEST(Resistance, SeriesAndParallelExamples) {
    EXPECT_EQ(resistance(Graph(2, {Edge(0, 1)}), 0, 1), 1);
    EXPECT_EQ(resistance(Graph(3, {Edge(0, 1), Edge(1, 2)}), 0, 2), 2);
    EXPECT_EQ(resistance(cycle(4), 0, 1), BigRational(3, 4));
    EXPECT_EQ(resistance(cycle(4), 0, 2), 1);
    EXPECT_EQ(resistance(complete(4), 0, 3), BigRational(1, 2));
    EXPECT_EQ(resistance(complete(4).without_edge(Edge(0, 3)), 0, 3), 1);
    // Cycle C_n: r(0, k) = k(n−k)/n.
    for (std::size_t n = 3; n <= 9; ++n)
        for (std::size_t k = 1; k < n; ++k)
            EXPECT_EQ(resistance(cycle(n), 0, k), ratio(long(k * (n - k)), long(n)));
}

TEST(Resistance, ThreeMethodsAgreeWithForestRatio) {
    std::mt19937 rng(13);
    for (int t = 0; t < 40; ++t) {
        const auto g = oracle::random_connected_graph(2 + t % 6, 0.5, rng);
        const auto lap = detail::rational_laplacian(g);
        const auto mp = moore_penrose_laplacian(lap);
        for (std::size_t i = 0; i < g.vcount(); ++i)
            for (std::size_t j = i + 1; j < g.vcount(); ++j) {
                const auto expect = oracle::forest_resistance(g, i, j);
                EXPECT_EQ(resistance(g, i, j), expect);
                EXPECT_EQ(resistance_by_minors(g, i, j), expect);
                EXPECT_EQ(detail::resistance_from(bordered_ginverse(lap, (i + j) % g.vcount()).matrix, i, j), expect);
                EXPECT_EQ(detail::resistance_from(mp.matrix, i, j), expect);
            }
    }
}

TEST(Resistance, IsAMetricAndSatisfiesFoster) {
    std::mt19937 rng(19);
    for (int t = 0; t < 20; ++t) {
        const auto g = oracle::random_connected_graph(3 + t % 5, 0.5, rng);
        const std::size_t n = g.vcount();
        std::vector<std::vector<BigRational>> r(n, std::vector<BigRational>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) r[i][j] = resistance(g, i, j);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                EXPECT_EQ(r[i][j], r[j][i]);
                if (i != j) {
                    EXPECT_GT(r[i][j], 0);
                }
                for (std::size_t k = 0; k < n; ++k) EXPECT_LE(r[i][j], r[i][k] + r[k][j]);
            }
        BigRational foster = 0;
        for (const auto& e : g.edges()) foster += r[e.a][e.b];
        EXPECT_EQ(foster, long(n - 1));
    }
}

TEST(Resistance, ErrorsAndComponents) {
    Graph g(4, {Edge(0, 1), Edge(2, 3)});
    EXPECT_THROW(resistance(g, 0, 1), NotConnected);
    EXPECT_THROW(resistance_by_minors(g, 0, 1), NotConnected);
    EXPECT_EQ(resistance_in_component(g, 2, 3), 1);
    EXPECT_THROW(resistance_in_component(g, 0, 2), NotConnected);
    EXPECT_THROW(resistance(cycle(3), 1, 1), std::invalid_argument);
    EXPECT_THROW(resistance(cycle(3), 0, 3), std::out_of_range);
}

TEST(EdgePair, CompleteGraphMatchingPairAllTrue) {
    const auto rep = edge_pair_equivalence(complete(4), Edge(0, 1), Edge(2, 3));
    EXPECT_TRUE(rep.all_agree);
    for (bool c : rep.conditions) EXPECT_TRUE(c);
}

TEST(EdgePair, CycleAllFalse) {
    // In C_6, deleting any edge changes every other resistance.
    const auto rep = edge_pair_equivalence(cycle(6), Edge(0, 1), Edge(3, 4));
    EXPECT_TRUE(rep.all_agree);
    for (bool c : rep.conditions) EXPECT_FALSE(c);
    EXPECT_FALSE(rep.witnesses.empty());
}

TEST(EdgePair, PreconditionsAreEnforced) {
    EdgePairAnalyzer k4(complete(4));
    EXPECT_THROW(k4.check(Edge(0, 1), Edge(1, 2)), PreconditionError);
    EXPECT_EQ(*k4.precondition_failure(Edge(0, 1), Edge(1, 2)), "e and f share a vertex");
    Graph p4(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
    EXPECT_THROW(edge_pair_equivalence(p4, Edge(0, 1), Edge(2, 3)), PreconditionError);
    EXPECT_THROW(edge_pair_equivalence(cycle(4), Edge(0, 2), Edge(1, 3)), PreconditionError);
    EXPECT_THROW(edge_pair_equivalence(cycle(3), Edge(0, 1), Edge(1, 2)), PreconditionError);
}

TEST(EdgePair, ConditionsMatchForestAndTreeOracles) {
    std::mt19937 rng(29);
    int pairs = 0, positives = 0;
    for (int t = 0; t < 60 && pairs < 300; ++t) {
        const auto g = oracle::random_connected_graph(4 + t % 4, 0.6, rng);
        EdgePairAnalyzer a(g);
        for (const auto& e : g.edges())
            for (const auto& f : g.edges()) {
                if (a.precondition_failure(e, f)) continue;
                const auto rep = a.check(e, f);
                const bool expect =
                    oracle::forest_resistance(g, e.a, e.b) == oracle::forest_resistance(g.without_edge(f), e.a, e.b);
                const auto te = oracle::count_spanning_trees(g.without_edge(e));
                const auto tf = oracle::count_spanning_trees(g.without_edge(f));
                const auto tg = oracle::count_spanning_trees(g);
                const auto tef = oracle::count_spanning_trees(g.without_edge(e).without_edge(f));
                EXPECT_EQ(rep.conditions[0], expect);
                EXPECT_EQ(rep.conditions[2], te * tf == tg * tef);
                EXPECT_TRUE(rep.all_agree);
                ++pairs;
                positives += expect;
            }
    }
    EXPECT_GT(pairs, 100);
    EXPECT_GT(positives, 0);
}

TEST(Monotonicity, DeletingAnEdgeNeverLowersResistance) {
    auto r = edge_deletion_monotonicity(cycle(4), Edge(0, 1), 0, 1);
    EXPECT_EQ(r.before, BigRational(3, 4));
    EXPECT_EQ(r.after, 3);
    EXPECT_TRUE(r.strict);
    auto k = edge_deletion_monotonicity(complete(4), Edge(0, 1), 0, 1);
    EXPECT_EQ(k.before, BigRational(1, 2));
    EXPECT_EQ(k.after, 1);
    EXPECT_THROW(edge_deletion_monotonicity(Graph(3, {Edge(0, 1), Edge(1, 2)}), Edge(0, 1), 0, 2),
                 PreconditionError);
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto g = oracle::random_connected_graph(5, 0.7, rng);
        for (const auto& f : g.edges()) {
            if (g.is_cut_edge(f)) continue;
            EXPECT_NO_THROW(edge_deletion_monotonicity(g, f, 0, 4));
        }
    }
}

TEST(FerrersStep, WorkedPartition) {
    auto res = ferrers_step_verify(Partition{3, 3, 2, 1}, 2, 2);
    EXPECT_TRUE(res.w_is_solution);
    EXPECT_TRUE(res.pseudo_inverse_identity);
    EXPECT_TRUE(res.resistance_equal);
    EXPECT_EQ(res.r_before, res.r_after);
}

TEST(FerrersStep, EveryNonCompleteFerrersGraphUpTo10) {
    int checked = 0;
    for (int total = 3; total <= 10; ++total)
        for (const auto& p : partitions_of(total, total, total)) {
            auto params = ferrers_step_parameters(p);
            if (!params || p.length() < 2) continue;
            const auto [rows, k] = *params;
            const auto res = ferrers_step_verify(p, rows, k);
            EXPECT_TRUE(res.w_is_solution) << p.to_string();
            EXPECT_TRUE(res.pseudo_inverse_identity) << p.to_string();
            // Independent check of the resistance claim.
            const auto g = ferrers_from_partition(p).to_graph();
            const std::size_t m = p.length(), n = static_cast<std::size_t>(p.largest());
            const std::size_t u = rows, v = m + static_cast<std::size_t>(k) - 1;
            const auto h = g.without_edge(Edge(rows - 1, m + n - 1));
            if (h.connected()) {
                EXPECT_EQ(res.resistance_equal, oracle::forest_resistance(g, u, v) == oracle::forest_resistance(h, u, v))
                    << p.to_string();
            }
            EXPECT_TRUE(res.resistance_equal) << p.to_string();
            ++checked;
        }
    EXPECT_GT(checked, 50);
}

TEST(FerrersStep, RejectsBadParameters) {
    EXPECT_THROW(ferrers_step_verify(Partition{3, 3, 2, 1}, 1, 3), PreconditionError);
    EXPECT_THROW(ferrers_step_verify(Partition{3, 3, 2, 1}, 3, 1), PreconditionError);
    EXPECT_THROW(ferrers_step_verify(Partition{3, 3}, 1, 3), PreconditionError);
    EXPECT_THROW(ferrers_step_verify(Partition{3}, 1, 1), PreconditionError);
    EXPECT_FALSE(ferrers_step_parameters(Partition{2, 2}).has_value());
}

TEST(InductionIdentity, HoldsAndMatchesBruteForce) {
    for (int total = 3; total <= 9; ++total)
        for (const auto& p : partitions_of(total, total, total)) {
            if (!ferrers_step_parameters(p) || p.length() < 2) continue;
            const auto r = induction_identity_check(p);
            EXPECT_TRUE(r.holds) << p.to_string();
            const auto g = ferrers_from_partition(p).to_graph();
            EXPECT_EQ(r.tau_g, BigInt(static_cast<unsigned long>(oracle::count_spanning_trees(g))));
        }
    const auto r = induction_identity_check(Partition{3, 3, 2, 1});
    EXPECT_EQ(r.tau_g, 36);
    EXPECT_TRUE(r.quotient_defined);
    EXPECT_THROW(induction_identity_check(Partition{2, 2}), PreconditionError);
}
