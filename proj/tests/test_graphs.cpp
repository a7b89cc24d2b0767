#include <gtest/gtest.h>

#include <random>

#include "ferrers_lab/graphs.hpp"
#include "ferrers_lab/trees.hpp"
#include "oracles.hpp"

using namespace ferrers;

namespace {

BipartiteGraph example21() { return ferrers_from_partition(Partition{3, 3, 2, 1}, 3); }

BipartiteGraph hexagon() {
    // u_i ~ v_i and u_i ~ v_{i+1 mod 3}
    BipartiteGraph g(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        g.add_edge(i, i);
        g.add_edge(i, (i + 1) % 3);
    }
    return g;
}

std::vector<std::size_t> shuffled(std::size_t n, std::mt19937& rng) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST(Edge, NormalizesEndpoints) {
    Edge e(5, 2);
    EXPECT_EQ(e.a, 2u);
    EXPECT_EQ(e.b, 5u);
    EXPECT_TRUE(e.shares_vertex(Edge(5, 7)));
    EXPECT_FALSE(e.shares_vertex(Edge(1, 3)));
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
    Graph g(3);
    g.add_edge(0, 1);
    EXPECT_THROW(g.add_edge(1, 0), std::invalid_argument);
    EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
}

TEST(Graph, ConnectivityCutsAndColouring) {
    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    EXPECT_TRUE(path.connected());
    EXPECT_TRUE(path.is_cut_edge(Edge(1, 2)));
    EXPECT_TRUE(path.is_cut_vertex(1));
    EXPECT_FALSE(path.is_cut_vertex(0));
    EXPECT_TRUE(path.bipartite());
    Graph tri(3, {Edge(0, 1), Edge(1, 2), Edge(0, 2)});
    EXPECT_FALSE(tri.bipartite());
    EXPECT_FALSE(tri.is_cut_edge(Edge(0, 1)));
    EXPECT_EQ(Graph(3).count_components(), 3u);
}

TEST(BipartiteGraph, EdgeCountIsPopcount) {
    auto g = example21();
    EXPECT_EQ(g.ecount(), 9u);
    EXPECT_EQ(g.row_degrees(), (std::vector<int>{3, 3, 2, 1}));
    EXPECT_EQ(g.col_degrees(), (std::vector<int>{4, 3, 2}));
    EXPECT_EQ(g.to_graph().ecount(), 9u);
}

TEST(FerrersFromPartition, SmallCases) {
    auto k11 = ferrers_from_partition(Partition{1}, 1);
    EXPECT_EQ(k11.ecount(), 1u);
    auto k23 = ferrers_from_partition(Partition{3, 3}, 3);
    EXPECT_TRUE(k23.complete());
    EXPECT_EQ(k23.ecount(), 6u);
    EXPECT_THROW(ferrers_from_partition(Partition{4}, 3), std::invalid_argument);
    auto wide = ferrers_from_partition(Partition{2, 1}, 4);
    EXPECT_FALSE(wide.connected());
}

TEST(FerrersFromPartition, DegreesAreThePartitionAndItsConjugate) {
    for (int total = 1; total <= 16; ++total)
        for (const auto& p : partitions_of(total, total, total)) {
            const auto g = ferrers_from_partition(p);
            EXPECT_EQ(Partition::from_unsorted(g.row_degrees()), p);
            EXPECT_EQ(Partition(g.col_degrees()), conjugate(p));
            EXPECT_TRUE(g.connected());
        }
}

TEST(IsFerrers, HexagonIsNotAndBruteForceAgrees) {
    EXPECT_FALSE(is_ferrers(hexagon()));
    EXPECT_FALSE(oracle::brute_is_ferrers(hexagon()));
    EXPECT_TRUE(is_ferrers(complete_bipartite(2, 3)));
}

TEST(IsFerrers, InvariantUnderRelabelling) {
    std::mt19937 rng(5);
    const auto g = example21();
    for (int t = 0; t < 200; ++t) {
        auto h = g.permuted(shuffled(g.m(), rng), shuffled(g.n(), rng));
        EXPECT_TRUE(is_ferrers(h));
    }
}

TEST(IsFerrers, AgreesWithPermutationSearchOnRandomGraphs) {
    std::mt19937 rng(17);
    int positives = 0;
    for (int t = 0; t < 400; ++t) {
        const std::size_t m = 1 + t % 4, n = 1 + (t / 4) % 4;
        auto g = oracle::random_bipartite(m, n, 0.6, rng);
        if (g.has_isolated_vertex()) continue;
        const bool expect = oracle::brute_is_ferrers(g);
        positives += expect;
        EXPECT_EQ(is_ferrers(g), expect);
    }
    EXPECT_GT(positives, 10);
}

TEST(Laplacian, ExampleMatchesPrintedMatrix) {
    const IntMatrix expected{{3, 0, 0, 0, -1, -1, -1}, {0, 3, 0, 0, -1, -1, -1}, {0, 0, 2, 0, -1, -1, 0},
                             {0, 0, 0, 1, -1, 0, 0},   {-1, -1, -1, -1, 4, 0, 0}, {-1, -1, -1, 0, 0, 3, 0},
                             {-1, -1, 0, 0, 0, 0, 2}};
    EXPECT_EQ(laplacian(example21().to_graph()), expected);
}

TEST(Laplacian, SymmetricWithZeroRowSums) {
    std::mt19937 rng(9);
    for (int t = 0; t < 30; ++t) {
        auto g = oracle::random_connected_graph(2 + t % 7, 0.4, rng);
        auto l = laplacian(g);
        EXPECT_TRUE(l.symmetric());
        for (std::size_t i = 0; i < l.rows(); ++i) {
            long long s = 0;
            for (std::size_t j = 0; j < l.cols(); ++j) s += l(i, j);
            EXPECT_EQ(s, 0);
        }
    }
    EXPECT_EQ(laplacian(Graph(3)), IntMatrix(3, 3, 0));
    EXPECT_EQ(laplacian(Graph(2, {Edge(0, 1)})), (IntMatrix{{1, -1}, {-1, 1}}));
}

TEST(NormalizedLaplacian, SingleEdgeAndIsolatedVertex) {
    auto k = normalized_laplacian(Graph(2, {Edge(0, 1)}));
    EXPECT_DOUBLE_EQ(k(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(k(0, 1), -1.0);
    EXPECT_THROW(normalized_laplacian(Graph(3, {Edge(0, 1)})), std::domain_error);
}

TEST(FerrersInvariant, Examples) {
    EXPECT_EQ(ferrers_invariant(example21()), 36);
    EXPECT_EQ(ferrers_invariant(complete_bipartite(1, 1)), 1);
    EXPECT_EQ(ferrers_invariant(complete_bipartite(2, 2)), 4);
    BipartiteGraph isolated(2, 2);
    isolated.add_edge(0, 0);
    EXPECT_EQ(ferrers_invariant(isolated), 0);
}

TEST(FerrersInvariant, InvariantUnderRelabelling) {
    std::mt19937 rng(21);
    for (int t = 0; t < 50; ++t) {
        auto g = oracle::random_bipartite(3, 4, 0.6, rng);
        auto h = g.permuted(shuffled(3, rng), shuffled(4, rng));
        EXPECT_EQ(ferrers_invariant(g), ferrers_invariant(h));
    }
}

TEST(Density, IsExactRational) {
    auto s = graph_stats(example21());
    EXPECT_EQ(s.rho, BigRational(3, 4));
    EXPECT_EQ(s.e, 9u);
    EXPECT_TRUE(s.connected);
}

TEST(PendantAdd, GrowsTrees) {
    auto p3 = pendant_add(complete_bipartite(1, 1), {Side::U, 0});
    EXPECT_EQ(p3.m(), 1u);
    EXPECT_EQ(p3.n(), 2u);
    EXPECT_EQ(p3.ecount(), 2u);
    auto bigger = pendant_add(example21(), {Side::U, 0});
    EXPECT_EQ(bigger.vcount(), 8u);
    EXPECT_EQ(bigger.ecount(), 10u);
    EXPECT_THROW(pendant_add(example21(), {Side::V, 7}), std::out_of_range);
    // Trees built by pendant additions have exactly one spanning tree.
    std::mt19937 rng(4);
    auto t = complete_bipartite(1, 1);
    for (int k = 0; k < 8; ++k) {
        const bool u = rng() % 2;
        const std::size_t idx = rng() % (u ? t.m() : t.n());
        t = pendant_add(t, {u ? Side::U : Side::V, idx});
        EXPECT_EQ(tau(t), 1);
    }
}

TEST(BridgeJoin, TreeCountsMultiplyAndPartsCross) {
    auto p4 = bridge_join(complete_bipartite(1, 1), complete_bipartite(1, 1), 0, 0);
    EXPECT_EQ(p4.vcount(), 4u);
    EXPECT_EQ(p4.ecount(), 3u);
    EXPECT_TRUE(p4.connected());
    const auto g = example21(), g2 = complete_bipartite(2, 3);
    auto h = bridge_join(g, g2, 1, 0);
    EXPECT_EQ(h.m(), g.m() + g2.n());
    EXPECT_EQ(h.n(), g.n() + g2.m());
    EXPECT_EQ(tau(h), tau(g) * tau(g2));
    EXPECT_THROW(bridge_join(g, g2, 9, 0), std::out_of_range);
}
