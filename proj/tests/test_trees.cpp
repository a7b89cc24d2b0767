#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ferrers_lab/trees.hpp"
#include "oracles.hpp"

using namespace ferrers;

namespace {

BigInt power(long base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), BigInt(base).get_mpz_t(), exp);
    return r;
}

}  // namespace

TEST(Tau, MatchesSubsetCountingOnRandomGraphs) {
    std::mt19937 rng(31);
    for (int t = 0; t < 60; ++t) {
        const auto g = oracle::random_connected_graph(2 + t % 6, 0.55, rng);
        EXPECT_EQ(tau(g), BigInt(static_cast<unsigned long>(oracle::count_spanning_trees(g))));
    }
}

TEST(Tau, DisconnectedGraphHasNone) {
    EXPECT_EQ(tau(Graph(3, {Edge(0, 1)})), 0);
    EXPECT_EQ(tau(Graph(1)), 1);
}

TEST(Tau, CompleteBipartiteFormula) {
    for (std::size_t m = 1; m <= 6; ++m)
        for (std::size_t n = 1; n <= 6; ++n)
            EXPECT_EQ(tau(complete_bipartite(m, n)), power(static_cast<long>(m), n - 1) * power(static_cast<long>(n), m - 1))
                << m << "x" << n;
}

TEST(Tau, WorkedFerrersExample) {
    const auto g = ferrers_from_partition(Partition{3, 3, 2, 1});
    EXPECT_EQ(tau(g), 36);
    const auto r = tree_report(g);
    EXPECT_EQ(r.ferrers_invariant, 36);
    EXPECT_TRUE(r.ferrers_good);
}

TEST(Tau, CycleHasLengthManyTrees) {
    for (std::size_t n = 3; n <= 12; ++n) {
        Graph c(n);
        for (std::size_t i = 0; i < n; ++i) c.add_edge(i, (i + 1) % n);
        EXPECT_EQ(tau(c), static_cast<long>(n));
    }
}

TEST(Enumerate, CountUniquenessOrderAndValidity) {
    std::mt19937 rng(8);
    for (int t = 0; t < 40; ++t) {
        const auto g = oracle::random_connected_graph(2 + t % 6, 0.6, rng);
        const auto trees = enumerate_spanning_trees(g);
        EXPECT_EQ(BigInt(static_cast<unsigned long>(trees.size())), tau(g));
        EXPECT_TRUE(std::is_sorted(trees.begin(), trees.end()));
        EXPECT_EQ(std::set<EdgeSubset>(trees.begin(), trees.end()).size(), trees.size());
        for (const auto& tree : trees) {
            ASSERT_EQ(tree.size() + 1, g.vcount());
            oracle::Dsu d(g.vcount());
            for (auto k : tree) EXPECT_TRUE(d.unite(g.edges()[k].a, g.edges()[k].b));
        }
    }
}

TEST(Enumerate, DisconnectedAndBudget) {
    EXPECT_TRUE(enumerate_spanning_trees(Graph(2)).empty());
    const auto k33 = complete_bipartite(3, 3).to_graph();  // 81 trees
    try {
        enumerate_spanning_trees(k33, 50);
        FAIL() << "budget not enforced";
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.progress(), 50u);
    }
    EXPECT_EQ(enumerate_spanning_trees(k33, 81).size(), 81u);
}

TEST(Sigma, BruteForceMatchesWeightedMatrixTree) {
    std::mt19937 rng(12);
    std::uniform_int_distribution<long long> w(1, 5);
    for (int t = 0; t < 40; ++t) {
        auto b = oracle::random_bipartite(1 + t % 3, 1 + (t / 3) % 4, 0.7, rng);
        if (!b.connected()) continue;
        const auto poly = sigma_bruteforce(b);
        EXPECT_EQ(poly.evaluate_at_ones(), tau(b));
        for (int k = 0; k < 5; ++k) {
            std::vector<long long> point(b.vcount());
            for (auto& x : point) x = w(rng);
            EXPECT_EQ(oracle::evaluate(poly, point), oracle::weighted_tree_sum(b.to_graph(), point));
        }
    }
}

TEST(Sigma, ClosedFormMatchesEnumerationForEveryPartitionUpTo9) {
    for (int total = 1; total <= 9; ++total)
        for (const auto& p : partitions_of(total, total, total)) {
            const auto g = ferrers_from_partition(p);
            EXPECT_EQ(sigma_formula(p, conjugate(p)), sigma_bruteforce(g)) << p.to_string();
        }
}

TEST(Sigma, ClosedFormAtOnesIsTheInvariant) {
    for (int total = 1; total <= 20; ++total)
        for (const auto& p : partitions_of(total, total, total)) {
            const auto g = ferrers_from_partition(p);
            EXPECT_EQ(BigRational(sigma_formula(p, conjugate(p)).evaluate_at_ones()), ferrers_invariant(g));
            EXPECT_EQ(BigRational(tau(g)), ferrers_invariant(g));
        }
}

TEST(Sigma, RejectsNonConjugatePair) {
    EXPECT_THROW(sigma_formula(Partition{2, 1}, Partition{3}), std::invalid_argument);
    EXPECT_THROW(sigma_bruteforce(BipartiteGraph(2, 2)), NotConnected);
}

TEST(FerrersBound, NonFerrersGraphsStayBelow) {
    std::mt19937 rng(77);
    for (int t = 0; t < 200; ++t) {
        auto b = oracle::random_bipartite(2 + t % 4, 2 + (t / 4) % 4, 0.6, rng);
        if (!b.connected()) continue;
        const auto r = tree_report(b);
        EXPECT_TRUE(r.ferrers_good);
        if (!is_ferrers(b)) {
            EXPECT_LT(BigRational(r.tau), r.ferrers_invariant);
        }
    }
}
