#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ferrers_lab/canonical.hpp"
#include "ferrers_lab/trees.hpp"
#include "oracles.hpp"

using namespace ferrers;

namespace {

std::vector<std::size_t> shuffled(std::size_t n, std::mt19937& rng) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Canonical forms of every m×n 0/1 matrix without empty rows or columns.
std::set<std::vector<std::uint64_t>> brute_classes(std::size_t m, std::size_t n, bool swap,
                                                  std::optional<std::size_t> edges = {}) {
    std::set<std::vector<std::uint64_t>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * n)); ++mask) {
        std::vector<std::uint64_t> rows(m);
        for (std::size_t i = 0; i < m; ++i) rows[i] = (mask >> (i * n)) & low_mask(n);
        BipartiteGraph g(m, n, rows);
        if (g.has_isolated_vertex()) continue;
        if (edges && g.ecount() != *edges) continue;
        out.insert(oracle::brute_canonical_rows(g, swap));
    }
    return out;
}

}  // namespace

TEST(CanonicalRows, MatchesExhaustiveMinimum) {
    std::mt19937 rng(101);
    for (int t = 0; t < 300; ++t) {
        const std::size_t m = 1 + t % 4, n = 1 + (t / 4) % 5;
        const auto g = oracle::random_bipartite(m, n, 0.5, rng);
        for (bool swap : {false, true})
            EXPECT_EQ(canonical_rows(g.rows(), m, n, swap), oracle::brute_canonical_rows(g, swap))
                << m << "x" << n << " swap=" << swap;
    }
}

TEST(CanonicalCode, InvariantUnderRandomRelabelling) {
    std::mt19937 rng(55);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t m = 2 + t % 7, n = 2 + (t / 7) % 9;
        const auto g = oracle::random_bipartite(m, n, 0.45, rng);
        const auto h = g.permuted(shuffled(m, rng), shuffled(n, rng));
        EXPECT_EQ(canonical_code(g), canonical_code(h));
        if (m == n) {
            EXPECT_EQ(canonical_code(g, true), canonical_code(h.transpose(), true));
        }
    }
}

TEST(CanonicalCode, FormIsAnIsomorphicCopy) {
    std::mt19937 rng(56);
    for (int t = 0; t < 200; ++t) {
        const auto g = oracle::random_bipartite(3 + t % 4, 3 + t % 5, 0.5, rng);
        const auto c = canonical_form(g, false);
        EXPECT_EQ(c.row_degrees().size(), g.m());
        EXPECT_EQ(Partition::from_unsorted(c.row_degrees()), Partition::from_unsorted(g.row_degrees()));
        EXPECT_EQ(Partition::from_unsorted(c.col_degrees()), Partition::from_unsorted(g.col_degrees()));
        EXPECT_EQ(canonical_form(c, false), c);
        EXPECT_EQ(tau(c), tau(g));
    }
}

TEST(CanonicalCode, ByteLayout) {
    const auto g = ferrers_from_partition(Partition{4, 3, 3});
    EXPECT_EQ(to_hex(canonical_code(g, false)), "030407070f");
    const auto wide = complete_bipartite(1, 9);
    EXPECT_EQ(to_hex(canonical_code(wide, false)), "010901ff");
}

TEST(CanonicalCode, SeparatesNonIsomorphicGraphsWithEqualDegrees) {
    BipartiteGraph hexagon(3, 3, {0b011, 0b110, 0b101});
    BipartiteGraph k22_plus(3, 3, {0b011, 0b011, 0b100});
    EXPECT_NE(canonical_code(hexagon), canonical_code(k22_plus));
    // P_8 against C_4 + P_4: six vertices of degree 2 and two of degree 1 in both.
    BipartiteGraph path(4, 4, {0b0001, 0b0011, 0b0110, 0b1100});
    BipartiteGraph mixed(4, 4, {0b0011, 0b0011, 0b0100, 0b1100});
    EXPECT_EQ(Partition::from_unsorted(path.degrees()), Partition::from_unsorted(mixed.degrees()));
    EXPECT_NE(canonical_code(path), canonical_code(mixed));
    EXPECT_NE(tau(path), tau(mixed));
}

TEST(CanonicalRows, Limits) {
    std::vector<std::uint64_t> rows(13, 1);
    EXPECT_THROW(canonical_rows(rows, 13, 1, false), std::invalid_argument);
    EXPECT_THROW(canonical_rows({1}, 1, 64, false), std::invalid_argument);
}

TEST(Generation, ClassCountsMatchExhaustiveDeduplication) {
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = m; n <= 4; ++n)
            for (bool swap : {false, true}) {
                if (swap && m != n) continue;
                GenerationSpec spec{m, n, swap, std::nullopt, std::nullopt, true};
                std::vector<std::vector<std::uint64_t>> seen;
                generate_classes(spec, [&](const BipartiteGraph& g) {
                    seen.push_back(detail::to_positional(g));
                    return true;
                });
                const auto expect = brute_classes(m, n, swap);
                EXPECT_EQ(seen.size(), expect.size()) << m << "x" << n;
                EXPECT_EQ(std::set(seen.begin(), seen.end()), expect);
                // Emitted in increasing code order, each equal to its own canonical form.
                EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
                for (const auto& rows : seen) EXPECT_EQ(canonical_rows(detail::from_positional(rows, n).rows(), m, n, swap), rows);
            }
}

TEST(Generation, EdgeCountAndRowDegreeFilters) {
    GenerationSpec byedges{3, 4, false, 7, std::nullopt, true};
    std::size_t count = 0;
    generate_classes(byedges, [&](const BipartiteGraph& g) {
        EXPECT_EQ(g.ecount(), 7u);
        ++count;
        return true;
    });
    EXPECT_EQ(count, brute_classes(3, 4, false, 7).size());

    GenerationSpec bydeg{3, 4, false, std::nullopt, std::vector<int>{3, 2, 2}, true};
    std::set<std::vector<std::uint64_t>> expect;
    for (const auto& rows : brute_classes(3, 4, false)) {
        auto g = detail::from_positional(rows, 4);
        if (Partition::from_unsorted(g.row_degrees()) == Partition{3, 2, 2}) expect.insert(rows);
    }
    std::set<std::vector<std::uint64_t>> got;
    generate_classes(bydeg, [&](const BipartiteGraph& g) {
        got.insert(detail::to_positional(g));
        return true;
    });
    EXPECT_EQ(got, expect);
}

TEST(Generation, ShardsPartitionTheOutput) {
    GenerationSpec spec{3, 5, false, std::nullopt, std::nullopt, true};
    std::vector<std::vector<std::uint64_t>> whole, pieces;
    generate_classes(spec, [&](const BipartiteGraph& g) {
        whole.push_back(detail::to_positional(g));
        return true;
    });
    for (auto first : first_row_shards(5))
        generate_classes(
            spec,
            [&](const BipartiteGraph& g) {
                pieces.push_back(detail::to_positional(g));
                return true;
            },
            {first});
    EXPECT_EQ(whole, pieces);
}

TEST(Generation, VisitorCanStopEarly) {
    GenerationSpec spec{3, 3, true, std::nullopt, std::nullopt, true};
    int calls = 0;
    generate_classes(spec, [&](const BipartiteGraph&) { return ++calls < 3; });
    EXPECT_EQ(calls, 3);
}
