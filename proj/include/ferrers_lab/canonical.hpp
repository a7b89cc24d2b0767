#pragma once

// Canonical forms for bipartitioned graphs and orderly generation of
// biadjacency matrices, one per isomorphism class.
//
// Canonical rows use a positional encoding: column position 0 is the most
// significant of the n bits, so comparing rows as integers compares them as
// bit strings. The canonical matrix is the lexicographic minimum of the
// concatenated rows over all row and column permutations (and, when allowed,
// transposition of a square matrix).
//
// For a fixed row order the best column order is forced: sort the columns by
// their column vectors, read top to bottom. After the first k rows are chosen
// those rows are already final, which gives a prefix to branch and bound on.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ferrers_lab/graphs.hpp"

namespace ferrers {

inline constexpr std::size_t kMaxCanonicalRows = 12;

namespace detail {

/// Contiguous column positions [start, start + size) whose member columns
/// (in input labelling) are `members`.
struct ColumnBlock {
    std::size_t start = 0;
    std::size_t size = 0;
    std::uint64_t members = 0;
};

using Blocks = std::vector<ColumnBlock>;

/// Positional code of `row` given the current blocks: within each block the
/// zeros come first, then the ones.
inline std::uint64_t positional_row(std::uint64_t row, const Blocks& blocks, std::size_t n) {
    std::uint64_t code = 0;
    for (const auto& b : blocks) {
        const auto ones = static_cast<std::size_t>(std::popcount(row & b.members));
        for (std::size_t p = b.start + b.size - ones; p < b.start + b.size; ++p)
            code |= std::uint64_t{1} << (n - 1 - p);
    }
    return code;
}

inline Blocks refine(const Blocks& blocks, std::uint64_t row) {
    Blocks out;
    out.reserve(blocks.size() * 2);
    for (const auto& b : blocks) {
        const std::uint64_t zeros = b.members & ~row, ones = b.members & row;
        const auto nz = static_cast<std::size_t>(std::popcount(zeros));
        if (zeros) out.push_back({b.start, nz, zeros});
        if (ones) out.push_back({b.start + nz, b.size - nz, ones});
    }
    return out;
}

inline Blocks initial_blocks(std::size_t n) {
    if (n == 0) return {};
    return {ColumnBlock{0, n, low_mask(n)}};
}

class RowCanonizer {
public:
    RowCanonizer(const std::vector<std::uint64_t>& rows, std::size_t n)
        : rows_(rows), n_(n), best_(rows.size(), kInf) {}

    std::vector<std::uint64_t> run() {
        if (!rows_.empty()) dfs(0, initial_blocks(n_), 0);
        return best_;
    }

private:
    static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

    void dfs(std::size_t depth, const Blocks& blocks, std::uint32_t used) {
        if (depth == rows_.size()) return;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (used & (1u << r)) continue;
            bool repeat = false;
            for (std::size_t s = 0; s < r && !repeat; ++s)
                repeat = !(used & (1u << s)) && rows_[s] == rows_[r];
            if (repeat) continue;
            const auto val = positional_row(rows_[r], blocks, n_);
            if (val > best_[depth]) continue;
            if (val < best_[depth]) {
                best_[depth] = val;
                std::fill(best_.begin() + static_cast<std::ptrdiff_t>(depth) + 1, best_.end(), kInf);
            }
            dfs(depth + 1, refine(blocks, rows_[r]), used | (1u << r));
        }
    }

    const std::vector<std::uint64_t>& rows_;
    std::size_t n_;
    std::vector<std::uint64_t> best_;
};

inline std::vector<std::uint64_t> transpose_rows(const std::vector<std::uint64_t>& rows, std::size_t n) {
    std::vector<std::uint64_t> t(n, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((rows[i] >> j) & 1u) t[j] |= std::uint64_t{1} << i;
    return t;
}

/// Positional rows back to a graph (position p becomes column p).
inline BipartiteGraph from_positional(const std::vector<std::uint64_t>& rows, std::size_t n) {
    std::vector<std::uint64_t> out;
    out.reserve(rows.size());
    for (auto r : rows) {
        std::uint64_t g = 0;
        for (std::size_t p = 0; p < n; ++p)
            if ((r >> (n - 1 - p)) & 1u) g |= std::uint64_t{1} << p;
        out.push_back(g);
    }
    return BipartiteGraph(rows.size(), n, std::move(out));
}

inline std::vector<std::uint64_t> to_positional(const BipartiteGraph& g) {
    std::vector<std::uint64_t> out;
    for (auto r : g.rows()) {
        std::uint64_t c = 0;
        for (std::size_t p = 0; p < g.n(); ++p)
            if ((r >> p) & 1u) c |= std::uint64_t{1} << (g.n() - 1 - p);
        out.push_back(c);
    }
    return out;
}

}  // namespace detail

/// Minimal positional rows over row and column permutations of the
/// biadjacency matrix given as `rows` (any bit labelling of the n columns).
inline std::vector<std::uint64_t> canonical_rows(const std::vector<std::uint64_t>& rows, std::size_t m,
                                                 std::size_t n, bool allow_swap) {
    if (m > kMaxCanonicalRows || n > 63)
        throw std::invalid_argument("canonical_code: graph too large (at most 12 rows and 63 columns)");
    auto best = detail::RowCanonizer(rows, n).run();
    if (allow_swap && m == n) {
        auto t = detail::transpose_rows(rows, n);
        auto alt = detail::RowCanonizer(t, n).run();
        if (alt < best) best = std::move(alt);
    }
    return best;
}

/// Whether parts may be exchanged depends on the class being searched; by
/// default square graphs are compared up to transposition.
inline bool default_swap(const BipartiteGraph& g) { return g.m() == g.n(); }

/// Byte string: m, n, then each canonical row big-endian in ceil(n/8) bytes.
/// Equal iff the graphs are isomorphic as bipartitioned graphs.
inline std::string canonical_code(const BipartiteGraph& g, bool allow_swap) {
    auto rows = canonical_rows(g.rows(), g.m(), g.n(), allow_swap);
    std::string code;
    code.push_back(static_cast<char>(g.m()));
    code.push_back(static_cast<char>(g.n()));
    const std::size_t bytes = (g.n() + 7) / 8;
    for (auto r : rows)
        for (std::size_t b = bytes; b-- > 0;) code.push_back(static_cast<char>((r >> (8 * b)) & 0xffu));
    return code;
}

inline std::string canonical_code(const BipartiteGraph& g) { return canonical_code(g, default_swap(g)); }

inline BipartiteGraph canonical_form(const BipartiteGraph& g, bool allow_swap) {
    return detail::from_positional(canonical_rows(g.rows(), g.m(), g.n(), allow_swap), g.n());
}

inline std::string to_hex(const std::string& bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Orderly generation

struct GenerationSpec {
    std::size_t m = 0;
    std::size_t n = 0;
    bool allow_swap = false;
    /// Exact edge count, when set.
    std::optional<std::size_t> edges;
    /// Multiset of row degrees, when set.
    std::optional<std::vector<int>> row_degrees;
    /// Reject zero rows and zero columns.
    bool no_isolated = true;
};

/// Calls `visit` once per isomorphism class (as its canonical matrix, in
/// increasing code order) with rows restricted to those whose first row is
/// in `first_rows` (all first rows when empty). `visit` returns false to stop.
/// Returns the number of complete candidate matrices examined.
template <typename Visit>
std::uint64_t generate_classes(const GenerationSpec& spec, Visit&& visit,
                               const std::vector<std::uint64_t>& first_rows = {}) {
    const std::size_t m = spec.m, n = spec.n;
    if (m == 0 || n == 0) return 0;
    if (m > kMaxCanonicalRows || n > 63)
        throw std::invalid_argument("generate_classes: at most 12 rows and 63 columns");
    std::vector<std::uint64_t> rows(m, 0);
    std::vector<int> remaining_degrees;
    if (spec.row_degrees) remaining_degrees = *spec.row_degrees;
    std::uint64_t candidates = 0;
    bool stop = false;
    const std::uint64_t full = low_mask(n);

    auto rec = [&](auto&& self, std::size_t k, const detail::Blocks& blocks, std::size_t edges_so_far) -> void {
        if (stop) return;
        if (k == m) {
            if (spec.edges && edges_so_far != *spec.edges) return;
            if (spec.no_isolated) {
                std::uint64_t cover = 0;
                for (auto r : rows) cover |= r;
                if (cover != full) return;
            }
            ++candidates;
            if (canonical_rows(rows, m, n, spec.allow_swap) != rows) return;
            if (!visit(detail::from_positional(rows, n))) stop = true;
            return;
        }
        // Within every block the new row must read 0…01…1.
        std::vector<std::uint64_t> options{0};
        for (const auto& b : blocks) {
            std::vector<std::uint64_t> next;
            for (auto base : options)
                for (std::size_t ones = 0; ones <= b.size; ++ones) {
                    std::uint64_t bits = base;
                    for (std::size_t p = b.start + b.size - ones; p < b.start + b.size; ++p)
                        bits |= std::uint64_t{1} << (n - 1 - p);
                    next.push_back(bits);
                }
            options = std::move(next);
        }
        std::sort(options.begin(), options.end());
        const std::uint64_t prev = k == 0 ? 0 : rows[k - 1];
        for (auto row : options) {
            if (row < prev) continue;
            if (k == 0 && !first_rows.empty() &&
                std::find(first_rows.begin(), first_rows.end(), row) == first_rows.end())
                continue;
            if (spec.no_isolated && row == 0) continue;
            const auto deg = static_cast<std::size_t>(std::popcount(row));
            if (spec.edges) {
                const std::size_t rest = m - k - 1;
                if (edges_so_far + deg > *spec.edges) continue;
                if (edges_so_far + deg + rest * n < *spec.edges) continue;
            }
            std::vector<int>::iterator slot;
            if (spec.row_degrees) {
                slot = std::find(remaining_degrees.begin(), remaining_degrees.end(), static_cast<int>(deg));
                if (slot == remaining_degrees.end()) continue;
                *slot = -1;
            }
            rows[k] = row;
            self(self, k + 1, detail::refine(blocks, row), edges_so_far + deg);
            if (spec.row_degrees) *slot = static_cast<int>(deg);
            if (stop) return;
        }
    };
    rec(rec, 0, detail::initial_blocks(n), 0);
    return candidates;
}

/// Candidate first rows (positional, already in block form: 0…01…1).
inline std::vector<std::uint64_t> first_row_shards(std::size_t n) {
    std::vector<std::uint64_t> out;
    for (std::size_t ones = 0; ones <= n; ++ones) out.push_back(low_mask(ones));
    return out;
}

}  // namespace ferrers
