#pragma once

// Bipartite and general simple graphs, Ferrers construction and recognition,
// Laplacian builders and the Ferrers invariant.
//
// Vertices are 0-based in the C++ API. When a bipartite graph is viewed as a
// general graph the U-vertices come first (0..m-1), then the V-vertices
// (m..m+n-1). File formats and the CLI are 1-based.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ferrers_lab/exactla.hpp"
#include "ferrers_lab/matrix.hpp"
#include "ferrers_lab/partitions.hpp"

namespace ferrers {

struct Edge {
    std::size_t a = 0;
    std::size_t b = 0;  // a < b

    Edge() = default;
    Edge(std::size_t x, std::size_t y) : a(std::min(x, y)), b(std::max(x, y)) {}

    bool touches(std::size_t v) const noexcept { return a == v || b == v; }
    bool shares_vertex(const Edge& o) const noexcept { return touches(o.a) || touches(o.b); }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph; the edge list is kept sorted and duplicate-free.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vcount) : n_(vcount) {}
    Graph(std::size_t vcount, std::vector<Edge> edges) : n_(vcount) {
        for (const auto& e : edges) add_edge(e.a, e.b);
    }

    std::size_t vcount() const noexcept { return n_; }
    std::size_t ecount() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    void add_edge(std::size_t x, std::size_t y) {
        if (x == y) throw std::invalid_argument("graph: loops are not allowed");
        if (x >= n_ || y >= n_) throw std::out_of_range("graph: edge endpoint out of range");
        Edge e(x, y);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it != edges_.end() && *it == e) throw std::invalid_argument("graph: duplicate edge");
        edges_.insert(it, e);
    }

    bool has_edge(std::size_t x, std::size_t y) const {
        if (x == y) return false;
        return std::binary_search(edges_.begin(), edges_.end(), Edge(x, y));
    }

    Graph without_edge(const Edge& e) const {
        Graph g(n_);
        g.edges_.reserve(edges_.size());
        bool found = false;
        for (const auto& f : edges_) {
            if (f == e) found = true;
            else g.edges_.push_back(f);
        }
        if (!found) throw std::invalid_argument("graph: edge to delete is absent");
        return g;
    }

    /// Induced subgraph on `keep` (relabelled in the given order).
    Graph induced(const std::vector<std::size_t>& keep) const {
        std::vector<std::size_t> index(n_, SIZE_MAX);
        for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = i;
        Graph g(keep.size());
        for (const auto& e : edges_)
            if (index[e.a] != SIZE_MAX && index[e.b] != SIZE_MAX) g.add_edge(index[e.a], index[e.b]);
        return g;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(n_, 0);
        for (const auto& e : edges_) {
            ++d[e.a];
            ++d[e.b];
        }
        return d;
    }

    std::vector<std::vector<std::size_t>> adjacency() const {
        std::vector<std::vector<std::size_t>> adj(n_);
        for (const auto& e : edges_) {
            adj[e.a].push_back(e.b);
            adj[e.b].push_back(e.a);
        }
        return adj;
    }

    /// Component label per vertex, labels numbered in order of first vertex.
    std::vector<std::size_t> components() const {
        auto adj = adjacency();
        std::vector<std::size_t> label(n_, SIZE_MAX);
        std::size_t next = 0;
        std::vector<std::size_t> stack;
        for (std::size_t s = 0; s < n_; ++s) {
            if (label[s] != SIZE_MAX) continue;
            label[s] = next;
            stack.push_back(s);
            while (!stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto w : adj[v])
                    if (label[w] == SIZE_MAX) {
                        label[w] = next;
                        stack.push_back(w);
                    }
            }
            ++next;
        }
        return label;
    }

    /// A graph with no vertices counts as disconnected.
    bool connected() const {
        if (n_ == 0) return false;
        auto lab = components();
        return std::all_of(lab.begin(), lab.end(), [](auto l) { return l == 0; });
    }

    bool is_cut_edge(const Edge& e) const { return !without_edge(e).connected(); }

    /// Removal of v increases the number of components.
    bool is_cut_vertex(std::size_t v) const {
        auto before = count_components();
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < n_; ++i)
            if (i != v) keep.push_back(i);
        return induced(keep).count_components() > before;
    }

    std::size_t count_components() const {
        if (n_ == 0) return 0;
        auto lab = components();
        return *std::max_element(lab.begin(), lab.end()) + 1;
    }

    /// Two-colouring if one exists (odd cycles make this empty).
    std::vector<int> two_colouring() const {
        auto adj = adjacency();
        std::vector<int> colour(n_, -1);
        std::vector<std::size_t> stack;
        for (std::size_t s = 0; s < n_; ++s) {
            if (colour[s] != -1) continue;
            colour[s] = 0;
            stack.push_back(s);
            while (!stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto w : adj[v]) {
                    if (colour[w] == -1) {
                        colour[w] = 1 - colour[v];
                        stack.push_back(w);
                    } else if (colour[w] == colour[v]) {
                        return {};
                    }
                }
            }
        }
        return colour;
    }

    bool bipartite() const { return n_ == 0 || !two_colouring().empty(); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

enum class Side { U, V };

/// A vertex of a bipartite graph: its part and its index within that part.
struct PartVertex {
    Side side = Side::U;
    std::size_t index = 0;
};

/// Bipartite graph on parts U (m vertices) and V (n vertices); row i of the
/// biadjacency matrix is a bit mask whose bit j is set iff u_i ~ v_j.
class BipartiteGraph {
public:
    static constexpr std::size_t kMaxColumns = 64;

    BipartiteGraph() = default;
    BipartiteGraph(std::size_t m, std::size_t n) : m_(m), n_(n), rows_(m, 0) {
        if (n > kMaxColumns) throw std::invalid_argument("bipartite graph: at most 64 columns supported");
    }
    BipartiteGraph(std::size_t m, std::size_t n, std::vector<std::uint64_t> rows)
        : BipartiteGraph(m, n) {
        if (rows.size() != m) throw std::invalid_argument("bipartite graph: row count mismatch");
        for (auto r : rows)
            if (n < 64 && (r >> n) != 0) throw std::invalid_argument("bipartite graph: row has bits beyond column count");
        rows_ = std::move(rows);
    }

    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t vcount() const noexcept { return m_ + n_; }
    const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }
    std::uint64_t row(std::size_t i) const { return rows_.at(i); }

    bool has_edge(std::size_t i, std::size_t j) const { return (rows_.at(i) >> j) & 1u; }

    void add_edge(std::size_t i, std::size_t j) {
        if (i >= m_ || j >= n_) throw std::out_of_range("bipartite graph: edge endpoint out of range");
        if (has_edge(i, j)) throw std::invalid_argument("bipartite graph: duplicate edge");
        rows_[i] |= std::uint64_t{1} << j;
    }

    void remove_edge(std::size_t i, std::size_t j) {
        if (i >= m_ || j >= n_ || !has_edge(i, j)) throw std::invalid_argument("bipartite graph: edge to delete is absent");
        rows_[i] &= ~(std::uint64_t{1} << j);
    }

    std::size_t ecount() const noexcept {
        std::size_t e = 0;
        for (auto r : rows_) e += static_cast<std::size_t>(std::popcount(r));
        return e;
    }

    std::vector<int> row_degrees() const {
        std::vector<int> d;
        d.reserve(m_);
        for (auto r : rows_) d.push_back(std::popcount(r));
        return d;
    }

    std::vector<int> col_degrees() const {
        std::vector<int> d(n_, 0);
        for (auto r : rows_)
            for (std::size_t j = 0; j < n_; ++j) d[j] += static_cast<int>((r >> j) & 1u);
        return d;
    }

    /// U degrees followed by V degrees.
    std::vector<int> degrees() const {
        auto d = row_degrees();
        auto c = col_degrees();
        d.insert(d.end(), c.begin(), c.end());
        return d;
    }

    /// General-graph index of a part vertex (U first, then V).
    std::size_t global_index(PartVertex v) const {
        if (v.side == Side::U) {
            if (v.index >= m_) throw std::out_of_range("bipartite graph: U index out of range");
            return v.index;
        }
        if (v.index >= n_) throw std::out_of_range("bipartite graph: V index out of range");
        return m_ + v.index;
    }

    Graph to_graph() const {
        Graph g(m_ + n_);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (has_edge(i, j)) g.add_edge(i, m_ + j);
        return g;
    }

    BipartiteGraph transpose() const {
        BipartiteGraph t(n_, m_);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (has_edge(i, j)) t.rows_[j] |= std::uint64_t{1} << i;
        return t;
    }

    /// Rows reordered by `row_perm` (new row k = old row row_perm[k]) and
    /// columns by `col_perm` (new column k = old column col_perm[k]).
    BipartiteGraph permuted(const std::vector<std::size_t>& row_perm,
                            const std::vector<std::size_t>& col_perm) const {
        BipartiteGraph out(m_, n_);
        for (std::size_t k = 0; k < m_; ++k)
            for (std::size_t l = 0; l < n_; ++l)
                if (has_edge(row_perm[k], col_perm[l])) out.rows_[k] |= std::uint64_t{1} << l;
        return out;
    }

    bool connected() const { return vcount() > 0 && to_graph().connected(); }

    bool has_isolated_vertex() const {
        for (int d : degrees())
            if (d == 0) return true;
        return false;
    }

    bool complete() const {
        const std::uint64_t full = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
        return std::all_of(rows_.begin(), rows_.end(), [&](auto r) { return r == full; });
    }

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    std::size_t m_ = 0;
    std::size_t n_ = 0;
    std::vector<std::uint64_t> rows_;
};

inline std::uint64_t low_mask(std::size_t bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

/// Staircase graph: row i has ones in columns 0..lambda_i-1. With
/// lambda_1 < ncols the trailing columns are isolated.
inline BipartiteGraph ferrers_from_partition(const Partition& lambda, std::size_t ncols) {
    if (lambda.empty()) throw std::invalid_argument("ferrers_from_partition: empty partition");
    if (static_cast<std::size_t>(lambda.largest()) > ncols)
        throw std::invalid_argument("ferrers_from_partition: largest part exceeds column count");
    std::vector<std::uint64_t> rows;
    for (int part : lambda) rows.push_back(low_mask(static_cast<std::size_t>(part)));
    return BipartiteGraph(lambda.length(), ncols, std::move(rows));
}

inline BipartiteGraph ferrers_from_partition(const Partition& lambda) {
    return ferrers_from_partition(lambda, static_cast<std::size_t>(lambda.largest()));
}

inline BipartiteGraph complete_bipartite(std::size_t m, std::size_t n) {
    return BipartiteGraph(m, n, std::vector<std::uint64_t>(m, low_mask(n)));
}

/// Sorts rows and columns by degree (descending; ties go to the
/// lexicographically larger row first) and checks the staircase shape.
/// Isolated vertices are allowed (they become empty rows or columns).
inline bool is_ferrers(const BipartiteGraph& g) {
    const auto m = g.m(), n = g.n();
    auto cdeg = g.col_degrees();
    std::vector<std::size_t> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    std::stable_sort(cols.begin(), cols.end(), [&](auto a, auto b) { return cdeg[a] > cdeg[b]; });
    std::vector<std::size_t> ident(m);
    std::iota(ident.begin(), ident.end(), 0);
    auto h = g.permuted(ident, cols);
    std::vector<std::uint64_t> rows = h.rows();
    // With columns in degree order, "lexicographically larger" is the row
    // whose bits appear earliest; reversing the bit order makes it an integer
    // comparison.
    auto key = [n](std::uint64_t r) {
        std::uint64_t k = 0;
        for (std::size_t j = 0; j < n; ++j)
            if ((r >> j) & 1u) k |= std::uint64_t{1} << (n - 1 - j);
        return k;
    };
    std::stable_sort(rows.begin(), rows.end(), [&](auto a, auto b) {
        int da = std::popcount(a), db = std::popcount(b);
        if (da != db) return da > db;
        return key(a) > key(b);
    });
    int prev = static_cast<int>(n);
    for (auto r : rows) {
        int d = std::popcount(r);
        if (r != low_mask(static_cast<std::size_t>(d))) return false;
        if (d > prev) return false;
        prev = d;
    }
    return true;
}

/// L = D − A.
inline IntMatrix laplacian(const Graph& g) {
    const auto n = g.vcount();
    IntMatrix l(n, n, 0);
    for (const auto& e : g.edges()) {
        l(e.a, e.b) = -1;
        l(e.b, e.a) = -1;
        ++l(e.a, e.a);
        ++l(e.b, e.b);
    }
    return l;
}

inline RealMatrix adjacency_matrix(const Graph& g) {
    RealMatrix a(g.vcount(), g.vcount(), 0.0);
    for (const auto& e : g.edges()) {
        a(e.a, e.b) = 1.0;
        a(e.b, e.a) = 1.0;
    }
    return a;
}

/// D^{-1/2} L D^{-1/2}; throws std::domain_error on an isolated vertex.
inline RealMatrix normalized_laplacian(const Graph& g) {
    const auto n = g.vcount();
    auto deg = g.degrees();
    for (auto d : deg)
        if (d == 0) throw std::domain_error("normalized_laplacian: isolated vertex");
    RealMatrix k(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) k(i, i) = 1.0;
    for (const auto& e : g.edges()) {
        double v = -1.0 / std::sqrt(static_cast<double>(deg[e.a]) * deg[e.b]);
        k(e.a, e.b) = v;
        k(e.b, e.a) = v;
    }
    return k;
}

/// Bipartite density ρ = e / (m n).
inline BigRational bipartite_density(const BipartiteGraph& g) {
    if (g.m() == 0 || g.n() == 0) throw std::domain_error("bipartite_density: empty part");
    BigRational r(static_cast<unsigned long>(g.ecount()), static_cast<unsigned long>(g.m() * g.n()));
    r.canonicalize();
    return r;
}

struct GraphStats {
    std::vector<int> degrees;
    std::size_t e = 0;
    BigRational rho;
    bool connected = false;
};

inline GraphStats graph_stats(const BipartiteGraph& g) {
    return {g.degrees(), g.ecount(), bipartite_density(g), g.connected()};
}

/// F(G) = (∏ deg v) / (|X| |Y|).
inline BigRational ferrers_invariant(const BipartiteGraph& g) {
    if (g.m() == 0 || g.n() == 0) return 0;
    BigInt prod = 1;
    for (int d : g.degrees()) prod *= d;
    BigRational f(prod, BigInt(static_cast<unsigned long>(g.m() * g.n())));
    f.canonicalize();
    return f;
}

/// Adds a new vertex to the part opposite `v`, joined only to `v`. The new
/// vertex is appended as the last index of its part.
inline BipartiteGraph pendant_add(const BipartiteGraph& g, PartVertex v) {
    (void)g.global_index(v);
    if (v.side == Side::U) {
        BipartiteGraph out(g.m(), g.n() + 1, g.rows());
        out.add_edge(v.index, g.n());
        return out;
    }
    auto rows = g.rows();
    rows.push_back(std::uint64_t{1} << v.index);
    return BipartiteGraph(g.m() + 1, g.n(), std::move(rows));
}

/// Disjoint union of g and g2 plus the bridge {x, x2}, with x a U-vertex of g
/// and x2 a U-vertex of g2. The result has parts (U ∪ V2, V ∪ U2): rows are
/// g's rows then g2's columns, columns are g's columns then g2's rows.
inline BipartiteGraph bridge_join(const BipartiteGraph& g, const BipartiteGraph& g2,
                                  std::size_t x, std::size_t x2) {
    if (x >= g.m()) throw std::out_of_range("bridge_join: x is not a U-vertex of the first graph");
    if (x2 >= g2.m()) throw std::out_of_range("bridge_join: x2 is not a U-vertex of the second graph");
    const auto m = g.m() + g2.n(), n = g.n() + g2.m();
    BipartiteGraph h(m, n);
    for (std::size_t i = 0; i < g.m(); ++i)
        for (std::size_t j = 0; j < g.n(); ++j)
            if (g.has_edge(i, j)) h.add_edge(i, j);
    for (std::size_t i = 0; i < g2.m(); ++i)
        for (std::size_t j = 0; j < g2.n(); ++j)
            if (g2.has_edge(i, j)) h.add_edge(g.m() + j, g.n() + i);
    h.add_edge(x, g.n() + x2);
    return h;
}

}  // namespace ferrers
