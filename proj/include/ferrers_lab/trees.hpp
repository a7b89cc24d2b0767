#pragma once

// Spanning trees: exact Matrix-Tree counts, explicit enumeration by
// deletion-contraction, and the weighted tree polynomial of a bipartite graph.
//
// Indeterminate layout for the weighted polynomial: slot i (0 <= i < m) is
// x_{i+1}, attached to u_{i+1}; slot m + j is y_{j+1}, attached to v_{j+1}.
// In this 1-based labelling the closed form for a connected Ferrers graph
// with row partition λ and column partition λ' reads
//
//   x_1⋯x_m · y_1⋯y_n · ∏_{i=2..m} (y_1 + ⋯ + y_{λ_i}) · ∏_{j=2..n} (x_1 + ⋯ + x_{λ'_j}).

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ferrers_lab/exactla.hpp"
#include "ferrers_lab/graphs.hpp"
#include "ferrers_lab/multipoly.hpp"
#include "ferrers_lab/partitions.hpp"

namespace ferrers {

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t progress)
        : std::runtime_error(what), progress_(progress) {}
    /// Work completed before the budget ran out.
    std::uint64_t progress() const noexcept { return progress_; }

private:
    std::uint64_t progress_;
};

inline constexpr std::uint64_t kDefaultTreeBudget = 1'000'000;

/// Matrix-Tree count: det L with the first row and column deleted.
inline BigInt tau(const Graph& g) {
    if (g.vcount() == 0) throw std::invalid_argument("tau: graph has no vertices");
    if (g.vcount() == 1) return 1;
    return det(laplacian(g).principal_minor({0}));
}

inline BigInt tau(const BipartiteGraph& g) { return tau(g.to_graph()); }

/// A spanning tree as sorted indices into g.edges().
using EdgeSubset = std::vector<std::size_t>;

/// Every spanning tree exactly once, in lexicographic order of edge-index
/// lists. Disconnected graphs have none.
inline std::vector<EdgeSubset> enumerate_spanning_trees(const Graph& g,
                                                        std::uint64_t budget = kDefaultTreeBudget) {
    if (g.vcount() == 0) throw std::invalid_argument("enumerate_spanning_trees: graph has no vertices");
    std::vector<EdgeSubset> out;
    if (!g.connected()) return out;
    const auto& edges = g.edges();
    const std::size_t n = g.vcount();

    auto find = [](std::vector<std::size_t>& parent, std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    // Can the contracted components still be joined using edges from `from` on?
    auto completable = [&](std::vector<std::size_t> parent, std::size_t from, std::size_t comps) {
        for (std::size_t k = from; k < edges.size() && comps > 1; ++k) {
            auto ra = find(parent, edges[k].a), rb = find(parent, edges[k].b);
            if (ra != rb) {
                parent[ra] = rb;
                --comps;
            }
        }
        return comps == 1;
    };

    EdgeSubset chosen;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto rec = [&](auto&& self, std::size_t k, std::vector<std::size_t>& par, std::size_t comps) -> void {
        if (comps == 1) {
            if (out.size() >= budget)
                throw BudgetExceeded("enumerate_spanning_trees: more than " + std::to_string(budget) +
                                         " spanning trees",
                                     out.size());
            out.push_back(chosen);
            return;
        }
        if (k == edges.size()) return;
        auto ra = find(par, edges[k].a), rb = find(par, edges[k].b);
        if (ra != rb) {
            // contract
            auto next = par;
            next[ra] = rb;
            chosen.push_back(k);
            self(self, k + 1, next, comps - 1);
            chosen.pop_back();
        }
        // delete
        if (completable(par, k + 1, comps)) self(self, k + 1, par, comps);
    };
    rec(rec, 0, parent, n);
    return out;
}

/// Σ over spanning trees T of ∏ x_i^{deg_T u_i} ∏ y_j^{deg_T v_j}.
inline MultiPoly sigma_bruteforce(const BipartiteGraph& g, std::uint64_t budget = kDefaultTreeBudget) {
    const auto graph = g.to_graph();
    if (!graph.connected()) throw NotConnected("sigma_bruteforce: graph is not connected");
    const auto arity = g.vcount();
    MultiPoly out(arity);
    MultiPoly::Exponents e(arity);
    for (const auto& tree : enumerate_spanning_trees(graph, budget)) {
        std::fill(e.begin(), e.end(), 0u);
        for (auto k : tree) {
            ++e[graph.edges()[k].a];
            ++e[graph.edges()[k].b];
        }
        out.add_term(e, 1);
    }
    return out;
}

/// Closed-form weighted tree polynomial of the Ferrers graph with row
/// partition `lambda` and column partition `lambda_dual`.
inline MultiPoly sigma_formula(const Partition& lambda, const Partition& lambda_dual) {
    if (lambda.empty()) throw std::invalid_argument("sigma_formula: empty partition");
    if (conjugate(lambda) != lambda_dual)
        throw std::invalid_argument("sigma_formula: partitions are not conjugate");
    const std::size_t m = lambda.length(), n = lambda_dual.length();
    const std::size_t arity = m + n;
    MultiPoly::Exponents all(arity, 1);
    MultiPoly out(arity);
    out.add_term(all, 1);
    for (std::size_t i = 1; i < m; ++i) {
        MultiPoly factor(arity);
        for (int j = 0; j < lambda[i]; ++j) factor += MultiPoly::variable(arity, m + static_cast<std::size_t>(j));
        out = out * factor;
    }
    for (std::size_t j = 1; j < n; ++j) {
        MultiPoly factor(arity);
        for (int i = 0; i < lambda_dual[j]; ++i) factor += MultiPoly::variable(arity, static_cast<std::size_t>(i));
        out = out * factor;
    }
    return out;
}

struct TreeReport {
    BigInt tau;
    BigRational ferrers_invariant;
    /// tau <= ferrers_invariant.
    bool ferrers_good = false;
};

inline TreeReport tree_report(const BipartiteGraph& g) {
    TreeReport r;
    r.tau = g.vcount() == 0 ? BigInt(0) : tau(g);
    r.ferrers_invariant = ferrers_invariant(g);
    r.ferrers_good = BigRational(r.tau) <= r.ferrers_invariant;
    return r;
}

}  // namespace ferrers
