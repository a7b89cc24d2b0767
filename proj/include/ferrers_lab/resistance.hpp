#pragma once

// Exact resistance distance, the eleven-way equivalence for "deleting f does
// not change the resistance across e", and the Ferrers-graph edge-pair lemma
// with its spanning-tree induction identity.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ferrers_lab/exactla.hpp"
#include "ferrers_lab/graphs.hpp"
#include "ferrers_lab/partitions.hpp"
#include "ferrers_lab/trees.hpp"

namespace ferrers {

/// x_e for an edge oriented from its lower-numbered endpoint (+1) to the
/// higher one (−1).
struct IncidenceVector {
    std::size_t n = 0;
    std::size_t plus = 0;
    std::size_t minus = 0;

    IncidenceVector(std::size_t dim, const Edge& e) : n(dim), plus(e.a), minus(e.b) {
        if (e.a == e.b || e.b >= dim) throw std::invalid_argument("IncidenceVector: bad edge");
    }

    RatVector to_vector() const {
        RatVector x(n, 0);
        x[plus] = 1;
        x[minus] = -1;
        return x;
    }
};

namespace detail {

inline RatMatrix rational_laplacian(const Graph& g) { return to_rational(laplacian(g)); }

/// h_ii + h_jj − h_ij − h_ji for any g-inverse H of the Laplacian.
inline BigRational resistance_from(const RatMatrix& h, std::size_t i, std::size_t j) {
    return h(i, i) + h(j, j) - h(i, j) - h(j, i);
}

inline void check_pair(const Graph& g, std::size_t i, std::size_t j) {
    if (i >= g.vcount() || j >= g.vcount()) throw std::out_of_range("resistance: vertex out of range");
    if (i == j) throw std::invalid_argument("resistance: vertices must be distinct");
}

}  // namespace detail

/// det L(i,j) / det L(i): rows and columns i and j deleted over row and column i deleted.
inline BigRational resistance_by_minors(const Graph& g, std::size_t i, std::size_t j) {
    detail::check_pair(g, i, j);
    const auto lap = laplacian(g);
    const BigInt denom = det(lap.principal_minor({i}));
    if (denom == 0) throw NotConnected("resistance: graph is not connected");
    BigRational r(det(lap.principal_minor({i, j})), denom);
    r.canonicalize();
    return r;
}

/// Exact resistance distance from the Moore-Penrose inverse, cross-checked
/// against the ratio of Laplacian minors.
inline BigRational resistance(const Graph& g, std::size_t i, std::size_t j) {
    detail::check_pair(g, i, j);
    const auto lplus = moore_penrose_laplacian(detail::rational_laplacian(g));
    BigRational r = detail::resistance_from(lplus.matrix, i, j);
    if (r != resistance_by_minors(g, i, j))
        throw std::logic_error("resistance: Moore-Penrose and minor forms disagree");
    return r;
}

/// Resistance inside the connected component containing i; j must lie in it.
inline BigRational resistance_in_component(const Graph& g, std::size_t i, std::size_t j) {
    detail::check_pair(g, i, j);
    auto lab = g.components();
    if (lab[i] != lab[j]) throw NotConnected("resistance: vertices lie in different components");
    std::vector<std::size_t> keep;
    std::size_t ni = 0, nj = 0;
    for (std::size_t v = 0; v < g.vcount(); ++v) {
        if (lab[v] != lab[i]) continue;
        if (v == i) ni = keep.size();
        if (v == j) nj = keep.size();
        keep.push_back(v);
    }
    return resistance(g.induced(keep), ni, nj);
}

// ---------------------------------------------------------------------------
// Edge-pair equivalence

struct ConditionWitness {
    std::string condition;  // "i" .. "xi"
    std::string detail;     // which quantity or g-inverse was compared
    std::optional<std::pair<std::size_t, std::size_t>> coordinates;
    BigRational lhs;
    BigRational rhs;
};

struct EquivalenceReport {
    static constexpr std::array<const char*, 11> kNames = {"i", "ii", "iii", "iv", "v", "vi",
                                                           "vii", "viii", "ix", "x", "xi"};
    std::array<bool, 11> conditions{};
    bool all_agree = false;
    std::vector<ConditionWitness> witnesses;
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Caches Laplacians, pseudoinverses, bordered g-inverses and tree counts of
/// G and of G minus single edges, so that scanning many edge pairs of one
/// graph reuses them.
class EdgePairAnalyzer {
public:
    explicit EdgePairAnalyzer(Graph g) : g_(std::move(g)) {}

    const Graph& graph() const noexcept { return g_; }

    EquivalenceReport check(const Edge& e, const Edge& f) {
        validate(e, f);
        const std::size_t i = e.a, j = e.b, k = f.a, l = f.b;
        EquivalenceReport rep;
        auto& w = rep.witnesses;
        auto record = [&](std::size_t idx, std::string detail, std::optional<std::pair<std::size_t, std::size_t>> c,
                          const BigRational& a, const BigRational& b) {
            w.push_back({EquivalenceReport::kNames[idx], std::move(detail), c, a, b});
            return a == b;
        };

        auto& base = entry(std::nullopt);
        auto& without_e = entry(e);
        auto& without_f = entry(f);

        rep.conditions[0] = record(0, "r_G(i,j) vs r_{G-f}(i,j)", std::nullopt,
                                   detail::resistance_from(base.mp, i, j), detail::resistance_from(without_f.mp, i, j));
        rep.conditions[1] = record(1, "r_G(k,l) vs r_{G-e}(k,l)", std::nullopt,
                                   detail::resistance_from(base.mp, k, l), detail::resistance_from(without_e.mp, k, l));
        const BigInt tau_ef = tau(g_.without_edge(e).without_edge(f));
        rep.conditions[2] = record(2, "tau(G-e)*tau(G-f) vs tau(G)*tau(G-e-f)", std::nullopt,
                                   BigRational(without_e.tau * without_f.tau), BigRational(base.tau * tau_ef));

        const auto xf = IncidenceVector(g_.vcount(), f).to_vector();
        const auto xe = IncidenceVector(g_.vcount(), e).to_vector();
        const std::size_t pivot = pivot_vertex({i, j, k, l}, i);

        auto coords_equal = [&](std::size_t idx, const std::string& name, const RatMatrix& h, const RatVector& x,
                                std::size_t a, std::size_t b) {
            auto y = h * x;
            return record(idx, name, std::make_pair(a, b), y[a], y[b]);
        };
        // "for any g-inverse": Moore-Penrose and a bordered g-inverse must both agree.
        auto any_ginverse = [&](std::size_t idx, const std::string& lap, Entry& ent, const RatVector& x,
                                std::size_t a, std::size_t b) {
            bool mp = coords_equal(idx, lap + "+ (Moore-Penrose)", ent.mp, x, a, b);
            bool bd = coords_equal(idx, lap + "- (bordered at vertex " + std::to_string(pivot + 1) + ")",
                                   bordered(ent, pivot), x, a, b);
            return mp && bd;
        };

        rep.conditions[3] = coords_equal(3, "L+ x_f", base.mp, xf, i, j);
        rep.conditions[4] = any_ginverse(4, "L", base, xf, i, j);
        rep.conditions[5] = coords_equal(5, "L_f+ x_f", without_f.mp, xf, i, j);
        rep.conditions[6] = any_ginverse(6, "L_f", without_f, xf, i, j);
        rep.conditions[7] = coords_equal(7, "L+ x_e", base.mp, xe, k, l);
        rep.conditions[8] = any_ginverse(8, "L", base, xe, k, l);
        rep.conditions[9] = coords_equal(9, "L_e+ x_e", without_e.mp, xe, k, l);
        rep.conditions[10] = any_ginverse(10, "L_e", without_e, xe, k, l);

        rep.all_agree = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                                    [&](bool c) { return c == rep.conditions[0]; });
        return rep;
    }

    /// Whether (e, f) satisfies the preconditions; the reason otherwise.
    std::optional<std::string> precondition_failure(const Edge& e, const Edge& f) const {
        if (g_.vcount() < 4) return "graph needs at least 4 vertices";
        if (!g_.has_edge(e.a, e.b)) return "e is not an edge of G";
        if (!g_.has_edge(f.a, f.b)) return "f is not an edge of G";
        if (e.shares_vertex(f)) return "e and f share a vertex";
        if (!g_.without_edge(e).connected()) return "G - e is not connected";
        if (!g_.without_edge(f).connected()) return "G - f is not connected";
        return std::nullopt;
    }

private:
    struct Entry {
        RatMatrix lap;
        RatMatrix mp;
        BigInt tau;
        std::map<std::size_t, RatMatrix> bordered;
    };

    void validate(const Edge& e, const Edge& f) const {
        if (auto why = precondition_failure(e, f)) throw PreconditionError("edge_pair_equivalence: " + *why);
    }

    /// Smallest vertex outside `used`, or `fallback` when none exists.
    std::size_t pivot_vertex(std::array<std::size_t, 4> used, std::size_t fallback) const {
        for (std::size_t v = 0; v < g_.vcount(); ++v)
            if (std::find(used.begin(), used.end(), v) == used.end()) return v;
        return fallback;
    }

    Entry& entry(std::optional<Edge> removed) {
        auto key = removed.value_or(Edge{});
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Graph h = removed ? g_.without_edge(*removed) : g_;
        Entry ent;
        ent.lap = detail::rational_laplacian(h);
        ent.mp = moore_penrose_laplacian(ent.lap).matrix;
        ent.tau = tau(h);
        return cache_.emplace(key, std::move(ent)).first->second;
    }

    const RatMatrix& bordered(Entry& ent, std::size_t pivot) {
        auto it = ent.bordered.find(pivot);
        if (it == ent.bordered.end()) it = ent.bordered.emplace(pivot, bordered_ginverse(ent.lap, pivot).matrix).first;
        return it->second;
    }

    Graph g_;
    // Edge{0,0} stands for "nothing removed".
    std::map<Edge, Entry> cache_;
};

/// Evaluates all eleven conditions for edges e = {i,j}, f = {k,l}.
inline EquivalenceReport edge_pair_equivalence(const Graph& g, const Edge& e, const Edge& f) {
    EdgePairAnalyzer a(g);
    return a.check(e, f);
}

struct MonotonicityResult {
    BigRational before;
    BigRational after;
    bool strict = false;
};

/// r_{G−f}(i,j) ≥ r_G(i,j) for a non-cut edge f.
inline MonotonicityResult edge_deletion_monotonicity(const Graph& g, const Edge& f, std::size_t i,
                                                     std::size_t j) {
    if (!g.connected()) throw NotConnected("edge_deletion_monotonicity: graph is not connected");
    const Graph h = g.without_edge(f);
    if (!h.connected()) throw PreconditionError("edge_deletion_monotonicity: f is a cut edge");
    MonotonicityResult r{resistance(g, i, j), resistance(h, i, j), false};
    if (r.after < r.before) throw std::logic_error("edge_deletion_monotonicity: resistance decreased");
    r.strict = r.after > r.before;
    return r;
}

// ---------------------------------------------------------------------------
// Ferrers edge-pair lemma

struct FerrersStepResult {
    /// L w equals x_f for the explicit w.
    bool w_is_solution = false;
    /// L⁺ x_f equals w − (1ᵀw / (m+n)) 1.
    bool pseudo_inverse_identity = false;
    /// r_G(u_{p+1}, v_k) = r_{G−f}(u_{p+1}, v_k).
    bool resistance_equal = false;
    BigRational r_before;
    BigRational r_after;
};

namespace detail {

/// Rows 1..p equal n and row p+1 equals k < n (1-based p); throws otherwise.
inline void check_ferrers_step(const Partition& lambda, std::size_t p, int k) {
    const std::size_t m = lambda.length();
    if (m < 2) throw PreconditionError("ferrers_step: need at least two rows");
    const int n = lambda.largest();
    if (p < 1 || p > m - 1) throw PreconditionError("ferrers_step: p must lie in [1, m-1]");
    for (std::size_t i = 0; i < p; ++i)
        if (lambda[i] != n) throw PreconditionError("ferrers_step: rows 1..p must have length n");
    if (lambda[p] != k) throw PreconditionError("ferrers_step: row p+1 must have length k");
    if (k >= n) throw PreconditionError("ferrers_step: need k < n");
}

}  // namespace detail

/// The (p, k) pair for a connected Ferrers graph that is not complete:
/// p = number of full rows, k = length of the next row.
inline std::optional<std::pair<std::size_t, int>> ferrers_step_parameters(const Partition& lambda) {
    const int n = lambda.largest();
    std::size_t p = 0;
    while (p < lambda.length() && lambda[p] == n) ++p;
    if (p == lambda.length()) return std::nullopt;
    return std::make_pair(p, lambda[p]);
}

/// Verifies, for the Ferrers graph of `lambda` with n = λ_1 columns and the
/// edge f = {u_p, v_n}, that the explicit vector
/// w = (1/p)[−1/n, …, −1/n, (p−1)/n, 0, …, 0, −1] solves L w = x_f, that
/// L⁺ x_f = w − α1, and that deleting f leaves r(u_{p+1}, v_k) unchanged.
/// When p = 1 the vertex v_n becomes isolated in G − f and the resistance is
/// taken in the component holding u_{p+1}.
inline FerrersStepResult ferrers_step_verify(const Partition& lambda, std::size_t p, int k) {
    detail::check_ferrers_step(lambda, p, k);
    const std::size_t m = lambda.length();
    const std::size_t n = static_cast<std::size_t>(lambda.largest());
    const auto bg = ferrers_from_partition(lambda, n);
    const Graph g = bg.to_graph();
    const RatMatrix lap = detail::rational_laplacian(g);
    const std::size_t dim = m + n;

    RatVector w(dim, 0);
    const BigRational inv_pn(1, static_cast<unsigned long>(p * n));
    for (std::size_t i = 0; i + 1 < p; ++i) w[i] = -inv_pn;
    w[p - 1] = BigRational(static_cast<long>(p) - 1) * inv_pn;
    w[dim - 1] = BigRational(-1, static_cast<unsigned long>(p));

    const Edge f(p - 1, dim - 1);
    const auto xf = IncidenceVector(dim, f).to_vector();
    FerrersStepResult res;
    res.w_is_solution = (lap * w) == xf;

    const auto lplus = moore_penrose_laplacian(lap);
    BigRational alpha = 0;
    for (const auto& x : w) alpha += x;
    alpha /= static_cast<long>(dim);
    RatVector shifted = w;
    for (auto& x : shifted) x -= alpha;
    res.pseudo_inverse_identity = (lplus.matrix * xf) == shifted;

    const std::size_t u = bg.global_index({Side::U, p});
    const std::size_t v = bg.global_index({Side::V, static_cast<std::size_t>(k) - 1});
    res.r_before = resistance(g, u, v);
    res.r_after = resistance_in_component(g.without_edge(f), u, v);
    res.resistance_equal = res.r_before == res.r_after;
    return res;
}

struct InductionIdentity {
    BigInt tau_g, tau_without_e, tau_without_f, tau_without_ef;
    /// τ(G)·τ(G−e−f) = τ(G−e)·τ(G−f)
    bool holds = false;
    /// τ(G−e−f) ≠ 0, so the quotient form τ(G) = τ(G−e)τ(G−f)/τ(G−e−f) applies.
    bool quotient_defined = false;
};

/// Four Matrix-Tree counts for e = {u_{p+1}, v_k}, f = {u_p, v_n}.
inline InductionIdentity induction_identity_check(const Partition& lambda) {
    auto params = ferrers_step_parameters(lambda);
    if (lambda.empty() || !params) throw PreconditionError("induction_identity_check: complete bipartite graph has no edge pair");
    const auto [p, k] = *params;
    if (p < 1) throw PreconditionError("induction_identity_check: no full row");
    const std::size_t m = lambda.length(), n = static_cast<std::size_t>(lambda.largest());
    const auto bg = ferrers_from_partition(lambda, n);
    const Graph g = bg.to_graph();
    const Edge e(p, m + static_cast<std::size_t>(k) - 1);
    const Edge f(p - 1, m + n - 1);
    if (!g.has_edge(e.a, e.b) || !g.has_edge(f.a, f.b))
        throw PreconditionError("induction_identity_check: e or f is absent");
    InductionIdentity r;
    r.tau_g = tau(g);
    r.tau_without_e = tau(g.without_edge(e));
    r.tau_without_f = tau(g.without_edge(f));
    r.tau_without_ef = tau(g.without_edge(e).without_edge(f));
    r.holds = r.tau_g * r.tau_without_ef == r.tau_without_e * r.tau_without_f;
    r.quotient_defined = r.tau_without_ef != 0;
    return r;
}

}  // namespace ferrers
