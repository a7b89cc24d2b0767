#pragma once

// Single-graph bound checks: spanning-tree upper bounds, majorization of
// Laplacian spectra, and the product inequality that would imply the
// Ferrers bound.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ferrers_lab/exactla.hpp"
#include "ferrers_lab/graphs.hpp"
#include "ferrers_lab/partitions.hpp"
#include "ferrers_lab/spectral.hpp"
#include "ferrers_lab/trees.hpp"

namespace ferrers {

/// One side of a bound. `exact` is set when the quantity is rational;
/// `value` is always a floating approximation.
struct Quantity {
    std::optional<BigRational> exact;
    double value = 0.0;
    std::string expression;

    static Quantity rational(const BigRational& q, std::string expr = {}) {
        return {q, q.get_d(), std::move(expr)};
    }
    static Quantity real(double v, std::string expr = {}) { return {std::nullopt, v, std::move(expr)}; }
};

enum class ArithmeticMode { exact, toleranced };

struct BoundReport {
    std::string name;
    ArithmeticMode mode = ArithmeticMode::exact;
    double tolerance = 0.0;
    Quantity lhs;
    Quantity rhs;
    bool holds = false;
    bool equality = false;
    /// False when the inputs do not satisfy the statement's hypotheses; the
    /// report then carries no verdict and `holds` is vacuously true.
    bool hypotheses_met = true;
    std::vector<std::pair<std::string, std::string>> notes;
};

namespace detail {

inline BigInt degree_product(std::span<const int> degrees) {
    BigInt p = 1;
    for (int d : degrees) p *= d;
    return p;
}

inline std::string join(std::span<const double> xs) {
    std::string out;
    char buf[32];
    for (std::size_t k = 0; k < xs.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.12g", xs[k]);
        out += (k ? "," : "") + std::string(buf);
    }
    return out;
}

/// Nonzero degrees as a partition (zeros do not change a conjugate).
inline Partition degree_partition(const std::vector<int>& degrees) {
    std::vector<int> pos;
    for (int d : degrees)
        if (d > 0) pos.push_back(d);
    return Partition::from_unsorted(std::move(pos));
}

inline BoundReport majorization_report(std::string name, std::span<const double> smaller,
                                       std::span<const double> larger, std::string smaller_name,
                                       std::string larger_name) {
    BoundReport r;
    r.name = std::move(name);
    r.mode = ArithmeticMode::toleranced;
    r.tolerance = kMajorizationTolerance;
    const double slack = majorization_slack(smaller, larger);
    r.lhs = Quantity::real(slack, "max prefix excess of " + smaller_name + " over " + larger_name);
    r.rhs = Quantity::real(0.0, "0");
    r.holds = majorizes(smaller, larger, kMajorizationTolerance);
    const std::size_t len = std::max(smaller.size(), larger.size());
    auto a = sorted_padded(smaller, len), b = sorted_padded(larger, len);
    r.equality = true;
    for (std::size_t k = 0; k < len; ++k) r.equality = r.equality && std::abs(a[k] - b[k]) <= r.tolerance;
    r.notes.emplace_back(smaller_name, join(a));
    r.notes.emplace_back(larger_name, join(b));
    return r;
}

}  // namespace detail

/// τ(G) ≤ ∏ d_v / |E|, with equality exactly for complete bipartite graphs.
inline BoundReport bozkurt_check(const BipartiteGraph& g) {
    if (g.vcount() < 2) throw std::invalid_argument("bozkurt_check: needs at least 2 vertices");
    BoundReport r;
    r.name = "bozkurt";
    const auto degrees = g.degrees();
    const BigInt t = tau(g);
    r.lhs = Quantity::rational(BigRational(t), "tau");
    if (g.ecount() == 0) {
        r.rhs = Quantity::rational(0, "no edges");
    } else {
        BigRational rhs(detail::degree_product(degrees), BigInt(static_cast<unsigned long>(g.ecount())));
        rhs.canonicalize();
        r.rhs = Quantity::rational(rhs, "prod(deg)/e");
    }
    r.holds = *r.lhs.exact <= *r.rhs.exact;
    r.equality = *r.lhs.exact == *r.rhs.exact;
    const bool complete = g.complete();
    r.notes.emplace_back("complete_bipartite", complete ? "true" : "false");
    r.notes.emplace_back("equality_matches_structure", r.equality == complete ? "true" : "false");
    return r;
}

/// τ(G) ≤ ∏(d_i + 1/2) ∏(e_j + 1/2) √e_1 with d the row degrees, e the
/// column degrees and e_1 the largest column degree. Decided exactly by
/// squaring both sides.
inline BoundReport venkataramana_check(const BipartiteGraph& g) {
    if (g.m() == 0 || g.n() == 0) throw std::invalid_argument("venkataramana_check: both parts must be nonempty");
    BoundReport r;
    r.name = "venkataramana";
    const BigInt t = tau(g);
    BigRational factor = 1;
    for (int d : g.row_degrees()) factor *= BigRational(2 * d + 1, 2);
    const auto cols = g.col_degrees();
    for (int d : cols) factor *= BigRational(2 * d + 1, 2);
    factor.canonicalize();
    const int e1 = *std::max_element(cols.begin(), cols.end());
    r.lhs = Quantity::rational(BigRational(t), "tau");
    r.rhs = Quantity::real(factor.get_d() * std::sqrt(static_cast<double>(e1)), "factor*sqrt(e1)");
    const BigRational lhs_sq = BigRational(t * t);
    const BigRational rhs_sq = factor * factor * e1;
    r.holds = lhs_sq <= rhs_sq;
    r.equality = lhs_sq == rhs_sq;
    r.notes.emplace_back("factor", to_string(factor));
    r.notes.emplace_back("e1", std::to_string(e1));
    r.notes.emplace_back("tau_squared", to_string(lhs_sq));
    r.notes.emplace_back("rhs_squared", to_string(rhs_sq));
    return r;
}

/// Laplacian spectrum ≺ conjugate of the degree sequence.
inline BoundReport grone_merris_check(const Graph& g) {
    const auto spectrum = laplacian_spectrum(g);
    const auto conj = conjugate(detail::degree_partition(g.degrees()));
    std::vector<double> dual(conj.begin(), conj.end());
    return detail::majorization_report("grone-merris", spectrum, dual, "laplacian_spectrum",
                                       "degree_conjugate");
}

/// Degree sequence ≺ Laplacian spectrum (diagonal of a symmetric matrix
/// against its eigenvalues).
inline BoundReport degree_spectrum_check(const Graph& g) {
    const auto spectrum = laplacian_spectrum(g);
    const auto deg = g.degrees();
    std::vector<double> d(deg.begin(), deg.end());
    return detail::majorization_report("degree-spectrum", d, spectrum, "degrees", "laplacian_spectrum");
}

/// τ(G) against (1/(pq)) ∏ d_i, the left side taken exactly from the
/// Matrix-Tree theorem rather than from a floating eigenvalue product.
inline BoundReport ferrers_chain_check(const BipartiteGraph& g) {
    if (g.m() == 0 || g.n() == 0) throw std::invalid_argument("ferrers_chain_check: both parts must be nonempty");
    BoundReport r;
    r.name = "eq3";
    const auto graph = g.to_graph();
    const bool connected = graph.connected();
    r.lhs = Quantity::rational(BigRational(connected ? tau(graph) : BigInt(0)), "tau");
    r.rhs = Quantity::rational(ferrers_invariant(g), "prod(deg)/(pq)");
    r.holds = *r.lhs.exact <= *r.rhs.exact;
    r.equality = *r.lhs.exact == *r.rhs.exact;
    if (!connected) r.notes.emplace_back("disconnected", "left side is 0");
    return r;
}

/// Checks the hypotheses a ≺ b*, d ≺ λ ≺ d* and, when they hold, compares
/// (1/n) ∏ λ_i with (1/(pq)) ∏ d_i. `lambda` has one entry fewer than `d`,
/// and `d` must be the nonincreasing rearrangement of a ⊕ b.
inline BoundReport product_majorization_check(const Partition& d, std::span<const double> lambda, const Partition& a,
                                      const Partition& b) {
    if (lambda.size() + 1 != d.length())
        throw std::invalid_argument("product_majorization_check: lambda must have exactly one entry fewer than d");
    if (Partition::from_unsorted(concat(a, b)) != d)
        throw std::invalid_argument("product_majorization_check: d is not a rearrangement of a (+) b");
    for (std::size_t k = 0; k < lambda.size(); ++k)
        if (!(lambda[k] > 0) || (k && lambda[k] > lambda[k - 1]))
            throw std::invalid_argument("product_majorization_check: lambda must be positive and nonincreasing");

    BoundReport r;
    r.name = "product-majorization";
    r.mode = ArithmeticMode::toleranced;
    r.tolerance = 1e-9;
    const std::vector<double> dv(d.begin(), d.end());
    const auto dstar = conjugate(d);
    const std::vector<double> dsv(dstar.begin(), dstar.end());
    const bool h1 = gale_ryser(a, b);
    const bool h2 = majorizes(std::span<const double>(dv), lambda, kMajorizationTolerance);
    const bool h3 = majorizes(lambda, std::span<const double>(dsv), kMajorizationTolerance);
    r.notes.emplace_back("a_majorized_by_b_conjugate", h1 ? "true" : "false");
    r.notes.emplace_back("d_majorized_by_lambda", h2 ? "true" : "false");
    r.notes.emplace_back("lambda_majorized_by_d_conjugate", h3 ? "true" : "false");

    double prod = 1.0;
    for (double x : lambda) prod *= x;
    const double n = static_cast<double>(d.length());
    r.lhs = Quantity::real(prod / n, "prod(lambda)/n");
    BigRational rhs(detail::degree_product(d.parts()),
                    BigInt(static_cast<unsigned long>(a.length() * b.length())));
    rhs.canonicalize();
    r.rhs = Quantity::rational(rhs, "prod(d)/(pq)");
    r.hypotheses_met = h1 && h2 && h3;
    if (!r.hypotheses_met) {
        r.holds = true;
        r.notes.emplace_back("verdict", "hypotheses not met");
        return r;
    }
    const double scale = std::max(1.0, std::abs(r.rhs.value));
    r.holds = r.lhs.value <= r.rhs.value + r.tolerance * scale;
    r.equality = std::abs(r.lhs.value - r.rhs.value) <= r.tolerance * scale;
    return r;
}

/// The instance a bipartite graph supplies: degrees, the n−1 largest
/// Laplacian eigenvalues, and the two part degree sequences.
struct ProductInstance {
    Partition d;
    std::vector<double> lambda;
    Partition a;
    Partition b;
};

inline ProductInstance product_instance(const BipartiteGraph& g) {
    if (g.has_isolated_vertex() || g.m() == 0 || g.n() == 0)
        throw std::invalid_argument("product_instance: graph has an isolated vertex");
    ProductInstance inst{Partition::from_unsorted(g.degrees()), laplacian_spectrum(g.to_graph()),
                         Partition::from_unsorted(g.row_degrees()), Partition::from_unsorted(g.col_degrees())};
    inst.lambda.pop_back();
    return inst;
}

/// Every check that applies to a bipartite graph, in a fixed order.
inline std::vector<BoundReport> all_bipartite_checks(const BipartiteGraph& g) {
    std::vector<BoundReport> out;
    const auto graph = g.to_graph();
    out.push_back(bozkurt_check(g));
    out.push_back(venkataramana_check(g));
    out.push_back(grone_merris_check(graph));
    out.push_back(degree_spectrum_check(graph));
    out.push_back(ferrers_chain_check(g));
    if (graph.connected() && graph.vcount() >= 2) {
        auto inst = product_instance(g);
        out.push_back(product_majorization_check(inst.d, inst.lambda, inst.a, inst.b));
    }
    return out;
}

}  // namespace ferrers
