#pragma once

// Floating-point spectra: a cyclic Jacobi eigensolver, the adjacency spectral
// radius of a bipartite graph, Laplacian and normalized Laplacian spectra,
// and the density/spectrum bound checks built on them.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ferrers_lab/exactla.hpp"
#include "ferrers_lab/graphs.hpp"
#include "ferrers_lab/matrix.hpp"

namespace ferrers {

inline constexpr double kSpectralTolerance = 1e-9;

struct EigenDecomposition {
    /// Nonincreasing.
    std::vector<double> values;
    /// Column k of `vectors` belongs to values[k].
    RealMatrix vectors;
    /// max_k ‖A v_k − λ_k v_k‖ / (1 + |λ_k|)
    double residual = 0.0;
    int sweeps = 0;
};

struct JacobiOptions {
    int max_sweeps = 100;
    double threshold = 1e-13;
};

/// Cyclic Jacobi rotations on a symmetric matrix. Stops when the
/// off-diagonal Frobenius norm drops below threshold·max(1, ‖A‖_F).
inline EigenDecomposition symmetric_eigen(const RealMatrix& input, JacobiOptions opt = {}) {
    if (!input.square()) throw std::invalid_argument("symmetric_eigen: matrix is not square");
    const std::size_t n = input.rows();
    RealMatrix a = input;
    RealMatrix v = RealMatrix::identity(n);
    double frob = 0.0;
    for (double x : a.data()) frob += x * x;
    const double stop = opt.threshold * std::max(1.0, std::sqrt(frob));

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    int sweep = 0;
    for (; sweep < opt.max_sweeps && off_norm() > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return a(x, x) > a(y, y); });
    EigenDecomposition out;
    out.sweeps = sweep;
    out.vectors = RealMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values.push_back(a(order[k], order[k]));
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        double r2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = -out.values[k] * out.vectors(i, k);
            for (std::size_t j = 0; j < n; ++j) s += input(i, j) * out.vectors(j, k);
            r2 += s * s;
        }
        out.residual = std::max(out.residual, std::sqrt(r2) / (1.0 + std::abs(out.values[k])));
    }
    return out;
}

inline std::vector<double> eigenvalues(const RealMatrix& a) { return symmetric_eigen(a).values; }

/// Largest adjacency eigenvalue, via the largest eigenvalue of B·Bᵀ. Zero for
/// an edgeless graph.
inline double spectral_radius(const BipartiteGraph& g) {
    if (g.ecount() == 0) return 0.0;
    const auto m = g.m();
    RealMatrix gram(m, m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
            gram(i, k) = static_cast<double>(std::popcount(g.row(i) & g.row(k)));
    const auto eig = symmetric_eigen(gram);
    return std::sqrt(std::max(0.0, eig.values.front()));
}

struct SqrtEdgeBound {
    double lhs = 0.0;  // λ_max
    double rhs = 0.0;  // √e
    bool tight = false;
};

/// λ_max ≤ √e(G), tight iff complete bipartite up to isolated vertices.
inline SqrtEdgeBound sqrt_edge_bound_check(const BipartiteGraph& g) {
    SqrtEdgeBound b;
    b.lhs = spectral_radius(g);
    b.rhs = std::sqrt(static_cast<double>(g.ecount()));
    if (b.lhs > b.rhs + 1e-8) throw std::logic_error("sqrt_edge_bound_check: spectral radius exceeds sqrt(e)");
    b.tight = std::abs(b.lhs - b.rhs) <= 1e-8;
    return b;
}

inline std::vector<double> laplacian_spectrum(const Graph& g) {
    return eigenvalues(laplacian(g).cast<double>());
}

/// Normalized Laplacian eigenvalues, nonincreasing. Requires a connected graph.
inline std::vector<double> normalized_spectrum(const Graph& g) {
    if (!g.connected()) throw NotConnected("normalized_spectrum: graph is not connected");
    auto mu = eigenvalues(normalized_laplacian(g));
    mu.back() = std::abs(mu.back()) <= 1e-10 ? 0.0 : mu.back();
    return mu;
}

struct SpectrumReport {
    double lambda_max = 0.0;
    std::vector<double> adjacency_spectrum;
    std::vector<double> laplacian_spectrum;
    std::vector<double> normalized_spectrum;  // empty when the graph is disconnected
    double residual = 0.0;
};

inline SpectrumReport spectrum_report(const BipartiteGraph& g) {
    const auto graph = g.to_graph();
    SpectrumReport r;
    r.lambda_max = spectral_radius(g);
    auto adj = symmetric_eigen(adjacency_matrix(graph));
    auto lap = symmetric_eigen(laplacian(graph).cast<double>());
    r.adjacency_spectrum = adj.values;
    r.laplacian_spectrum = lap.values;
    r.residual = std::max(adj.residual, lap.residual);
    if (graph.connected() && graph.vcount() > 1) {
        auto norm = symmetric_eigen(normalized_laplacian(graph));
        r.normalized_spectrum = norm.values;
        r.normalized_spectrum.back() = std::abs(norm.values.back()) <= 1e-10 ? 0.0 : norm.values.back();
        r.residual = std::max(r.residual, norm.residual);
    }
    return r;
}

/// The n−2 "nontrivial" normalized eigenvalues of a connected bipartite
/// graph: the spectrum with the top eigenvalue (2) and the bottom one (0)
/// removed, nonincreasing.
inline std::vector<double> nontrivial_normalized_spectrum(const BipartiteGraph& g) {
    auto mu = normalized_spectrum(g.to_graph());
    if (mu.size() < 3) throw std::domain_error("nontrivial spectrum needs at least 3 vertices");
    return {mu.begin() + 1, mu.end() - 1};
}

struct DensityProductCheck {
    double product = 0.0;
    BigRational rho;
    bool holds = false;
};

/// ∏ of the nontrivial normalized eigenvalues against ρ(G) (tolerance 1e-9).
/// ρ is converted to double by round-to-nearest.
inline DensityProductCheck normalized_product_check(const BipartiteGraph& g) {
    DensityProductCheck c;
    auto mu = nontrivial_normalized_spectrum(g);
    c.product = std::accumulate(mu.begin(), mu.end(), 1.0, std::multiplies<>());
    c.rho = bipartite_density(g);
    c.holds = c.product <= c.rho.get_d() + kSpectralTolerance;
    return c;
}

struct PairProductCheck {
    double lhs = 0.0;
    BigRational rho;
    bool sufficient = false;
};

/// ∏_{i=1..k} μ_i(2 − μ_i) over the k largest nontrivial eigenvalues;
/// `sufficient` reports whether it is at most ρ(G). 1 <= k <= ⌊(n−1)/2⌋.
inline PairProductCheck pair_product_check(const BipartiteGraph& g, std::size_t k) {
    const std::size_t n = g.vcount();
    if (n < 3) throw std::domain_error("pair_product_check: needs at least 3 vertices");
    if (k < 1 || k > (n - 1) / 2) throw std::out_of_range("pair_product_check: k must lie in [1, floor((n-1)/2)]");
    auto mu = nontrivial_normalized_spectrum(g);
    PairProductCheck c;
    c.lhs = 1.0;
    for (std::size_t i = 0; i < k; ++i) c.lhs *= mu[i] * (2.0 - mu[i]);
    c.rho = bipartite_density(g);
    c.sufficient = c.lhs <= c.rho.get_d() + kSpectralTolerance;
    return c;
}

/// ρ(G) ≥ 0.544 and some cut vertex has degree exactly 2.
inline bool dense_cut_vertex_hypothesis(const BipartiteGraph& g) {
    if (g.m() == 0 || g.n() == 0) return false;
    if (bipartite_density(g) < BigRational(544, 1000)) return false;
    const auto graph = g.to_graph();
    const auto deg = graph.degrees();
    for (std::size_t v = 0; v < graph.vcount(); ++v)
        if (deg[v] == 2 && graph.is_cut_vertex(v)) return true;
    return false;
}

}  // namespace ferrers
