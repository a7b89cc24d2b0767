#pragma once

// Exact rational linear algebra over GMP: Bareiss determinants, inverses,
// linear solves, the Laplacian Moore-Penrose inverse and bordered g-inverses.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ferrers_lab/matrix.hpp"

namespace ferrers {

using BigInt = mpz_class;
using BigRational = mpq_class;
using RatMatrix = DenseMatrix<BigRational>;
using RatVector = std::vector<BigRational>;

/// Always "p/q", including integers ("36/1").
inline std::string to_string(const BigRational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// num/den in lowest terms.
inline BigRational ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("ratio: zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

/// Accepts "p/q" or "p".
inline BigRational parse_rational(const std::string& text) {
    BigRational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = BigRational(static_cast<long>(a(i, j)));
    return out;
}

class SingularMatrix : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fraction-free Gaussian elimination on an integer matrix; pivots on the
/// first nonzero entry in column order.
inline BigInt bareiss_det(DenseMatrix<BigInt> m) {
    if (!m.square()) throw std::invalid_argument("det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    BigInt d = m(n - 1, n - 1);
    return sign < 0 ? BigInt(-d) : d;
}

/// Clears denominators row by row, then runs Bareiss on the integer matrix.
inline BigRational det(const RatMatrix& a) {
    if (!a.square()) throw std::invalid_argument("det: matrix is not square");
    const std::size_t n = a.rows();
    DenseMatrix<BigInt> ints(n, n);
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) ints(i, j) = a(i, j).get_num() * (l / a(i, j).get_den());
        scale *= l;
    }
    BigRational out(bareiss_det(std::move(ints)), scale);
    out.canonicalize();
    return out;
}

inline BigInt det(const IntMatrix& a) {
    DenseMatrix<BigInt> m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = static_cast<long>(a(i, j));
    return bareiss_det(std::move(m));
}

/// Gauss-Jordan on [A | B]; returns X with A X = B.
inline RatMatrix solve(const RatMatrix& a, RatMatrix b) {
    if (!a.square()) throw std::invalid_argument("solve: matrix is not square");
    if (b.rows() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong height");
    const std::size_t n = a.rows(), w = b.cols();
    RatMatrix m = a;
    BigRational factor;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k) == 0) ++piv;
        if (piv == n) throw SingularMatrix("solve: matrix is singular");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            for (std::size_t j = 0; j < w; ++j) std::swap(b(k, j), b(piv, j));
        }
        const BigRational inv = 1 / m(k, k);
        for (std::size_t j = k; j < n; ++j) m(k, j) *= inv;
        for (std::size_t j = 0; j < w; ++j) b(k, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0) continue;
            factor = m(i, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
            for (std::size_t j = 0; j < w; ++j) b(i, j) -= factor * b(k, j);
        }
    }
    return b;
}

inline RatVector solve(const RatMatrix& a, const RatVector& b) {
    RatMatrix rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    RatMatrix x = solve(a, std::move(rhs));
    RatVector out(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) out[i] = x(i, 0);
    return out;
}

inline RatMatrix inverse(const RatMatrix& a) { return solve(a, RatMatrix::identity(a.rows())); }

/// A matrix G with A G A = A for its source A, tagged with how it was built.
struct GInverse {
    enum class Kind { moore_penrose, bordered };

    RatMatrix matrix;
    Kind kind = Kind::moore_penrose;
    /// Deleted vertex for Kind::bordered.
    std::size_t pivot = 0;

    static bool is_g_inverse(const RatMatrix& a, const RatMatrix& g) { return a * g * a == a; }

    static bool is_moore_penrose(const RatMatrix& a, const RatMatrix& g) {
        const RatMatrix ag = a * g, ga = g * a;
        return ag * a == a && ga * g == g && ag.symmetric() && ga.symmetric();
    }
};

class NotConnected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// L⁺ = (L + J/n)⁻¹ − J/n for a connected Laplacian. All four Penrose
/// conditions are verified before returning.
inline GInverse moore_penrose_laplacian(const RatMatrix& lap) {
    if (!lap.square()) throw std::invalid_argument("moore_penrose_laplacian: matrix is not square");
    const std::size_t n = lap.rows();
    if (n == 0) throw std::invalid_argument("moore_penrose_laplacian: empty matrix");
    const BigRational j(1, static_cast<unsigned long>(n));
    RatMatrix shifted = lap;
    for (auto i = 0u; i < n; ++i)
        for (auto k = 0u; k < n; ++k) shifted(i, k) += j;
    RatMatrix g;
    try {
        g = inverse(shifted);
    } catch (const SingularMatrix&) {
        throw NotConnected("moore_penrose_laplacian: L + J/n is singular (graph not connected)");
    }
    for (auto i = 0u; i < n; ++i)
        for (auto k = 0u; k < n; ++k) g(i, k) -= j;
    if (!GInverse::is_moore_penrose(lap, g))
        throw NotConnected("moore_penrose_laplacian: Penrose conditions fail (graph not connected)");
    return {std::move(g), GInverse::Kind::moore_penrose, 0};
}

/// H with H(i) = L(i)⁻¹ and zero i-th row and column; verified to satisfy LHL = L.
/// `vertex` is 0-based.
inline GInverse bordered_ginverse(const RatMatrix& lap, std::size_t vertex) {
    if (!lap.square()) throw std::invalid_argument("bordered_ginverse: matrix is not square");
    const std::size_t n = lap.rows();
    if (vertex >= n) throw std::out_of_range("bordered_ginverse: vertex out of range");
    RatMatrix inv;
    try {
        inv = inverse(lap.principal_minor({vertex}));
    } catch (const SingularMatrix&) {
        throw NotConnected("bordered_ginverse: L(i) is singular (graph not connected)");
    }
    RatMatrix h(n, n);
    for (std::size_t a = 0, ia = 0; a < n; ++a) {
        if (a == vertex) continue;
        for (std::size_t b = 0, ib = 0; b < n; ++b) {
            if (b == vertex) continue;
            h(a, b) = inv(ia, ib);
            ++ib;
        }
        ++ia;
    }
    if (!GInverse::is_g_inverse(lap, h)) throw std::logic_error("bordered_ginverse: LHL != L");
    return {std::move(h), GInverse::Kind::bordered, vertex};
}

}  // namespace ferrers
