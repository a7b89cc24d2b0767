#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ferrers_lab/exactla.hpp"

namespace ferrers {

/// Multivariate polynomial with arbitrary-precision integer coefficients.
/// Terms are keyed by fixed-arity exponent vectors in a sorted map, so
/// iteration order (and therefore equality and serialization) is stable.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;
    using Terms = std::map<Exponents, BigInt>;

    explicit MultiPoly(std::size_t arity = 0) : arity_(arity) {}

    static MultiPoly constant(std::size_t arity, const BigInt& c) {
        MultiPoly p(arity);
        p.add_term(Exponents(arity, 0), c);
        return p;
    }

    static MultiPoly variable(std::size_t arity, std::size_t index) {
        if (index >= arity) throw std::out_of_range("MultiPoly::variable: index out of range");
        Exponents e(arity, 0);
        e[index] = 1;
        MultiPoly p(arity);
        p.add_term(e, 1);
        return p;
    }

    std::size_t arity() const noexcept { return arity_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponents& e, const BigInt& c) {
        if (e.size() != arity_) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_arity(b);
        MultiPoly out(a.arity_);
        Exponents e(a.arity_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    /// Sum of coefficients (value with every indeterminate set to 1).
    BigInt evaluate_at_ones() const {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    void check_arity(const MultiPoly& o) const {
        if (o.arity_ != arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
    }

    std::size_t arity_ = 0;
    Terms terms_;
};

}  // namespace ferrers
