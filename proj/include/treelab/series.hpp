#pragma once

#include <vector>

#include "treelab/combinatorics.hpp"

namespace treelab {

/// Truncated power series with exact rational coefficients, u^0 .. u^order.
/// Used both for series in u (plane-tree substitution) and plain z-series.
class Series {
public:
    explicit Series(int order) : coeffs_(order + 1, Rational(0)) {
        if (order < 0) throw std::invalid_argument("Series: negative order");
    }
    static Series one(int order);
    static Series monomial(int k, int order);
    /// 1 - u^k
    static Series one_minus_pow(int k, int order);
    static Series from_poly(const IntPoly& p, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int k) const { return coeffs_[k]; }
    Rational& operator[](int k) { return coeffs_[k]; }
    bool is_zero() const;
    bool operator==(const Series& o) const { return coeffs_ == o.coeffs_; }

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series& operator+=(const Series& o);
    Series scaled(const Rational& c) const;

    /// Multiplicative inverse; requires nonzero constant term.
    Series inverse() const;
    Series divided_by(const Series& o) const { return *this * o.inverse(); }
    /// Square root with constant term 1 (input constant term must be 1).
    Series sqrt_one() const;
    Series pow(int e) const;
    /// Multiply by u^k (coefficients beyond the order are dropped).
    Series shifted_up(int k) const;
    /// Divide by u^k; the first k coefficients must vanish.
    Series shifted_down(int k) const;

    /// Horner evaluation of an integer polynomial at this series.
    static Series eval_poly(const IntPoly& p, const Series& x);

private:
    std::vector<Rational> coeffs_;
};

/// [z^N] g(u(z)) for the substitution z = u/(1+u)^2, computed as
/// [u^N] g(u) (1-u) (1+u)^{2N-1}. Requires g.order() >= N.
Rational u_extract(const Series& g, int N);

/// Table of [z^n] g(u(z)) for n = 1..N (index n; entry 0 unused).
std::vector<Rational> u_extract_table(const Series& g, int N);

}  // namespace treelab
