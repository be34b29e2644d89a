#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace treelab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonicalized rational num/den.
Rational make_rational(Integer num, Integer den);

Integer binomial(long n, long k);
Integer factorial(long n);

/// Falling factorial x (x-1) ... (x-d+1).
Integer falling_factorial(const Integer& x, int d);

/// C_n = binom(2n, n) / (n+1).
Integer catalan(long n);

/// N_{n,k} = (1/n) binom(n, k-1) binom(n, k) for 1 <= k <= n, N_{0,0} = 1,
/// zero everywhere else.
Integer narayana_number(long n, long k);

/// Dense integer polynomial, coefficient index = degree. The zero polynomial
/// stores no coefficients and reports degree -1 (stand-in for -infinity).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    static IntPoly constant(Integer c);
    static IntPoly variable();  // z

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Integer coeff(int k) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly scaled(const Integer& c) const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

    IntPoly derivative() const;
    /// p(-z)
    IntPoly negated_argument() const;
    Rational eval(const Rational& x) const;
    Integer eval(const Integer& x) const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Associated Narayana polynomial N~_n(t) = t N_n(t), built by the three-term
/// recurrence (n+3) N~_{n+2} = (2n+3)(t+1) N~_{n+1} - n (t-1)^2 N~_n.
IntPoly narayana_assoc_poly(int n);

/// N~_n^{(d)}(1) = sum_k N_{n,k} k(k-1)...(k-d+1).
Integer narayana_derivative_at_one(int n, int d);

/// Fibonacci polynomial F_r: F_0 = 0, F_1 = 1, F_r = F_{r-1} + z F_{r-2}.
IntPoly fibonacci_poly(int r);

/// Binary-tree bounded-height polynomial: B_0 = 1, B_r = 1 + z B_{r-1}^2.
IntPoly binary_height_poly(int r);

/// B_r(1/4) and B_r'(1/4) evaluated by value recurrences (the polynomials
/// themselves have degree 2^r - 1, so they are never expanded).
Rational binary_height_at_quarter(int r);
Rational binary_height_deriv_at_quarter(int r);
Rational binary_height_deriv2_at_quarter(int r);

}  // namespace treelab
