#pragma once

#include <vector>

#include "treelab/combinatorics.hpp"

namespace treelab {

/// Truncated bivariate power series with exact rational coefficients.
/// Coefficients are kept on the rectangle 0..cap1 x 0..cap2; this window is
/// downward closed, so ring operations and substitution of series with zero
/// constant term are exact on it (and in particular on any total-degree
/// simplex it contains).
class TSeries2 {
public:
    TSeries2(int cap1, int cap2);
    static TSeries2 one(int cap1, int cap2);
    /// x1^i x2^j
    static TSeries2 monomial(int i, int j, int cap1, int cap2);

    int cap1() const { return cap1_; }
    int cap2() const { return cap2_; }
    const Rational& at(int i, int j) const { return c_[idx(i, j)]; }
    Rational& at(int i, int j) { return c_[idx(i, j)]; }
    bool operator==(const TSeries2& o) const = default;

    TSeries2 operator+(const TSeries2& o) const;
    TSeries2 operator-(const TSeries2& o) const;
    TSeries2 operator*(const TSeries2& o) const;
    TSeries2 scaled(const Rational& r) const;
    /// Requires nonzero constant term.
    TSeries2 inverse() const;
    TSeries2 pow(int e) const;

    bool has_zero_constant_term() const { return c_[0] == 0; }

    /// f(a, b) for this = f(x1, x2); a and b must have zero constant term.
    TSeries2 substituted(const TSeries2& a, const TSeries2& b) const;

    /// Compare coefficients with i + j <= total_degree.
    bool equals_to_total_degree(const TSeries2& o, int total_degree) const;

private:
    int idx(int i, int j) const {
        if (i < 0 || i > cap1_ || j < 0 || j > cap2_)
            throw std::out_of_range("TSeries2: index outside truncation window");
        return i * (cap2_ + 1) + j;
    }
    int cap1_, cap2_;
    std::vector<Rational> c_;
};

}  // namespace treelab
