#include "treelab/combinatorics.hpp"

namespace treelab {

Rational make_rational(Integer num, Integer den) {
    Rational q;
    q.get_num() = std::move(num);
    q.get_den() = std::move(den);
    q.canonicalize();
    return q;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer falling_factorial(const Integer& x, int d) {
    Integer r = 1;
    for (int i = 0; i < d; ++i) r *= x - i;
    return r;
}

Integer catalan(long n) {
    if (n < 0) throw std::invalid_argument("catalan: negative index");
    Integer b = binomial(2 * n, n);
    Integer r;
    mpz_divexact_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n + 1));
    return r;
}

Integer narayana_number(long n, long k) {
    if (n == 0 && k == 0) return 1;
    if (n < 1 || k < 1 || k > n) return 0;
    Integer p = binomial(n, k - 1) * binomial(n, k);
    Integer r;
    mpz_divexact_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(Integer c) {
    IntPoly p;
    p.coeffs_.push_back(std::move(c));
    p.trim();
    return p;
}

IntPoly IntPoly::variable() {
    IntPoly p;
    p.coeffs_ = {Integer(0), Integer(1)};
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Integer> c(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Integer> c(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Integer> c(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const Integer& s) const {
    std::vector<Integer> c = coeffs_;
    for (auto& x : c) x *= s;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly();
    std::vector<Integer> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<long>(i);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::negated_argument() const {
    std::vector<Integer> c = coeffs_;
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPoly(std::move(c));
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += Rational(coeffs_[i]);
    }
    return acc;
}

Integer IntPoly::eval(const Integer& x) const {
    Integer acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

IntPoly narayana_assoc_poly(int n) {
    if (n < 0) throw std::invalid_argument("narayana_assoc_poly: negative index");
    IntPoly t = IntPoly::variable();
    if (n <= 1) return t;
    IntPoly prev = t;   // N~_0
    IntPoly cur = t;    // N~_1
    IntPoly tp1({Integer(1), Integer(1)});                 // t + 1
    IntPoly tm1sq({Integer(1), Integer(-2), Integer(1)});  // (t - 1)^2
    for (int m = 0; m + 2 <= n; ++m) {
        IntPoly rhs = tp1 * cur.scaled(2 * m + 3) - tm1sq * prev.scaled(m);
        // divide exactly by m + 3
        std::vector<Integer> c(rhs.coeffs());
        for (auto& x : c) {
            Integer q;
            mpz_divexact_ui(q.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m + 3));
            x = q;
        }
        prev = cur;
        cur = IntPoly(std::move(c));
    }
    return cur;
}

Integer narayana_derivative_at_one(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("narayana_derivative_at_one: bad index");
    Integer acc = 0;
    for (long k = 1; k <= n; ++k) acc += narayana_number(n, k) * falling_factorial(Integer(k), d);
    return acc;
}

IntPoly fibonacci_poly(int r) {
    if (r < 0) throw std::invalid_argument("fibonacci_poly: negative index");
    IntPoly a;                          // F_0 = 0
    IntPoly b = IntPoly::constant(1);   // F_1
    if (r == 0) return a;
    IntPoly z = IntPoly::variable();
    for (int i = 2; i <= r; ++i) {
        IntPoly c = b + z * a;
        a = b;
        b = c;
    }
    return b;
}

IntPoly binary_height_poly(int r) {
    if (r < 0) throw std::invalid_argument("binary_height_poly: negative index");
    IntPoly b = IntPoly::constant(1);
    IntPoly z = IntPoly::variable();
    IntPoly one = IntPoly::constant(1);
    for (int i = 1; i <= r; ++i) b = one + z * b * b;
    return b;
}

Rational binary_height_at_quarter(int r) {
    Rational b(1);
    Rational q(1, 4);
    for (int i = 1; i <= r; ++i) b = 1 + q * b * b;
    return b;
}

Rational binary_height_deriv_at_quarter(int r) {
    // b_r = B_r(1/4), p_r = B_r'(1/4);  B_r' = B_{r-1}^2 + 2 z B_{r-1} B_{r-1}'
    Rational b(1), p(0);
    Rational q(1, 4);
    for (int i = 1; i <= r; ++i) {
        Rational pn = b * b + 2 * q * b * p;
        b = 1 + q * b * b;
        p = pn;
    }
    return p;
}

Rational binary_height_deriv2_at_quarter(int r) {
    // B_r'' = 4 B_{r-1} B_{r-1}' + 2 z (B_{r-1}'^2 + B_{r-1} B_{r-1}'')
    Rational b(1), p(0), s(0);
    Rational q(1, 4);
    for (int i = 1; i <= r; ++i) {
        Rational sn = 4 * b * p + 2 * q * (p * p + b * s);
        Rational pn = b * b + 2 * q * b * p;
        b = 1 + q * b * b;
        p = pn;
        s = sn;
    }
    return s;
}

}  // namespace treelab
