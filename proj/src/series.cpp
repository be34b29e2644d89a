#include "treelab/series.hpp"

namespace treelab {

Series Series::one(int order) {
    Series s(order);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::monomial(int k, int order) {
    Series s(order);
    if (k <= order) s.coeffs_[k] = 1;
    return s;
}

Series Series::one_minus_pow(int k, int order) {
    Series s = one(order);
    if (k <= order) s.coeffs_[k] -= 1;
    return s;
}

Series Series::from_poly(const IntPoly& p, int order) {
    Series s(order);
    for (int k = 0; k <= std::min(order, p.degree()); ++k) s.coeffs_[k] = Rational(p.coeff(k));
    return s;
}

bool Series::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

static void check_same_order(const Series& a, const Series& b) {
    if (a.order() != b.order()) throw std::invalid_argument("Series: mixed truncation orders");
}

Series Series::operator+(const Series& o) const {
    check_same_order(*this, o);
    Series r(order());
    for (int k = 0; k <= order(); ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return r;
}

Series& Series::operator+=(const Series& o) {
    check_same_order(*this, o);
    for (int k = 0; k <= order(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

Series Series::operator-(const Series& o) const {
    check_same_order(*this, o);
    Series r(order());
    for (int k = 0; k <= order(); ++k) r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    return r;
}

Series Series::operator*(const Series& o) const {
    check_same_order(*this, o);
    const int N = order();
    Series r(N);
    for (int i = 0; i <= N; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

Series Series::scaled(const Rational& c) const {
    Series r(order());
    for (int k = 0; k <= order(); ++k) r.coeffs_[k] = coeffs_[k] * c;
    return r;
}

Series Series::inverse() const {
    if (coeffs_[0] == 0) throw std::invalid_argument("Series::inverse: zero constant term");
    const int N = order();
    Series r(N);
    Rational c0inv = Rational(1) / coeffs_[0];
    r.coeffs_[0] = c0inv;
    for (int k = 1; k <= N; ++k) {
        Rational s(0);
        for (int j = 1; j <= k; ++j) {
            if (coeffs_[j] == 0) continue;
            s += coeffs_[j] * r.coeffs_[k - j];
        }
        r.coeffs_[k] = -s * c0inv;
    }
    return r;
}

Series Series::sqrt_one() const {
    if (coeffs_[0] != 1) throw std::invalid_argument("Series::sqrt_one: constant term must be 1");
    const int N = order();
    Series r(N);
    r.coeffs_[0] = 1;
    for (int k = 1; k <= N; ++k) {
        Rational s = coeffs_[k];
        for (int j = 1; j < k; ++j) s -= r.coeffs_[j] * r.coeffs_[k - j];
        r.coeffs_[k] = s / 2;
    }
    return r;
}

Series Series::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Series::pow: negative exponent");
    Series acc = one(order());
    Series base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

Series Series::shifted_up(int k) const {
    Series r(order());
    for (int i = 0; i + k <= order(); ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
}

Series Series::shifted_down(int k) const {
    for (int i = 0; i < k; ++i)
        if (coeffs_[i] != 0) throw std::invalid_argument("Series::shifted_down: nonzero low coefficient");
    Series r(order());
    for (int i = k; i <= order(); ++i) r.coeffs_[i - k] = coeffs_[i];
    return r;
}

Series Series::eval_poly(const IntPoly& p, const Series& x) {
    Series acc(x.order());
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * x;
        acc[0] += Rational(p.coeff(k));
    }
    return acc;
}

std::vector<Rational> u_extract_table(const Series& g, int N) {
    if (g.order() < N) throw std::invalid_argument("u_extract: series order too small");
    // h_n = g (1-u) (1+u)^{2n-1}; start with h_1 = g (1-u^2), then multiply
    // by (1+u)^2 per step.
    std::vector<Rational> h(N + 1, Rational(0));
    for (int k = 0; k <= N; ++k) {
        Rational v = g[k];
        if (k >= 2) v -= g[k - 2];
        h[k] = v;
    }
    std::vector<Rational> out(N + 1, Rational(0));
    for (int n = 1; n <= N; ++n) {
        out[n] = h[n];
        if (n == N) break;
        for (int k = N; k >= 0; --k) {
            if (k >= 1) h[k] += 2 * h[k - 1];
            if (k >= 2) h[k] += h[k - 2];
        }
    }
    return out;
}

Rational u_extract(const Series& g, int N) {
    if (N < 1) throw std::invalid_argument("u_extract: N must be >= 1");
    return u_extract_table(g, N)[N];
}

}  // namespace treelab
