#include "treelab/tseries2.hpp"

namespace treelab {

TSeries2::TSeries2(int cap1, int cap2) : cap1_(cap1), cap2_(cap2), c_((cap1 + 1) * (cap2 + 1), Rational(0)) {
    if (cap1 < 0 || cap2 < 0) throw std::invalid_argument("TSeries2: negative cap");
}

TSeries2 TSeries2::one(int cap1, int cap2) {
    TSeries2 s(cap1, cap2);
    s.at(0, 0) = 1;
    return s;
}

TSeries2 TSeries2::monomial(int i, int j, int cap1, int cap2) {
    TSeries2 s(cap1, cap2);
    if (i <= cap1 && j <= cap2) s.at(i, j) = 1;
    return s;
}

static void check_caps(const TSeries2& a, const TSeries2& b) {
    if (a.cap1() != b.cap1() || a.cap2() != b.cap2())
        throw std::invalid_argument("TSeries2: mixed truncation windows");
}

TSeries2 TSeries2::operator+(const TSeries2& o) const {
    check_caps(*this, o);
    TSeries2 r(cap1_, cap2_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

TSeries2 TSeries2::operator-(const TSeries2& o) const {
    check_caps(*this, o);
    TSeries2 r(cap1_, cap2_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

TSeries2 TSeries2::operator*(const TSeries2& o) const {
    check_caps(*this, o);
    TSeries2 r(cap1_, cap2_);
    for (int i1 = 0; i1 <= cap1_; ++i1)
        for (int j1 = 0; j1 <= cap2_; ++j1) {
            const Rational& a = at(i1, j1);
            if (a == 0) continue;
            for (int i2 = 0; i1 + i2 <= cap1_; ++i2)
                for (int j2 = 0; j1 + j2 <= cap2_; ++j2) {
                    const Rational& b = o.at(i2, j2);
                    if (b == 0) continue;
                    r.at(i1 + i2, j1 + j2) += a * b;
                }
        }
    return r;
}

TSeries2 TSeries2::scaled(const Rational& s) const {
    TSeries2 r(cap1_, cap2_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] * s;
    return r;
}

TSeries2 TSeries2::inverse() const {
    if (c_[0] == 0) throw std::invalid_argument("TSeries2::inverse: zero constant term");
    TSeries2 r(cap1_, cap2_);
    Rational c0inv = Rational(1) / c_[0];
    for (int i = 0; i <= cap1_; ++i)
        for (int j = 0; j <= cap2_; ++j) {
            Rational s = (i == 0 && j == 0) ? Rational(1) : Rational(0);
            for (int k = 0; k <= i; ++k)
                for (int l = 0; l <= j; ++l) {
                    if (k == 0 && l == 0) continue;
                    const Rational& b = at(k, l);
                    if (b == 0) continue;
                    s -= b * r.at(i - k, j - l);
                }
            r.at(i, j) = s * c0inv;
        }
    return r;
}

TSeries2 TSeries2::pow(int e) const {
    if (e < 0) throw std::invalid_argument("TSeries2::pow: negative exponent");
    TSeries2 acc = one(cap1_, cap2_);
    TSeries2 base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

TSeries2 TSeries2::substituted(const TSeries2& a, const TSeries2& b) const {
    check_caps(*this, a);
    check_caps(*this, b);
    if (!a.has_zero_constant_term() || !b.has_zero_constant_term())
        throw std::invalid_argument("TSeries2::substituted: arguments need zero constant term");
    std::vector<TSeries2> apow, bpow;
    apow.reserve(cap1_ + 1);
    bpow.reserve(cap2_ + 1);
    apow.push_back(one(cap1_, cap2_));
    for (int i = 1; i <= cap1_; ++i) apow.push_back(apow.back() * a);
    bpow.push_back(one(cap1_, cap2_));
    for (int j = 1; j <= cap2_; ++j) bpow.push_back(bpow.back() * b);
    TSeries2 r(cap1_, cap2_);
    for (int i = 0; i <= cap1_; ++i)
        for (int j = 0; j <= cap2_; ++j) {
            const Rational& c = at(i, j);
            if (c == 0) continue;
            r = r + (apow[i] * bpow[j]).scaled(c);
        }
    return r;
}

bool TSeries2::equals_to_total_degree(const TSeries2& o, int total_degree) const {
    check_caps(*this, o);
    for (int i = 0; i <= cap1_; ++i)
        for (int j = 0; j <= cap2_ && i + j <= total_degree; ++j)
            if (at(i, j) != o.at(i, j)) return false;
    return true;
}

}  // namespace treelab
