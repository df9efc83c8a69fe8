#include "ccn/series.hpp"

#include <stdexcept>

namespace ccn {

bool TruncatedSeries::is_zero() const {
    for (auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    int k = std::min(a.order(), b.order());
    TruncatedSeries r(k);
    for (int i = 0; i <= k; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int k = std::min(a.order(), b.order());
    TruncatedSeries r(k);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j)
            if (!a.c_[i].is_zero() && !b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Scalar& s) const {
    TruncatedSeries r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_[0].is_zero()) throw std::domain_error("series with zero constant term is not invertible");
    TruncatedSeries r(order());
    Scalar inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
        Scalar s;
        for (int i = 1; i <= n; ++i) s += c_[i] * r.c_[n - i];
        r.c_[n] = -(s * inv0);
    }
    return r;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b.inverse(); }

TruncatedSeries TruncatedSeries::exp_linear(const Scalar& l, int order) {
    TruncatedSeries r(order);
    Scalar p(1);
    Rational fact(1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            p *= l;
            fact *= Rational(k);
        }
        r.c_[k] = p / Scalar(fact);
    }
    return r;
}

std::string TruncatedSeries::str() const {
    std::string s;
    for (int k = 0; k <= order(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[k].str() + ")";
        if (k > 0) s += "*h^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

namespace {

TruncatedSeries poly_series(const Poly& p, const ExponentMap& map, int order) {
    TruncatedSeries r(order);
    for (auto& t : p.terms()) {
        Scalar l;
        for (int s = 0; s < kNumSymbols; ++s) {
            if (t.m.e[s] == 0) continue;
            auto it = map.find(static_cast<Symbol>(s));
            if (it == map.end()) throw std::invalid_argument("unmapped symbol " + std::string(symbol_name(s)));
            l += it->second * Scalar(static_cast<long long>(t.m.e[s]));
        }
        r = r + TruncatedSeries::exp_linear(l, order).scaled(Scalar(t.c));
    }
    return r;
}

}  // namespace

TruncatedSeries to_hbar_series(const Scalar& a, const ExponentMap& map, int order) {
    TruncatedSeries n = poly_series(a.num(), map, order);
    if (a.is_laurent()) return n;
    TruncatedSeries d = poly_series(a.den(), map, order);
    if (d[0].is_zero()) throw std::domain_error("denominator has no constant term in h: " + a.str());
    return n / d;
}

}  // namespace ccn
