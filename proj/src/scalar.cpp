#include "ccn/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace ccn {

namespace {

Poly div_or_throw(const Poly& a, const Poly& b) {
    Poly r;
    if (!Poly::divide_exact(a, b, r)) throw std::logic_error("inexact division while normalizing");
    return r;
}

}  // namespace

Scalar::Scalar(const Poly& num, const Poly& den) { *this = normalized(num, den); }

Scalar Scalar::normalized(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("division by zero");
    Scalar r;
    if (num.is_zero()) return r;
    if (den.is_monomial()) {
        r.num_ = num.shifted(den.leading().m.inverse()).scaled(den.leading().c.inverse());
        return r;
    }
    Monomial md = den.min_exponents();
    den = den.shifted(md.inverse());
    num = num.shifted(md.inverse());
    Monomial mn = num.min_exponents();
    Poly np = num.shifted(mn.inverse());
    Poly g = poly_gcd(np, den);
    if (!g.is_one()) {
        np = div_or_throw(np, g);
        den = div_or_throw(den, g);
    }
    Rational lc = den.leading().c;
    num = np.shifted(mn);
    if (den.is_monomial()) {
        r.num_ = num.shifted(den.leading().m.inverse()).scaled(lc.inverse());
        return r;
    }
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

Rational Scalar::to_rational() const {
    if (!is_rational()) throw std::logic_error("scalar is not a rational constant: " + str());
    return num_.constant_term();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return normalized(den_, num_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) {
        Scalar r;
        r.num_ = a.num_ + b.num_;
        return r;
    }
    if (a.den_ == b.den_) return Scalar::normalized(a.num_ + b.num_, a.den_);
    if (b.den_.is_one()) return Scalar::normalized(a.num_ + b.num_ * a.den_, a.den_);
    if (a.den_.is_one()) return Scalar::normalized(a.num_ * b.den_ + b.num_, b.den_);
    Poly g = poly_gcd(a.den_, b.den_);
    if (g.is_one()) return Scalar::normalized(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Poly ad = div_or_throw(a.den_, g), bd = div_or_throw(b.den_, g);
    return Scalar::normalized(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.den_.is_one() && b.den_.is_one()) {
        Scalar r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    return Scalar::normalized(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_zero()) return Scalar();
    if (b.den_.is_one() && b.num_.is_monomial() && a.den_.is_one()) {
        Scalar r;
        r.num_ = a.num_.shifted(b.num_.leading().m.inverse()).scaled(b.num_.leading().c.inverse());
        return r;
    }
    return Scalar::normalized(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

namespace {

Scalar subst_poly(const Poly& p, const std::map<Symbol, Scalar>& values) {
    std::map<std::pair<int, int>, Scalar> powers;
    auto power = [&](int s, int e) -> const Scalar& {
        auto key = std::make_pair(s, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, values.at(static_cast<Symbol>(s)).pow(e)).first;
        return it->second;
    };
    Scalar acc;
    Poly laurent;
    for (auto& t : p.terms()) {
        Monomial rest;
        Scalar f(1);
        bool symbolic = false;
        for (int s = 0; s < kNumSymbols; ++s) {
            if (t.m.e[s] == 0) continue;
            if (values.count(static_cast<Symbol>(s))) {
                f *= power(s, t.m.e[s]);
                symbolic = true;
            } else {
                rest.e[s] = t.m.e[s];
            }
        }
        if (!symbolic)
            laurent += Poly::monomial(t.m, t.c);
        else
            acc += f * Scalar(Poly::monomial(rest, t.c));
    }
    return acc + Scalar(laurent);
}

}  // namespace

Scalar Scalar::substitute(const std::map<Symbol, Scalar>& values) const {
    Scalar n = subst_poly(num_, values);
    if (den_.is_one()) return n;
    return n / subst_poly(den_, values);
}

Rational Scalar::evaluate(const std::map<Symbol, Rational>& values) const {
    std::map<Symbol, Scalar> sv;
    for (auto& [s, v] : values) sv.emplace(s, Scalar(v));
    auto check = [&](const Poly& p) {
        for (int s : p.symbols())
            if (!values.count(static_cast<Symbol>(s)))
                throw std::invalid_argument("no value for symbol " + std::string(symbol_name(s)));
    };
    check(num_);
    check(den_);
    Scalar d = subst_poly(den_, sv);
    if (d.is_zero()) throw std::domain_error("denominator vanishes at the given point");
    return (subst_poly(num_, sv) / d).to_rational();
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.size() > 1 ? "(" + num_.str() + ")" : num_.str();
    return n + "/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// Recursive descent parser for + - * / ^ with integer exponents.
namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Scalar parse_all() {
        Scalar r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("cannot parse scalar '" + s_ + "' at " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Scalar expr() {
        Scalar r = term();
        while (true) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }
    Scalar term() {
        Scalar r = unary();
        while (true) {
            if (eat('*'))
                r *= unary();
            else if (eat('/'))
                r /= unary();
            else
                return r;
        }
    }
    Scalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    long long exponent() {
        skip();
        if (eat('(')) {
            long long e = integer_with_sign();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        return integer_with_sign();
    }
    long long integer_with_sign() {
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        long long e = std::stoll(s_.substr(start, pos_ - start));
        return neg ? -e : e;
    }
    Scalar power() {
        Scalar base = atom();
        if (eat('^')) return base.pow(exponent());
        return base;
    }
    Scalar atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Scalar(Rational::parse(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto sym = symbol_from_name(name);
            if (!sym) fail("unknown symbol '" + name + "'");
            return Scalar::sym(*sym);
        }
        fail("unexpected character");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(const std::string& text) { return Parser(text).parse_all(); }

}  // namespace ccn
