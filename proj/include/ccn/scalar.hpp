#pragma once

#include <map>
#include <string>

#include "ccn/poly.hpp"

namespace ccn {

// Element of Q(symbols): num/den with den a monic polynomial free of
// monomial factors and coprime to num. Laurent polynomials have den == 1.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long c) : num_(c) {}
    Scalar(const Rational& c) : num_(c) {}
    Scalar(const Poly& p) : num_(p) {}
    Scalar(const Poly& num, const Poly& den);

    static Scalar sym(Symbol s, int power = 1) { return Scalar(Poly::var(s, power)); }
    static Scalar parse(const std::string& text);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }
    bool is_rational() const { return den_.is_one() && num_.is_constant(); }
    Rational to_rational() const;

    Scalar operator-() const;
    Scalar inverse() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
    Scalar pow(long long e) const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Substitute values for some symbols; the rest stay symbolic.
    Scalar substitute(const std::map<Symbol, Scalar>& values) const;
    // Full evaluation; throws if a symbol is missing or the denominator vanishes.
    Rational evaluate(const std::map<Symbol, Rational>& values) const;

    std::string str() const;
    std::size_t hash() const { return num_.hash() * 7919u ^ den_.hash(); }

private:
    static Scalar normalized(Poly num, Poly den);
    Poly num_;
    Poly den_ = Poly(1);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace ccn
