#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ccn/rational.hpp"
#include "ccn/symbols.hpp"

namespace ccn {

struct Monomial {
    std::array<std::int16_t, kMaxSymbols> e{};

    static Monomial var(int s, int power = 1) {
        Monomial m;
        m.e[s] = static_cast<std::int16_t>(power);
        return m;
    }
    bool is_one() const;
    int degree(int s) const { return e[s]; }
    Monomial inverse() const;
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend auto operator<=>(const Monomial& a, const Monomial& b) = default;
    friend bool operator==(const Monomial& a, const Monomial& b) = default;
    std::string str() const;
};

struct Term {
    Monomial m;
    Rational c;
};

// Multivariate Laurent polynomial over Q. Terms are kept sorted in
// decreasing lexicographic order of exponent vectors, symbol 0 most
// significant, with no zero coefficients.
class Poly {
public:
    Poly() = default;
    Poly(long long c);
    Poly(const Rational& c);
    static Poly monomial(const Monomial& m, const Rational& c = Rational(1));
    static Poly var(int s, int power = 1) { return monomial(Monomial::var(s, power)); }
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;
    std::size_t size() const { return terms_.size(); }
    const Term& leading() const { return terms_.front(); }
    Rational constant_term() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    Poly scaled(const Rational& c) const;
    Poly shifted(const Monomial& m) const;
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b);

    // per-symbol minimum and maximum exponents
    Monomial min_exponents() const;
    Monomial max_exponents() const;
    bool is_polynomial() const;
    bool has_symbol(int s) const;
    std::vector<int> symbols() const;

    // Exact quotient a/b in the Laurent ring; false if b does not divide a.
    static bool divide_exact(const Poly& a, const Poly& b, Poly& quotient);

    // coefficients with respect to symbol s
    std::map<int, Poly> coefficients_in(int s) const;

    Rational content() const;

    std::string str() const;
    std::size_t hash() const;

private:
    std::vector<Term> terms_;
};

// Monic gcd of two polynomials with non-negative exponents.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace ccn
