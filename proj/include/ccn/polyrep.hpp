#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ccn/presentations.hpp"
#include "ccn/report.hpp"
#include "ccn/scalar.hpp"

namespace ccn {

inline constexpr int kMaxVariables = 4;

inline Symbol xvar(int i) { return static_cast<Symbol>(x1 + i - 1); }

// Laurent polynomial in x_1..x_n whose coefficients are Laurent polynomials in the parameters.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;

    explicit LaurentPoly(int n = 1, Poly p = {});
    static LaurentPoly monomial(int n, const Exponents& e, const Scalar& c = Scalar(1));
    static LaurentPoly constant(int n, const Scalar& c);
    static LaurentPoly x(int n, int i, int power = 1);
    // e.g. "x1^2*x2^-1 + t*x1"
    static LaurentPoly parse(int n, const std::string& text);

    int n() const { return n_; }
    const Poly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    std::map<Exponents, Scalar> terms() const;
    // number of distinct x-monomials
    std::size_t nonzeros() const;

    LaurentPoly operator-() const { return LaurentPoly(n_, -p_); }
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.n_ == b.n_ && a.p_ == b.p_; }
    LaurentPoly scaled(const Scalar& c) const;
    std::string str() const;

private:
    int n_;
    Poly p_;
};

// Splits c*x^a*(parameters) into the x exponent vector and the parameter part.
LaurentPoly::Exponents x_exponents(const Monomial& m, int n);

// x_i -> x_{|w_i|}^{sign w_i}, 1-based
using SignedPermutation = std::vector<int>;

SignedPermutation simple_reflection(int n, int i);  // i < n swaps, i = n inverts x_n
LaurentPoly weyl_action(const SignedPermutation& w, const LaurentPoly& f);
// x_1 -> v^2 x_1^{-1}
LaurentPoly s0_action(const LaurentPoly& f);

class PolyOperator {
public:
    using Fn = std::function<LaurentPoly(const LaurentPoly&)>;

    PolyOperator() = default;
    PolyOperator(Fn f, std::string description) : f_(std::move(f)), desc_(std::move(description)) {}

    LaurentPoly operator()(const LaurentPoly& f) const { return f_(f); }
    const std::string& description() const { return desc_; }

    friend PolyOperator operator*(const PolyOperator& a, const PolyOperator& b);
    friend PolyOperator operator+(const PolyOperator& a, const PolyOperator& b);
    PolyOperator scaled(const Scalar& c) const;

private:
    Fn f_;
    std::string desc_;
};

// Demazure-Lusztig operators of the faithful C^vee C_n representation.
class SahiOperators {
public:
    explicit SahiOperators(int n);

    int n() const { return n_; }
    // Generators T0..Tn, K0, X1..Xn (multiplication), s0..sn and gamma (Weyl substitutions).
    LaurentPoly apply(const std::string& gen, int exp, const LaurentPoly& f) const;
    PolyOperator op(const std::string& gen, int exp = 1) const;
    // macro-expanded word, applied right to left
    PolyOperator word(const Word& w) const;
    Action<LaurentPoly> action() const;

    std::size_t divisions_certified() const { return divisions_; }

private:
    Poly image(int gen, int exp, const LaurentPoly::Exponents& a) const;
    Poly dl(int gen, const LaurentPoly::Exponents& a) const;
    int gen_id(const std::string& gen) const;

    int n_;
    mutable std::map<std::pair<int, int>, std::map<LaurentPoly::Exponents, Poly>> cache_;
    mutable std::size_t divisions_ = 0;
};

SahiOperators build_sahi_operators(int n);

struct DerivedOperators {
    std::vector<PolyOperator> Y, X;  // 1-based lists stored from index 0
    PolyOperator K0;
};
DerivedOperators derived_operators(const SahiOperators& ops);

// Box monomials [-d,d]^n followed by r random monomials in [-3d,3d]^n.
std::vector<LaurentPoly> test_monomials(int n, int d, int r, unsigned seed);

Report verify_daha_on_polynomials(int n, int d, int r, unsigned seed = 0);

}  // namespace ccn
