#include "ccn/rational.hpp"

#include <limits>
#include <stdexcept>

namespace ccn {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 v) { return v < 0 ? u128(-v) : u128(v); }

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr i128 kMax = std::numeric_limits<long long>::max();
constexpr i128 kMin = -kMax;

bool fits(i128 v) { return v >= kMin && v <= kMax; }

mpz_class mpz_from_i128(i128 v) {
    bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& v) {
    big_ = std::make_unique<mpq_class>(v);
    big_->canonicalize();
    normalize_big();
}

Rational Rational::from_i128(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    if (d != 1) {
        u128 g = gcd_u128(uabs(n), u128(d));
        if (g != 1) {
            n /= i128(g);
            d /= i128(g);
        }
    }
    Rational r;
    if (fits(n) && fits(d)) {
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }
    r.big_ = std::make_unique<mpq_class>(mpz_from_i128(n), mpz_from_i128(d));
    r.big_->canonicalize();
    return r;
}

void Rational::normalize_big() {
    if (!big_) return;
    const mpz_class& n = big_->get_num();
    const mpz_class& d = big_->get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
    }
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
    return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
    return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

Rational Rational::parse(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (v.get_den() == 0) throw std::domain_error("rational with zero denominator");
    return Rational(v);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
    return big_ ? big_->get_d() : double(num_) / double(den_);
}

Rational Rational::operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (big_) return Rational(mpq_class(1 / *big_));
    return from_i128(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    if (a.den_ == 1 && b.den_ == 1) {
        i128 s = i128(a.num_) + i128(b.num_);
        if (fits(s)) {
            Rational r;
            r.num_ = static_cast<long long>(s);
            return r;
        }
    }
    return Rational::from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    if (a.den_ == 1 && b.den_ == 1) {
        i128 p = i128(a.num_) * b.num_;
        if (fits(p)) {
            Rational r;
            r.num_ = static_cast<long long>(p);
            return r;
        }
    }
    return Rational::from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
    return Rational::from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // a normalized big value never fits inline
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

Rational Rational::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational base = *this, r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

std::size_t Rational::hash() const {
    if (!big_) return std::hash<long long>()(num_) * 31 + std::hash<long long>()(den_);
    return std::hash<std::string>()(big_->get_str());
}

Rational gcd_content(const Rational& a, const Rational& b) {
    mpz_class n, d;
    mpz_gcd(n.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_lcm(d.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    return Rational(mpq_class(n, d));
}

}  // namespace ccn
