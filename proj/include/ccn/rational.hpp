#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace ccn {

// Exact rational number. Values whose numerator and denominator fit in
// int64 are stored inline; everything else lives in a GMP rational.
class Rational {
public:
    Rational() = default;
    Rational(long long v) : num_(v) {}
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& v);

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    static Rational parse(const std::string& s);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;
    bool is_small() const { return !big_; }

    mpq_class to_mpq() const;
    std::string str() const;
    double to_double() const;

    Rational operator-() const;
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    Rational pow(long long e) const;

    // numerator and denominator as GMP integers
    mpz_class numerator() const;
    mpz_class denominator() const;

    std::size_t hash() const;

private:
    static Rational from_i128(__int128 n, __int128 d);
    void normalize_big();

    long long num_ = 0;
    long long den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

Rational gcd_content(const Rational& a, const Rational& b);

}  // namespace ccn
