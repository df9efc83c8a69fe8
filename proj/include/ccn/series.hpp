#pragma once

#include <map>
#include <string>
#include <vector>

#include "ccn/scalar.hpp"

namespace ccn {

// c[0] + c[1] h + ... + c[order] h^order, truncated.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order = 2) : c_(order + 1) {}
    TruncatedSeries(const Scalar& constant, int order) : c_(order + 1) { c_[0] = constant; }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Scalar& operator[](int k) const { return c_.at(k); }
    Scalar& operator[](int k) { return c_.at(k); }
    bool is_zero() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;
    TruncatedSeries scaled(const Scalar& s) const;
    TruncatedSeries inverse() const;
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

    // exp(h * l) truncated
    static TruncatedSeries exp_linear(const Scalar& l, int order);

    std::string str() const;

private:
    std::vector<Scalar> c_;
};

// Each multiplicative symbol p is sent to exp(h * L_p), L_p a linear form
// in the additive degeneration symbols.
using ExponentMap = std::map<Symbol, Scalar>;

TruncatedSeries to_hbar_series(const Scalar& a, const ExponentMap& map, int order = 2);

}  // namespace ccn
