#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace ccn {

// Fixed registry of scalar symbols. Multiplicative parameters come first,
// then the additive parameters used by the classical limits, then the
// Laurent polynomial variables.
enum Symbol : int {
    q, qs, qt, qe, qr, qo, qn,
    t, t0, tn, u0, un, v,
    sigma, tau, eta, rho, omega, nu, mu, lambda,
    m1, m2, m3, m4, m5, m6,
    x1, x2, x3, x4,
    kNumSymbols
};

inline constexpr int kMaxSymbols = 32;
static_assert(kNumSymbols <= kMaxSymbols);

inline constexpr std::array<std::string_view, kNumSymbols> kSymbolNames = {
    "q", "qs", "qt", "qe", "qr", "qo", "qn",
    "t", "t0", "tn", "u0", "un", "v",
    "sigma", "tau", "eta", "rho", "omega", "nu", "mu", "lambda",
    "m1", "m2", "m3", "m4", "m5", "m6",
    "x1", "x2", "x3", "x4"};

inline std::string_view symbol_name(int s) { return kSymbolNames.at(s); }

inline std::optional<Symbol> symbol_from_name(std::string_view name) {
    for (int i = 0; i < kNumSymbols; ++i)
        if (kSymbolNames[i] == name) return static_cast<Symbol>(i);
    return std::nullopt;
}

}  // namespace ccn
