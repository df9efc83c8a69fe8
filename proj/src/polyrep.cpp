#include "ccn/polyrep.hpp"

#include <random>
#include <stdexcept>

namespace ccn {

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxVariables) throw std::invalid_argument("number of variables must be in 1..4");
}

Monomial x_monomial(const LaurentPoly::Exponents& a) {
    Monomial m;
    for (std::size_t i = 0; i < a.size(); ++i) m.e[xvar(static_cast<int>(i) + 1)] = static_cast<std::int16_t>(a[i]);
    return m;
}

Poly P(Symbol s, int power = 1) { return Poly::var(s, power); }

}  // namespace

LaurentPoly::Exponents x_exponents(const Monomial& m, int n) {
    LaurentPoly::Exponents a(n);
    for (int i = 0; i < n; ++i) a[i] = m.e[xvar(i + 1)];
    return a;
}

LaurentPoly::LaurentPoly(int n, Poly p) : n_(n), p_(std::move(p)) {
    check_n(n);
    for (const Term& t : p_.terms())
        for (int i = n + 1; i <= kMaxVariables; ++i)
            if (t.m.e[xvar(i)] != 0) throw std::invalid_argument("variable beyond x_n");
}

LaurentPoly LaurentPoly::monomial(int n, const Exponents& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != n) throw std::invalid_argument("exponent vector has wrong length");
    return constant(n, c).scaled(Scalar(Poly::monomial(x_monomial(e))));
}

LaurentPoly LaurentPoly::constant(int n, const Scalar& c) {
    if (!c.is_laurent()) throw std::invalid_argument("coefficients must be Laurent polynomials");
    return LaurentPoly(n, c.num());
}

LaurentPoly LaurentPoly::x(int n, int i, int power) {
    if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
    return LaurentPoly(n, Poly::var(xvar(i), power));
}

LaurentPoly LaurentPoly::parse(int n, const std::string& text) { return constant(n, Scalar::parse(text)); }

std::map<LaurentPoly::Exponents, Scalar> LaurentPoly::terms() const {
    std::map<Exponents, std::vector<Term>> groups;
    for (const Term& t : p_.terms()) {
        Monomial rest = t.m;
        for (int i = 1; i <= n_; ++i) rest.e[xvar(i)] = 0;
        groups[x_exponents(t.m, n_)].push_back({rest, t.c});
    }
    std::map<Exponents, Scalar> out;
    for (auto& [e, ts] : groups) out.emplace(e, Scalar(Poly::from_terms(std::move(ts))));
    return out;
}

std::size_t LaurentPoly::nonzeros() const {
    std::map<Exponents, int> seen;
    for (const Term& t : p_.terms()) seen[x_exponents(t.m, n_)] = 1;
    return seen.size();
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return LaurentPoly(a.n_, a.p_ + b.p_); }
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return LaurentPoly(a.n_, a.p_ - b.p_); }
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return LaurentPoly(a.n_, a.p_ * b.p_); }

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
    if (!c.is_laurent()) throw std::invalid_argument("coefficients must be Laurent polynomials");
    return LaurentPoly(n_, p_ * c.num());
}

std::string LaurentPoly::str() const { return p_.str(); }

SignedPermutation simple_reflection(int n, int i) {
    check_n(n);
    if (i < 1 || i > n) throw std::out_of_range("reflection index out of range");
    SignedPermutation w(n);
    for (int k = 0; k < n; ++k) w[k] = k + 1;
    if (i < n)
        std::swap(w[i - 1], w[i]);
    else
        w[n - 1] = -n;
    return w;
}

namespace {

Poly transform(const Poly& p, int n, const std::function<void(const LaurentPoly::Exponents&, Monomial&)>& fn) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const Term& t : p.terms()) {
        Monomial m = t.m;
        fn(x_exponents(t.m, n), m);
        out.push_back({m, t.c});
    }
    return Poly::from_terms(std::move(out));
}

}  // namespace

LaurentPoly weyl_action(const SignedPermutation& w, const LaurentPoly& f) {
    const int n = f.n();
    if (static_cast<int>(w.size()) != n) throw std::invalid_argument("signed permutation has wrong length");
    return LaurentPoly(n, transform(f.poly(), n, [&](const LaurentPoly::Exponents& a, Monomial& m) {
                           for (int i = 1; i <= n; ++i) m.e[xvar(i)] = 0;
                           for (int i = 0; i < n; ++i) {
                               int target = std::abs(w[i]);
                               m.e[xvar(target)] = static_cast<std::int16_t>(m.e[xvar(target)] + (w[i] > 0 ? a[i] : -a[i]));
                           }
                       }));
}

LaurentPoly s0_action(const LaurentPoly& f) {
    return LaurentPoly(f.n(), transform(f.poly(), f.n(), [](const LaurentPoly::Exponents& a, Monomial& m) {
                           m.e[x1] = static_cast<std::int16_t>(-a[0]);
                           m.e[v] = static_cast<std::int16_t>(m.e[v] + 2 * a[0]);
                       }));
}

PolyOperator operator*(const PolyOperator& a, const PolyOperator& b) {
    return PolyOperator([a, b](const LaurentPoly& f) { return a(b(f)); }, a.desc_ + " " + b.desc_);
}

PolyOperator operator+(const PolyOperator& a, const PolyOperator& b) {
    return PolyOperator([a, b](const LaurentPoly& f) { return a(f) + b(f); }, "(" + a.desc_ + " + " + b.desc_ + ")");
}

PolyOperator PolyOperator::scaled(const Scalar& c) const {
    PolyOperator a = *this;
    return PolyOperator([a, c](const LaurentPoly& f) { return a(f).scaled(c); }, "(" + c.str() + ") " + desc_);
}

namespace {

constexpr int kK0 = 100, kX = 200, kS = 300;

}  // namespace

SahiOperators::SahiOperators(int n) : n_(n) { check_n(n); }

SahiOperators build_sahi_operators(int n) { return SahiOperators(n); }

int SahiOperators::gen_id(const std::string& g) const {
    auto index = [&](std::size_t skip) {
        std::size_t used = 0;
        int i = std::stoi(g.substr(skip), &used);
        if (used + skip != g.size()) throw std::invalid_argument(g);
        return i;
    };
    try {
        if (g == "K0") return kK0;
        if (g == "gamma") return kS + n_;
        if (g.size() >= 2 && g[0] == 'T') {
            int i = index(1);
            if (i >= 0 && i <= n_) return i;
        } else if (g.size() >= 2 && g[0] == 'X') {
            int i = index(1);
            if (i >= 1 && i <= n_) return kX + i;
        } else if (g.size() >= 2 && g[0] == 's') {
            int i = index(1);
            if (i >= 0 && i <= n_) return kS + i;
        }
    } catch (const std::invalid_argument&) {
    }
    throw std::invalid_argument("unknown generator " + g);
}

Poly SahiOperators::dl(int i, const LaurentPoly::Exponents& a) const {
    Poly f = Poly::monomial(x_monomial(a));
    LaurentPoly lf(n_, f);
    Poly wf, den, coeff, lead;
    if (i == 0) {
        wf = s0_action(lf).poly();
        den = Poly(1) - P(v, 2) * P(x1, -2);
        coeff = P(t0, -1) * (Poly(1) - P(v) * P(t0) * P(u0) * P(x1, -1)) *
                (Poly(1) + P(v) * P(t0) * P(u0, -1) * P(x1, -1));
        lead = P(t0);
    } else if (i == n_) {
        Symbol xn = xvar(n_);
        wf = weyl_action(simple_reflection(n_, n_), lf).poly();
        den = Poly(1) - P(xn, 2);
        coeff = P(tn, -1) * (Poly(1) - P(tn) * P(un) * P(xn)) * (Poly(1) + P(tn) * P(un, -1) * P(xn));
        lead = P(tn);
    } else {
        Poly z = P(xvar(i)) * P(xvar(i + 1), -1);
        wf = weyl_action(simple_reflection(n_, i), lf).poly();
        den = Poly(1) - z;
        coeff = P(t, -1) * (Poly(1) - P(t, 2) * z);
        lead = P(t);
    }
    Poly d;
    if (!Poly::divide_exact(wf - f, den, d)) throw std::logic_error("non-exact Demazure-Lusztig division");
    ++divisions_;
    return lead * f + coeff * d;
}

Poly SahiOperators::image(int g, int exp, const LaurentPoly::Exponents& a) const {
    auto& cache = cache_[{g, exp}];
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    Poly f = Poly::monomial(x_monomial(a));
    Poly r;
    if (g <= n_) {
        r = dl(g, a);
        if (exp < 0) {
            Symbol p = g == 0 ? t0 : g == n_ ? tn : t;
            r = r - (P(p) - P(p, -1)) * f;
        }
    } else if (g == kK0) {
        // K0 = X1^-1 P1^-1
        LaurentPoly h(n_, f);
        Word p1 = expand_macros(parse_word("P1"), n_);
        if (exp > 0) {
            for (auto l = p1.rbegin(); l != p1.rend(); ++l) h = apply(l->name, -1, h);
            r = h.poly() * P(x1, -1);
        } else {
            h = LaurentPoly(n_, f * P(x1));
            for (auto l = p1.rbegin(); l != p1.rend(); ++l) h = apply(l->name, 1, h);
            r = h.poly();
        }
    } else if (g > kX && g <= kX + n_) {
        r = f * P(xvar(g - kX), exp);
    } else {
        int i = g - kS;
        LaurentPoly lf(n_, f);
        r = (i == 0 ? s0_action(lf) : weyl_action(simple_reflection(n_, i), lf)).poly();
    }
    cache.emplace(a, r);
    return r;
}

LaurentPoly SahiOperators::apply(const std::string& gen, int exp, const LaurentPoly& f) const {
    if (f.n() != n_) throw std::invalid_argument("polynomial has the wrong number of variables");
    int g = gen_id(gen);
    std::vector<Term> out;
    for (const Term& t : f.poly().terms()) {
        LaurentPoly::Exponents a = x_exponents(t.m, n_);
        Monomial rest = t.m;
        for (int i = 1; i <= n_; ++i) rest.e[xvar(i)] = 0;
        Poly img = image(g, exp, a);
        for (const Term& s : img.terms()) out.push_back({s.m * rest, s.c * t.c});
    }
    return LaurentPoly(n_, Poly::from_terms(std::move(out)));
}

PolyOperator SahiOperators::op(const std::string& gen, int exp) const {
    gen_id(gen);
    return PolyOperator([this, gen, exp](const LaurentPoly& f) { return apply(gen, exp, f); },
                        exp == 1 ? gen : gen + "^" + std::to_string(exp));
}

PolyOperator SahiOperators::word(const Word& w) const {
    Word e = expand_macros(w, n_);
    for (const Letter& l : e) gen_id(l.name);
    return PolyOperator(
        [this, e](const LaurentPoly& f) {
            LaurentPoly r = f;
            for (auto it = e.rbegin(); it != e.rend(); ++it) r = apply(it->name, it->exp, r);
            return r;
        },
        word_str(w));
}

Action<LaurentPoly> SahiOperators::action() const {
    Action<LaurentPoly> a;
    a.apply = [this](const std::string& g, int e, const LaurentPoly& f) { return apply(g, e, f); };
    a.scale = [](const LaurentPoly& f, const Scalar& c) { return f.scaled(c); };
    a.nonzeros = [](const LaurentPoly& f) { return f.nonzeros(); };
    return a;
}

DerivedOperators derived_operators(const SahiOperators& ops) {
    DerivedOperators d;
    for (int i = 1; i <= ops.n(); ++i) {
        d.Y.push_back(ops.word(parse_word("Y" + std::to_string(i))));
        d.X.push_back(ops.word(parse_word("X" + std::to_string(i))));
    }
    d.K0 = ops.op("K0");
    return d;
}

std::vector<LaurentPoly> test_monomials(int n, int d, int r, unsigned seed) {
    check_n(n);
    std::vector<LaurentPoly> out;
    LaurentPoly::Exponents a(n, -d);
    for (;;) {
        out.push_back(LaurentPoly::monomial(n, a));
        int k = 0;
        while (k < n && a[k] == d) a[k++] = -d;
        if (k == n) break;
        ++a[k];
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> e(-3 * d, 3 * d);
    for (int j = 0; j < r; ++j) {
        for (int& x : a) x = e(rng);
        out.push_back(LaurentPoly::monomial(n, a));
    }
    return out;
}

Report verify_daha_on_polynomials(int n, int d, int r, unsigned seed) {
    SahiOperators ops(n);
    std::vector<LaurentPoly> tests = test_monomials(n, d, r, seed);
    Presentation pres = builtin_presentation("daha_sahi_relations", n);
    Report rep = verify(pres, ops.action(), tests);
    rep.append(verify(builtin_presentation("weyl_ccn", n), ops.action(), tests), "weyl: ");
    for (int i = 1; i <= n; ++i) {
        Stopwatch sw;
        PolyOperator X = ops.word(parse_word("X" + std::to_string(i)));
        std::size_t res = 0;
        for (const LaurentPoly& f : tests) res += (X(f) - f * LaurentPoly::x(n, i)).nonzeros();
        rep.add("X" + std::to_string(i) + " acts as x" + std::to_string(i), res, sw.ms());
    }
    rep.add_status("exact divisions", Status::pass, std::to_string(ops.divisions_certified()) + " certified");
    return rep;
}

}  // namespace ccn
