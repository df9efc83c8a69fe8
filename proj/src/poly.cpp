#include "ccn/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccn {

bool Monomial::is_one() const {
    for (auto x : e)
        if (x != 0) return false;
    return true;
}

Monomial Monomial::inverse() const {
    Monomial r;
    for (int i = 0; i < kMaxSymbols; ++i) r.e[i] = static_cast<std::int16_t>(-e[i]);
    return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxSymbols; ++i) {
        int s = a.e[i] + b.e[i];
        if (s > 32767 || s < -32767) throw std::overflow_error("exponent overflow");
        r.e[i] = static_cast<std::int16_t>(s);
    }
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }

std::string Monomial::str() const {
    std::string s;
    for (int i = 0; i < kNumSymbols; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += symbol_name(i);
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

Poly::Poly(long long c) {
    if (c != 0) terms_.push_back({Monomial{}, Rational(c)});
}

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) terms_.push_back({Monomial{}, c});
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
    Poly p;
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return b.m < a.m; });
    Poly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().m == t.m) {
            p.terms_.back().c += t.c;
            if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
        } else if (!t.c.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

bool Poly::is_one() const { return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c.is_one(); }

Rational Poly::constant_term() const {
    for (auto& t : terms_)
        if (t.m.is_one()) return t.c;
    return Rational();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Poly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() && j != b.terms_.end()) {
        if (j->m < i->m) {
            r.terms_.push_back(*i++);
        } else if (i->m < j->m) {
            r.terms_.push_back(*j++);
        } else {
            Rational c = i->c + j->c;
            if (!c.is_zero()) r.terms_.push_back({i->m, std::move(c)});
            ++i;
            ++j;
        }
    }
    r.terms_.insert(r.terms_.end(), i, a.terms_.end());
    r.terms_.insert(r.terms_.end(), j, b.terms_.end());
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.terms_.size() == 1) return b.shifted(a.terms_[0].m).scaled(a.terms_[0].c);
    if (b.terms_.size() == 1) return a.shifted(b.terms_[0].m).scaled(b.terms_[0].c);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (auto& x : a.terms_)
        for (auto& y : b.terms_) out.push_back({x.m * y.m, x.c * y.c});
    return Poly::from_terms(std::move(out));
}

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero()) return Poly();
    if (c.is_one()) return *this;
    Poly r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

Poly Poly::shifted(const Monomial& m) const {
    if (m.is_one()) return *this;
    Poly r = *this;
    for (auto& t : r.terms_) t.m = t.m * m;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(1), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
}

bool operator<(const Poly& a, const Poly& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.terms_[i].m != b.terms_[i].m) return a.terms_[i].m < b.terms_[i].m;
        if (a.terms_[i].c != b.terms_[i].c) return a.terms_[i].c < b.terms_[i].c;
    }
    return a.terms_.size() < b.terms_.size();
}

Monomial Poly::min_exponents() const {
    Monomial r;
    if (terms_.empty()) return r;
    r = terms_[0].m;
    for (auto& t : terms_)
        for (int i = 0; i < kMaxSymbols; ++i) r.e[i] = std::min(r.e[i], t.m.e[i]);
    return r;
}

Monomial Poly::max_exponents() const {
    Monomial r;
    if (terms_.empty()) return r;
    r = terms_[0].m;
    for (auto& t : terms_)
        for (int i = 0; i < kMaxSymbols; ++i) r.e[i] = std::max(r.e[i], t.m.e[i]);
    return r;
}

bool Poly::is_polynomial() const {
    for (auto& t : terms_)
        for (auto x : t.m.e)
            if (x < 0) return false;
    return true;
}

bool Poly::has_symbol(int s) const {
    for (auto& t : terms_)
        if (t.m.e[s] != 0) return true;
    return false;
}

std::vector<int> Poly::symbols() const {
    std::vector<int> r;
    for (int s = 0; s < kMaxSymbols; ++s)
        if (has_symbol(s)) r.push_back(s);
    return r;
}

bool Poly::divide_exact(const Poly& a, const Poly& b, Poly& quotient) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    quotient = Poly();
    if (a.is_zero()) return true;
    if (b.is_monomial()) {
        quotient = a.shifted(b.leading().m.inverse()).scaled(b.leading().c.inverse());
        return true;
    }
    Monomial alo = a.min_exponents(), ahi = a.max_exponents();
    Monomial blo = b.min_exponents(), bhi = b.max_exponents();
    Monomial lo, hi;
    for (int i = 0; i < kMaxSymbols; ++i) {
        lo.e[i] = static_cast<std::int16_t>(alo.e[i] - blo.e[i]);
        hi.e[i] = static_cast<std::int16_t>(ahi.e[i] - bhi.e[i]);
        if (lo.e[i] > hi.e[i]) return false;
    }
    const Term& lb = b.leading();
    Rational inv = lb.c.inverse();
    Poly r = a;
    std::vector<Term> qterms;
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        Monomial m = lr.m / lb.m;
        for (int i = 0; i < kMaxSymbols; ++i)
            if (m.e[i] < lo.e[i] || m.e[i] > hi.e[i]) return false;
        Rational c = lr.c * inv;
        r -= b.shifted(m).scaled(c);
        qterms.push_back({m, c});
    }
    quotient.terms_ = std::move(qterms);  // generated in decreasing order
    return true;
}

std::map<int, Poly> Poly::coefficients_in(int s) const {
    std::map<int, std::vector<Term>> buckets;
    for (auto& t : terms_) {
        Term u = t;
        int d = u.m.e[s];
        u.m.e[s] = 0;
        buckets[d].push_back(std::move(u));
    }
    std::map<int, Poly> r;
    for (auto& [d, ts] : buckets) r[d] = Poly::from_terms(std::move(ts));
    return r;
}

Rational Poly::content() const {
    if (terms_.empty()) return Rational();
    Rational g = terms_[0].c;
    for (std::size_t i = 1; i < terms_.size(); ++i) g = gcd_content(g, terms_[i].c);
    return terms_[0].c.sign() < 0 ? -g : g;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& t : terms_) {
        Rational c = t.c;
        bool neg = c.sign() < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        std::string mono = t.m.str();
        if (mono.empty()) {
            s += c.str();
        } else {
            if (!c.is_one()) s += c.str() + "*";
            s += mono;
        }
    }
    return s;
}

std::size_t Poly::hash() const {
    std::size_t h = terms_.size();
    for (auto& t : terms_) {
        for (auto x : t.m.e) h = h * 1000003u + std::size_t(x + 40000);
        h ^= t.c.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

namespace {

Poly make_monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading().c.inverse());
}

Poly exact_div(const Poly& a, const Poly& b) {
    Poly qt;
    if (!Poly::divide_exact(a, b, qt)) throw std::logic_error("inexact polynomial division in gcd");
    return qt;
}

// univariate view in symbol s: index = degree
using UPoly = std::vector<Poly>;

UPoly to_upoly(const Poly& p, int s) {
    auto cs = p.coefficients_in(s);
    int deg = cs.empty() ? -1 : cs.rbegin()->first;
    UPoly u(deg + 1);
    for (auto& [d, c] : cs) u[d] = c;
    return u;
}

Poly from_upoly(const UPoly& u, int s) {
    Poly r;
    for (std::size_t d = 0; d < u.size(); ++d)
        if (!u[d].is_zero()) r += u[d].shifted(Monomial::var(s, static_cast<int>(d)));
    return r;
}

void trim(UPoly& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly ucontent(const UPoly& u) {
    Poly g;
    for (auto& c : u) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? make_monic(c) : gcd_rec(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// primitive part, also stripped of its numeric content
UPoly uprimitive(const UPoly& u) {
    Poly c = ucontent(u);
    UPoly r(u.size());
    Rational k;
    for (std::size_t i = 0; i < u.size(); ++i) {
        r[i] = c.is_one() ? u[i] : exact_div(u[i], c);
        for (auto& t : r[i].terms()) k = k.is_zero() ? t.c : gcd_content(k, t.c);
    }
    if (!k.is_zero() && !k.is_one()) {
        Rational inv = k.inverse();
        for (auto& x : r) x = x.scaled(inv);
    }
    return r;
}

// pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b
UPoly uprem(UPoly a, const UPoly& b) {
    const Poly& lb = b.back();
    std::size_t db = b.size() - 1;
    trim(a);
    if (a.size() < b.size()) return a;
    int e = static_cast<int>(a.size() - b.size()) + 1;
    while (!a.empty() && a.size() - 1 >= db) {
        Poly la = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c = c * lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim(a);
        --e;
    }
    if (e > 0) {
        Poly f = lb.pow(static_cast<unsigned>(e));
        for (auto& c : a) c = c * f;
    }
    return a;
}

// Arithmetic modulo the Mersenne prime 2^61 - 1 for coprimality tests.
constexpr std::uint64_t kP = (1ull << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 z = (unsigned __int128)a * b;
    std::uint64_t lo = static_cast<std::uint64_t>(z & kP), hi = static_cast<std::uint64_t>(z >> 61);
    std::uint64_t r = lo + hi;
    return r >= kP ? r - kP : r;
}
std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = a + b;
    return r >= kP ? r - kP : r;
}
std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kP - b; }
std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}
std::uint64_t invmod(std::uint64_t a) { return powmod(a, kP - 2); }

bool rational_mod(const Rational& c, std::uint64_t& out) {
    mpz_class n = c.numerator() % mpz_class(static_cast<unsigned long>(kP));
    mpz_class d = c.denominator() % mpz_class(static_cast<unsigned long>(kP));
    if (n < 0) n += static_cast<unsigned long>(kP);
    if (d == 0) return false;
    out = mulmod(n.get_ui(), invmod(d.get_ui()));
    return true;
}

// image of p in F_p[s] after evaluating all other symbols at pts
bool eval_mod(const Poly& p, int s, const std::array<std::uint64_t, kMaxSymbols>& pts,
              std::vector<std::uint64_t>& out) {
    out.assign(p.max_exponents().e[s] + 1, 0);
    for (auto& t : p.terms()) {
        std::uint64_t c;
        if (!rational_mod(t.c, c)) return false;
        for (int i = 0; i < kMaxSymbols; ++i)
            if (i != s && t.m.e[i] != 0) c = mulmod(c, powmod(pts[i], static_cast<std::uint64_t>(t.m.e[i])));
        out[t.m.e[s]] = addmod(out[t.m.e[s]], c);
    }
    return true;
}

std::size_t umod_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
    auto strip = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    strip(a);
    strip(b);
    while (!b.empty()) {
        std::uint64_t inv = invmod(b.back());
        while (a.size() >= b.size()) {
            std::uint64_t f = mulmod(a.back(), inv);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = submod(a[i + shift], mulmod(f, b[i]));
            strip(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

// True if the images certify that gcd(a, b) has degree 0 in every shared symbol.
bool certified_coprime(const Poly& a, const Poly& b) {
    Monomial ha = a.max_exponents(), hb = b.max_exponents();
    std::array<std::uint64_t, kMaxSymbols> pts{};
    std::uint64_t seed = 0x9e3779b97f4a7c15ull ^ (a.hash() * 31 + b.hash());
    for (auto& x : pts) {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        x = 2 + seed % (kP - 3);
    }
    for (int s = 0; s < kMaxSymbols; ++s) {
        if (ha.e[s] == 0 || hb.e[s] == 0) continue;
        std::vector<std::uint64_t> ea, eb;
        if (!eval_mod(a, s, pts, ea) || !eval_mod(b, s, pts, eb)) return false;
        if (ea.size() != static_cast<std::size_t>(ha.e[s]) + 1 || ea.back() == 0) return false;
        if (eb.size() != static_cast<std::size_t>(hb.e[s]) + 1 || eb.back() == 0) return false;
        if (umod_gcd_degree(ea, eb) != 0) return false;
    }
    return true;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return Poly(1);
    if (a == b) return make_monic(a);

    Monomial ma = a.min_exponents(), mb = b.min_exponents(), mg;
    for (int i = 0; i < kMaxSymbols; ++i) mg.e[i] = std::min(ma.e[i], mb.e[i]);
    Poly ap = a.shifted(ma.inverse()), bp = b.shifted(mb.inverse());
    Poly mono = Poly::monomial(mg);
    if (ap.is_constant() || bp.is_constant()) return mono;
    if (certified_coprime(ap, bp)) return mono;
    {
        Poly qt;
        if (Poly::divide_exact(ap, bp, qt)) return make_monic(mono * bp);
        if (Poly::divide_exact(bp, ap, qt)) return make_monic(mono * ap);
    }

    // main variable: present in both with smallest combined degree, else any
    int s = -1, best = 1 << 30;
    Monomial ha = ap.max_exponents(), hb = bp.max_exponents();
    for (int i = 0; i < kMaxSymbols; ++i) {
        if (ha.e[i] > 0 && hb.e[i] > 0 && ha.e[i] + hb.e[i] < best) {
            best = ha.e[i] + hb.e[i];
            s = i;
        }
    }
    if (s < 0) {
        for (int i = 0; i < kMaxSymbols; ++i)
            if (ha.e[i] > 0) {
                s = i;
                break;
            }
    }
    UPoly ua = to_upoly(ap, s), ub = to_upoly(bp, s);
    Poly ca = ucontent(ua), cb = ucontent(ub);
    Poly cg = gcd_rec(ca, cb);
    if (ua.size() <= 1 || ub.size() <= 1) return make_monic(mono * cg);
    UPoly pa = uprimitive(ua), pb = uprimitive(ub);
    if (pa.size() < pb.size()) std::swap(pa, pb);

    // subresultant remainder sequence
    Poly g(1), h(1);
    while (true) {
        std::size_t delta = pa.size() - pb.size();
        UPoly r = uprem(pa, pb);
        if (r.empty()) break;
        if (r.size() == 1) {
            pb = UPoly{Poly(1)};
            break;
        }
        Poly div = g * h.pow(static_cast<unsigned>(delta));
        for (auto& c : r) c = exact_div(c, div);
        pa = std::move(pb);
        pb = std::move(r);
        g = pa.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact_div(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
    Poly gp = from_upoly(uprimitive(pb), s);
    return make_monic(mono * cg * gp);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) { return gcd_rec(a, b); }

}  // namespace ccn
