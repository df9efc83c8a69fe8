#include "ccn/presentations.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ccn {

Word operator*(const Word& a, const Word& b) {
    Word r = a;
    for (const Letter& l : b) {
        if (!r.empty() && r.back().name == l.name && r.back().exp == -l.exp)
            r.pop_back();
        else
            r.push_back(l);
    }
    return r;
}

Word inverse(const Word& w) {
    Word r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->name, -it->exp});
    return r;
}

Word letter(const std::string& name, int exp) {
    Word w;
    for (int k = 0; k < std::abs(exp); ++k) w.push_back({name, exp > 0 ? 1 : -1});
    return w;
}

Word parse_word(const std::string& s) {
    std::istringstream in(s);
    std::string tok;
    Word w;
    while (in >> tok) {
        if (tok == "1") continue;
        int e = 1;
        auto caret = tok.rfind('^');
        if (caret != std::string::npos) {
            std::string ex = tok.substr(caret + 1);
            if (ex.size() > 2 && ex.front() == '(' && ex.back() == ')') ex = ex.substr(1, ex.size() - 2);
            try {
                std::size_t used = 0;
                e = std::stoi(ex, &used);
                if (used != ex.size()) throw std::invalid_argument(ex);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad exponent in word token " + tok);
            }
            tok = tok.substr(0, caret);
        }
        if (tok.empty() || e == 0) throw std::invalid_argument("bad word token");
        w = w * letter(tok, e);
    }
    return w;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += w[i].name;
        if (w[i].exp != 1) s += "^" + std::to_string(w[i].exp);
    }
    return s;
}

namespace {

std::string T(int i) { return "T" + std::to_string(i); }
std::string S(int i) { return "s" + std::to_string(i); }

void check_index(int i, int lo, int hi, const std::string& what) {
    if (i < lo || i > hi) throw std::out_of_range(what + " index out of range");
}

Word t_range(int i, int j, int n) {
    check_index(i, 1, n, "T(i..j)");
    check_index(j, 1, n, "T(i..j)");
    Word w;
    if (j > i)
        for (int k = i; k < j; ++k) w.push_back({T(k), 1});
    else
        for (int k = i - 1; k >= j; --k) w.push_back({T(k), 1});
    return w;
}

Word p_word(int i, int n) {
    check_index(i, 1, n, "P");
    return t_range(i, n, n) * Word{{T(n), 1}} * t_range(n, i, n);
}

Word y_word(int i, int n) {
    check_index(i, 1, n, "Y");
    Word c = t_range(i, 1, n);
    return p_word(i, n) * c * Word{{"T0", 1}} * inverse(c);
}

Word x_word(int i, int n) {
    check_index(i, 1, n, "X");
    Word c = t_range(1, i, n);
    return inverse(p_word(i, n)) * inverse(c) * Word{{"K0", -1}} * c;
}

Word sij_word(int i, int j, int n) {
    if (i > j) std::swap(i, j);
    check_index(i, 1, n, "s(i,j)");
    check_index(j, 1, n, "s(i,j)");
    if (i == j) throw std::out_of_range("s(i,j) needs distinct indices");
    Word up, w;
    for (int k = i; k < j - 1; ++k) up.push_back({S(k), 1});
    w = up;
    w.push_back({S(j - 1), 1});
    for (auto it = up.rbegin(); it != up.rend(); ++it) w.push_back(*it);
    return w;
}

Word gamma_word(int i, int n) {
    check_index(i, 1, n, "gamma(i)");
    Word up;
    for (int k = i; k < n; ++k) up.push_back({S(k), 1});
    Word w = up;
    w.push_back({"gamma", 1});
    for (auto it = up.rbegin(); it != up.rend(); ++it) w.push_back(*it);
    return w;
}

Word expand_name(const std::string& name, int n) {
    static const std::regex range(R"(T\((\d+)\.\.(\d+)\))");
    static const std::regex pxy(R"(([PXY])(\d+))");
    static const std::regex sij(R"(s\((\d+),(\d+)\))");
    static const std::regex gam(R"(gamma\((\d+)\))");
    std::smatch m;
    if (std::regex_match(name, m, range)) return t_range(std::stoi(m[1]), std::stoi(m[2]), n);
    if (std::regex_match(name, m, pxy)) {
        int i = std::stoi(m[2]);
        char c = m.str(1)[0];
        return c == 'P' ? p_word(i, n) : c == 'X' ? x_word(i, n) : y_word(i, n);
    }
    if (std::regex_match(name, m, sij)) return sij_word(std::stoi(m[1]), std::stoi(m[2]), n);
    if (std::regex_match(name, m, gam)) return gamma_word(std::stoi(m[1]), n);
    return {{name, 1}};
}

bool is_macro(const std::string& name) {
    Word w = expand_name(name, 64);
    return !(w.size() == 1 && w[0].name == name);
}

}  // namespace

Word expand_macros(const Word& w, int n) {
    Word r;
    for (const Letter& l : w) {
        Word e = expand_name(l.name, n);
        r = r * (l.exp > 0 ? e : inverse(e));
    }
    return r;
}

bool Relation::is_group_relation() const {
    return lhs.size() == 1 && rhs.size() == 1 && lhs[0].coeff.is_one() && rhs[0].coeff.is_one();
}

void Presentation::validate() const {
    std::set<std::string> gens(generators.begin(), generators.end());
    auto check = [&](const Word& w, const std::string& where) {
        for (const Letter& l : w)
            if (!gens.count(l.name) && !is_macro(l.name))
                throw std::invalid_argument("undeclared generator " + l.name + " in " + where);
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i].name == w[i - 1].name && w[i].exp == -w[i - 1].exp)
                throw std::invalid_argument("unreduced word in " + where);
    };
    for (const Relation& r : relations) {
        for (const WordTerm& t : r.lhs) check(t.word, r.name);
        for (const WordTerm& t : r.rhs) check(t.word, r.name);
    }
    for (const HeckeConstraint& h : hecke) check(h.word, h.name);
}

namespace {

nlohmann::json word_json(const Word& w) {
    nlohmann::json a = nlohmann::json::array();
    for (const Letter& l : w) a.push_back({l.name, l.exp});
    return a;
}

nlohmann::json terms_json(const std::vector<WordTerm>& ts) {
    nlohmann::json a = nlohmann::json::array();
    for (const WordTerm& t : ts) a.push_back({t.coeff.str(), word_json(t.word)});
    return a;
}

}  // namespace

nlohmann::json Presentation::to_json() const {
    nlohmann::json rels = nlohmann::json::array(), lin = nlohmann::json::array(), der = nlohmann::json::array(),
                   hk = nlohmann::json::array();
    for (const Relation& r : relations) {
        if (r.is_group_relation()) {
            (r.derived ? der : rels).push_back({word_json(r.lhs[0].word), word_json(r.rhs[0].word)});
        } else {
            lin.push_back({{"name", r.name}, {"lhs", terms_json(r.lhs)}, {"rhs", terms_json(r.rhs)}});
        }
    }
    for (const HeckeConstraint& h : hecke)
        hk.push_back({word_json(h.word), h.param.str(), h.coeff.str()});
    nlohmann::json j = {{"name", name}, {"n", n}, {"generators", generators}, {"relations", rels}, {"hecke", hk}};
    if (!lin.empty()) j["linear_relations"] = lin;
    if (!der.empty()) j["derived"] = der;
    if (!note.empty()) j["note"] = note;
    return j;
}

const Relation* Presentation::find(const std::string& relation_name) const {
    for (const Relation& r : relations)
        if (r.name == relation_name) return &r;
    return nullptr;
}

namespace {

struct Builder {
    Presentation p;

    void group(const Word& lhs, const Word& rhs, bool derived = false) {
        std::string name = word_str(lhs) + " = " + word_str(rhs);
        for (const Relation& r : p.relations)
            if (r.name == name) return;
        p.relations.push_back({name, {{Scalar(1), lhs}}, {{Scalar(1), rhs}}, derived});
    }
    void group(const std::string& lhs, const std::string& rhs, bool derived = false) {
        group(parse_word(lhs), parse_word(rhs), derived);
    }
    void commute(const std::string& a, const std::string& b) { group(a + " " + b, b + " " + a); }
    void linear(std::string name, std::vector<WordTerm> lhs, std::vector<WordTerm> rhs) {
        p.relations.push_back({std::move(name), std::move(lhs), std::move(rhs), false});
    }
    void hecke(const std::string& word, const Scalar& x, const Scalar& c = Scalar(1), std::string name = {}) {
        if (name.empty()) name = word + " ~ " + x.str();
        p.hecke.push_back({name, c, parse_word(word), x});
    }
};

std::string num(int i) { return std::to_string(i); }

// braid relations of type C^vee C_n on generators g0..gn
void affine_braid(Builder& b, const std::string& g, int n) {
    auto G = [&](int i) { return g + num(i); };
    for (int i = 0; i <= n; ++i) b.p.generators.push_back(G(i));
    for (int i = 0; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j) b.commute(G(i), G(j));
    for (int i = 1; i + 1 <= n - 1; ++i)
        b.group(G(i) + " " + G(i + 1) + " " + G(i), G(i + 1) + " " + G(i) + " " + G(i + 1));
    b.group(G(0) + " " + G(1) + " " + G(0) + " " + G(1), G(1) + " " + G(0) + " " + G(1) + " " + G(0));
    b.group(G(n - 1) + " " + G(n) + " " + G(n - 1) + " " + G(n), G(n) + " " + G(n - 1) + " " + G(n) + " " + G(n - 1));
}

void double_affine_braid(Builder& b, int n) {
    affine_braid(b, "T", n);
    b.p.generators.push_back("K0");
    for (int i = 2; i <= n; ++i) b.commute("K0", T(i));
    b.group("T1 K0 T1 K0", "K0 T1 K0 T1");
    b.group("T0 T1^-1 K0 T1", "T1^-1 K0 T1 T0");
    if (n == 1) b.p.note = "literal reading for n=1: T1 is also Tn";
}

void daha_hecke(Builder& b, int n) {
    b.hecke("T0", Scalar::sym(t0));
    b.hecke(T(n), Scalar::sym(tn));
    b.hecke("K0", Scalar::sym(un));
    b.hecke("T0^-1 P1^-1 K0^-1", Scalar::sym(u0), Scalar::sym(v, -1), "(v K0 P1 T0)^-1 ~ u0");
    for (int i = 1; i < n; ++i) b.hecke(T(i), Scalar::sym(t));
}

// Identities among T(i..j) and P_i valid in the braid group
void tij_identities(Builder& b, int n) {
    auto R = [](int i, int j) { return "T(" + num(i) + ".." + num(j) + ")"; };
    for (int i = 1; i < n; ++i) b.group(T(i) + " P" + num(i + 1) + " " + T(i), "P" + num(i), true);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j != i && j != i + 1) b.group(T(i) + " P" + num(j), "P" + num(j) + " " + T(i), true);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.group("P" + num(i) + " P" + num(j), "P" + num(j) + " P" + num(i), true);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            int lo = std::min(i, j), hi = std::max(i, j);
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (k == l) continue;
                    int klo = std::min(k, l), khi = std::max(k, l);
                    Word lhs = parse_word(R(i, j) + " " + R(k, l));
                    if (hi < klo || khi < lo) {
                        b.group(lhs, parse_word(R(k, l) + " " + R(i, j)), true);
                    } else if (k > l && lo >= l && hi <= k - 1) {
                        b.group(lhs, parse_word(R(k, l) + " " + R(i + 1, j + 1)), true);
                    } else if (k < l && lo >= k + 1 && hi <= l) {
                        b.group(lhs, parse_word(R(k, l) + " " + R(i - 1, j - 1)), true);
                    }
                }
        }
}

void newgen(Builder& b, int n) {
    auto X = [](int i) { return "X" + num(i); };
    auto Y = [](int i) { return "Y" + num(i); };
    for (int i = 1; i < n; ++i) {
        b.group(T(i) + " " + Y(i + 1) + " " + T(i), Y(i));
        b.group(T(i) + " " + X(i) + " " + T(i), X(i + 1));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            b.commute(X(i), X(j));
            b.commute(Y(i), Y(j));
        }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j != i && j != i + 1) {
                b.commute(T(i), Y(j));
                b.commute(T(i), X(j));
            }
    if (n >= 2) {
        b.commute(T(n), Y(n - 1));
        b.commute(T(n), X(n - 1));
    }
    for (int i = 2; i <= n - 1; ++i) b.group(X(i) + " P1^-1 Y1", "P1^-1 Y1 " + X(i));
}

void newgen_hecke(Builder& b, int n) {
    b.hecke("Y" + num(n) + " " + T(n) + "^-1", Scalar::sym(t0));
    b.hecke(T(n), Scalar::sym(tn));
    b.hecke("X" + num(n) + "^-1 " + T(n) + "^-1", Scalar::sym(un));
    b.hecke("Y1^-1 P1 X1", Scalar::sym(u0), Scalar::sym(v, -1), "v^-1 Y1^-1 P1 X1 ~ u0");
    for (int i = 1; i < n; ++i) b.hecke(T(i), Scalar::sym(t));
}

// Weyl group of type BC_n on s1..s_{n-1} and gamma (the sign change of the last coordinate)
void finite_weyl(Builder& b, int n) {
    for (int i = 1; i < n; ++i) b.p.generators.push_back(S(i));
    b.p.generators.push_back("gamma");
    for (int i = 1; i < n; ++i) b.group(S(i) + " " + S(i), "1");
    b.group("gamma gamma", "1");
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j) b.commute(S(i), S(j));
    for (int i = 1; i + 1 < n; ++i)
        b.group(S(i) + " " + S(i + 1) + " " + S(i), S(i + 1) + " " + S(i) + " " + S(i + 1));
    for (int i = 1; i + 1 < n; ++i) b.commute(S(i), "gamma");
    if (n >= 2) {
        std::string a = S(n - 1);
        b.group(a + " gamma " + a + " gamma", "gamma " + a + " gamma " + a);
    }
}

WordTerm term(const Scalar& c, const std::string& w) { return {c, parse_word(w)}; }
WordTerm term(const std::string& w) { return {Scalar(1), parse_word(w)}; }

std::string sij(int i, int j) { return "s(" + num(i) + "," + num(j) + ")"; }
std::string gam(int i) { return "gamma(" + num(i) + ")"; }

void degenerate_cross(Builder& b, int n, const Scalar& k1, const Scalar& k23, const std::string& l1,
                      const std::string& l23) {
    auto y = [](int i) { return "y" + num(i); };
    for (int i = 1; i < n; ++i) {
        b.linear(S(i) + " " + y(i) + " - " + y(i + 1) + " " + S(i) + " = " + l1,
                 {term(S(i) + " " + y(i)), term(Scalar(-1), y(i + 1) + " " + S(i))}, {term(k1, "1")});
        for (int j = 1; j <= n; ++j)
            if (j != i && j != i + 1) b.commute(S(i), y(j));
    }
    b.linear("gamma " + y(n) + " + " + y(n) + " gamma = " + l23, {term("gamma " + y(n)), term(y(n) + " gamma")},
             {term(k23, "1")});
    for (int j = 1; j < n; ++j) b.commute("gamma", y(j));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b.commute(y(i), y(j));
}

void dDAHA(Builder& b, int n, const PresentationParams& pp) {
    auto x = [](int i) { return "x" + num(i); };
    auto y = [](int i) { return "y" + num(i); };
    finite_weyl(b, n);
    for (int i = 1; i <= n; ++i) b.p.generators.push_back(x(i));
    for (int i = 1; i <= n; ++i) b.p.generators.push_back(y(i));
    Scalar k1 = pp.k1, k23 = pp.k2 + pp.k3;
    // i)
    for (int i = 1; i < n; ++i) {
        b.group(S(i) + " " + x(i), x(i + 1) + " " + S(i));
        for (int j = 1; j <= n; ++j)
            if (j != i && j != i + 1) b.commute(S(i), x(j));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b.commute(x(i), x(j));
    // ii), iii) and commuting y
    degenerate_cross(b, n, k1, k23, "k1", "k2 + k3");
    b.group("gamma " + x(n), x(n) + "^-1 gamma");
    for (int j = 1; j < n; ++j) b.commute("gamma", x(j));
    // iv)
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::string s = sij(i, j), g = gam(i) + " " + gam(j);
            b.linear("[" + y(j) + "," + x(i) + "]", {term(y(j) + " " + x(i)), term(Scalar(-1), x(i) + " " + y(j))},
                     {term(k1, x(i) + " " + s), term(-k1, x(i) + " " + s + " " + g)});
            b.linear("[" + y(i) + "," + x(j) + "]", {term(y(i) + " " + x(j)), term(Scalar(-1), x(j) + " " + y(i))},
                     {term(k1, x(i) + " " + s), term(-k1, x(j) + " " + s + " " + g)});
        }
    // v)
    for (int i = 1; i <= n; ++i) {
        std::vector<WordTerm> rhs{term(pp.t, x(i))};
        for (int k = i + 1; k <= n; ++k) rhs.push_back(term(-k1, x(i) + " " + sij(i, k)));
        for (int k = 1; k < i; ++k) rhs.push_back(term(-k1, sij(i, k) + " " + x(i)));
        for (int k = 1; k <= n; ++k)
            if (k != i) rhs.push_back(term(-k1, x(i) + " " + sij(i, k) + " " + gam(i) + " " + gam(k)));
        rhs.push_back(term(-k23, x(i) + " " + gam(i)));
        rhs.push_back(term(-pp.k2, gam(i)));
        b.linear("[" + y(i) + "," + x(i) + "]", {term(y(i) + " " + x(i)), term(Scalar(-1), x(i) + " " + y(i))},
                 rhs);
    }
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "weyl_ccn",         "affine_braid_ccn",  "double_affine_braid_ccn", "daha_ccn", "newgen_ccn",
        "daha_hecke_newgen", "daha_sahi_relations", "dAHA_bcn",             "dDAHA_bcn"};
    return names;
}

Presentation builtin_presentation(const std::string& name, int n, const PresentationParams& pp) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    Builder b;
    b.p.name = name;
    b.p.n = n;
    if (name == "weyl_ccn") {
        affine_braid(b, "s", n);
        for (int i = 0; i <= n; ++i) b.group(S(i) + " " + S(i), "1");
    } else if (name == "affine_braid_ccn") {
        affine_braid(b, "T", n);
        tij_identities(b, n);
    } else if (name == "double_affine_braid_ccn") {
        double_affine_braid(b, n);
    } else if (name == "daha_ccn") {
        double_affine_braid(b, n);
        daha_hecke(b, n);
    } else if (name == "newgen_ccn") {
        for (int i = 0; i <= n; ++i) b.p.generators.push_back(T(i));
        b.p.generators.push_back("K0");
        newgen(b, n);
    } else if (name == "daha_hecke_newgen") {
        for (int i = 0; i <= n; ++i) b.p.generators.push_back(T(i));
        b.p.generators.push_back("K0");
        newgen(b, n);
        newgen_hecke(b, n);
    } else if (name == "daha_sahi_relations") {
        double_affine_braid(b, n);
        daha_hecke(b, n);
        newgen(b, n);
        newgen_hecke(b, n);
        tij_identities(b, n);
    } else if (name == "dAHA_bcn") {
        finite_weyl(b, n);
        for (int i = 1; i <= n; ++i) b.p.generators.push_back("y" + num(i));
        degenerate_cross(b, n, pp.kappa1, pp.kappa2, "kappa1", "kappa2");
    } else if (name == "dDAHA_bcn") {
        dDAHA(b, n, pp);
    } else {
        throw std::invalid_argument("unknown presentation " + name);
    }
    b.p.validate();
    return b.p;
}

}  // namespace ccn
