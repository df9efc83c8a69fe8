#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ccn/linalg.hpp"
#include "ccn/report.hpp"

namespace ccn {

struct Letter {
    std::string name;
    int exp = 1;

    bool operator==(const Letter& o) const { return name == o.name && exp == o.exp; }
};

using Word = std::vector<Letter>;

// Freely reduced concatenation.
Word operator*(const Word& a, const Word& b);
Word inverse(const Word& w);
Word letter(const std::string& name, int exp = 1);
// Space separated tokens NAME, NAME^-1 or NAME^k; "1" or "" is the empty word.
Word parse_word(const std::string& s);
std::string word_str(const Word& w);

// Macros: T(i..j), P<i>, X<i>, Y<i>, s(i,j), gamma(i). Anything else is kept.
Word expand_macros(const Word& w, int n);

struct WordTerm {
    Scalar coeff = Scalar(1);
    Word word;
};

// sum lhs = sum rhs; the empty word is the identity
struct Relation {
    std::string name;
    std::vector<WordTerm> lhs, rhs;
    bool derived = false;

    bool is_group_relation() const;
};

// (c*w - x)(c*w + x^-1) = 0
struct HeckeConstraint {
    std::string name;
    Scalar coeff = Scalar(1);
    Word word;
    Scalar param;
};

struct Presentation {
    std::string name;
    int n = 1;
    std::vector<std::string> generators;
    std::vector<Relation> relations;
    std::vector<HeckeConstraint> hecke;
    std::string note;

    void validate() const;
    nlohmann::json to_json() const;
    const Relation* find(const std::string& relation_name) const;
};

// Parameters of the degenerate algebras.
struct PresentationParams {
    Scalar kappa1 = Scalar::sym(m1);
    Scalar kappa2 = Scalar::sym(m2) + Scalar::sym(m3);
    Scalar t = Scalar::sym(m2) + Scalar::sym(m3) + Scalar::sym(m6);
    Scalar k1 = Scalar::sym(m1);
    Scalar k2 = Scalar::sym(m2);
    Scalar k3 = Scalar::sym(m3);
};

const std::vector<std::string>& builtin_names();
Presentation builtin_presentation(const std::string& name, int n, const PresentationParams& params = {});

// How generators act on test vectors of type V.
template <class V>
struct Action {
    std::function<V(const std::string& gen, int exp, const V&)> apply;
    std::function<V(const V&, const Scalar&)> scale;
    std::function<std::size_t(const V&)> nonzeros;
};

template <class V>
V apply_word(const Action<V>& act, const Word& w, V v) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = act.apply(it->name, it->exp, v);
    return v;
}

template <class V>
V apply_terms(const Action<V>& act, const std::vector<WordTerm>& terms, const V& v, int n) {
    V acc = act.scale(v, Scalar(0));
    for (const WordTerm& t : terms) acc = acc + act.scale(apply_word(act, expand_macros(t.word, n), v), t.coeff);
    return acc;
}

template <class V>
Report verify(const Presentation& pres, const Action<V>& act, const std::vector<V>& tests) {
    Report rep;
    for (const Relation& r : pres.relations) {
        Stopwatch sw;
        std::size_t res = 0;
        for (const V& v : tests)
            res += act.nonzeros(apply_terms(act, r.lhs, v, pres.n) - apply_terms(act, r.rhs, v, pres.n));
        rep.add(r.name, res, sw.ms(), r.derived ? "derived" : "");
    }
    for (const HeckeConstraint& h : pres.hecke) {
        Stopwatch sw;
        Word w = expand_macros(h.word, pres.n);
        std::size_t res = 0;
        for (const V& v : tests) {
            V a = act.scale(apply_word(act, w, v), h.coeff);
            V b = act.scale(apply_word(act, w, a), h.coeff);
            res += act.nonzeros(b - act.scale(a, h.param - h.param.inverse()) - v);
        }
        rep.add(h.name, res, sw.ms(), "hecke");
    }
    return rep;
}

// Generators acting by matrices on blocks of column vectors.
template <class F>
struct MatrixAssignment {
    std::map<std::string, SparseMatrix<F>> ops;
    std::map<std::string, SparseMatrix<F>> inverses;
    std::function<F(const Scalar&)> coeff;

    void set(const std::string& name, SparseMatrix<F> m) {
        inverses[name] = inverse(m);
        ops[name] = std::move(m);
    }
    void set(const std::string& name, SparseMatrix<F> m, SparseMatrix<F> inv) {
        ops[name] = std::move(m);
        inverses[name] = std::move(inv);
    }

    Action<SparseMatrix<F>> action() const {
        Action<SparseMatrix<F>> a;
        a.apply = [this](const std::string& g, int e, const SparseMatrix<F>& v) {
            const auto& tab = e > 0 ? ops : inverses;
            auto it = tab.find(g);
            if (it == tab.end()) throw std::invalid_argument("unassigned generator " + g);
            if (it->second.ncols() != v.nrows()) throw std::invalid_argument("dimension mismatch for " + g);
            return it->second * v;
        };
        a.scale = [this](const SparseMatrix<F>& v, const Scalar& c) { return v.scaled(coeff(c)); };
        a.nonzeros = [](const SparseMatrix<F>& v) { return v.nonzeros(); };
        return a;
    }
};

inline MatrixAssignment<Scalar> symbolic_assignment() {
    MatrixAssignment<Scalar> a;
    a.coeff = [](const Scalar& s) { return s; };
    return a;
}

inline MatrixAssignment<Rational> numeric_assignment(std::map<Symbol, Rational> point) {
    MatrixAssignment<Rational> a;
    a.coeff = [point = std::move(point)](const Scalar& s) { return s.evaluate(point); };
    return a;
}

}  // namespace ccn
