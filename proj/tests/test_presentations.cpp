#include "doctest.h"

#include <algorithm>

#include "ccn/presentations.hpp"

using namespace ccn;

namespace {

std::vector<std::string> names(const Presentation& p, bool derived) {
    std::vector<std::string> r;
    for (const Relation& rel : p.relations)
        if (rel.derived == derived) r.push_back(rel.name);
    return r;
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

// Free group elements as matrices of a faithful-enough test: permutations of a small set
QMatrix perm(std::vector<int> images) {
    QMatrix m(images.size(), images.size());
    for (std::size_t i = 0; i < images.size(); ++i) m.set(images[i], i, Rational(1));
    return m;
}

}  // namespace

TEST_CASE("words") {
    Word w = parse_word("T1 T2^-1 T2 T0^2");
    CHECK(word_str(w) == "T1 T0 T0");
    CHECK(inverse(w) == parse_word("T0^-1 T0^-1 T1^-1"));
    CHECK(parse_word("1").empty());
    CHECK(parse_word("P1^(-1)") == Word{{"P1", -1}});
    CHECK_THROWS_AS(parse_word("T1^x"), std::invalid_argument);
}

TEST_CASE("macro expansion") {
    CHECK(expand_macros(parse_word("T(2..2)"), 3).empty());
    CHECK(expand_macros(parse_word("T(1..3)"), 3) == parse_word("T1 T2"));
    CHECK(expand_macros(parse_word("T(3..1)"), 3) == parse_word("T2 T1"));
    CHECK(expand_macros(parse_word("P3"), 3) == parse_word("T3"));
    for (int n = 1; n <= 4; ++n)
        for (int i = 1; i <= n; ++i) CHECK(expand_macros(parse_word("P" + std::to_string(i)), n).size() == 2u * (n - i) + 1);
    CHECK(expand_macros(parse_word("X1"), 2) == parse_word("T1^-1 T2^-1 T1^-1 K0^-1"));
    CHECK(expand_macros(parse_word("X1"), 2) == expand_macros(parse_word("P1^-1 K0^-1"), 2));
    CHECK(expand_macros(parse_word("Y1"), 1) == parse_word("T1 T0"));
    CHECK(expand_macros(parse_word("Y2"), 2) == parse_word("T2 T1 T0 T1^-1"));
    CHECK(expand_macros(parse_word("s(1,3)"), 3) == parse_word("s1 s2 s1"));
    CHECK(expand_macros(parse_word("gamma(1)"), 2) == parse_word("s1 gamma s1"));
    CHECK_THROWS_AS(expand_macros(parse_word("P4"), 3), std::out_of_range);
    CHECK_THROWS_AS(expand_macros(parse_word("T(0..2)"), 3), std::out_of_range);
}

TEST_CASE("affine braid presentation") {
    Presentation p = builtin_presentation("affine_braid_ccn", 2);
    auto prim = names(p, false);
    CHECK(prim.size() == 3);
    CHECK(has(prim, "T0 T1 T0 T1 = T1 T0 T1 T0"));
    CHECK(has(prim, "T1 T2 T1 T2 = T2 T1 T2 T1"));
    CHECK(has(prim, "T0 T2 = T2 T0"));

    Presentation p1 = builtin_presentation("affine_braid_ccn", 1);
    CHECK(names(p1, false) == std::vector<std::string>{"T0 T1 T0 T1 = T1 T0 T1 T0"});

    Presentation p3 = builtin_presentation("affine_braid_ccn", 3);
    auto r3 = names(p3, false);
    CHECK(has(r3, "T1 T2 T1 = T2 T1 T2"));
    CHECK_FALSE(has(r3, "T2 T3 T2 = T3 T2 T3"));
    CHECK(has(r3, "T0 T3 = T3 T0"));
    CHECK(has(names(p3, true), "T1 P2 T1 = P1"));
}

TEST_CASE("double affine braid and DAHA presentations") {
    Presentation p = builtin_presentation("double_affine_braid_ccn", 3);
    auto r = names(p, false);
    CHECK(has(r, "K0 T2 = T2 K0"));
    CHECK(has(r, "K0 T3 = T3 K0"));
    CHECK(has(r, "T1 K0 T1 K0 = K0 T1 K0 T1"));
    CHECK(has(r, "T0 T1^-1 K0 T1 = T1^-1 K0 T1 T0"));
    CHECK_FALSE(has(r, "K0 T1 = T1 K0"));

    Presentation d = builtin_presentation("daha_ccn", 2);
    CHECK(d.hecke.size() == 5);
    Presentation w = builtin_presentation("weyl_ccn", 2);
    auto rw = names(w, false);
    CHECK(has(rw, "s0 s0 = 1"));
    CHECK(has(rw, "s2 s2 = 1"));
    CHECK(has(rw, "s0 s1 s0 s1 = s1 s0 s1 s0"));
    CHECK_THROWS_AS(builtin_presentation("nope", 2), std::invalid_argument);
    for (const auto& name : builtin_names())
        for (int n = 1; n <= 3; ++n) CHECK_NOTHROW(builtin_presentation(name, n).validate());
}

TEST_CASE("presentation JSON") {
    Presentation p = builtin_presentation("daha_ccn", 1);
    auto j = p.to_json();
    CHECK(j["name"] == "daha_ccn");
    CHECK(j["generators"].size() == 3);
    CHECK(j["relations"][0][0][0][0] == "T0");
    CHECK(j["hecke"].size() == 4);
    auto d = builtin_presentation("dDAHA_bcn", 2).to_json();
    CHECK(d.contains("linear_relations"));
}

TEST_CASE("verify with the trivial assignment") {
    Presentation p = builtin_presentation("daha_ccn", 2);
    auto asg = numeric_assignment({{t, Rational(1)}, {t0, Rational(2)}, {tn, Rational(1)}, {un, Rational(1)},
                                   {u0, Rational(1)}, {v, Rational(1)}});
    for (const auto& g : p.generators) asg.set(g, QMatrix::identity(2));
    Report rep = verify(p, asg.action(), {QMatrix::identity(2)});
    for (const auto& c : rep.checks) {
        bool is_t0 = c.name == "T0 ~ t0";
        CHECK_MESSAGE((c.status == Status::pass) != is_t0, c.name);
    }
}

TEST_CASE("verify the Weyl group of type BC_2 by signed permutations") {
    // basis e1, e2, -e1, -e2 as a permutation representation
    PresentationParams pp;
    pp.kappa1 = Scalar(1);
    pp.kappa2 = Scalar(0);
    Presentation p = builtin_presentation("dAHA_bcn", 2, pp);
    auto asg = numeric_assignment({});
    asg.set("s1", perm({1, 0, 3, 2}));
    asg.set("gamma", perm({0, 3, 2, 1}));
    asg.set("y1", QMatrix::identity(4));
    asg.set("y2", QMatrix::identity(4));
    Report rep = verify(p, asg.action(), {QMatrix::identity(4)});
    CHECK(rep.find("s1 s1 = 1")->status == Status::pass);
    CHECK(rep.find("s1 gamma s1 gamma = gamma s1 gamma s1")->status == Status::pass);
    // y = 1 violates s1 y1 - y2 s1 = 1 but satisfies the anticommutator relation with kappa2 = 0 only if gamma = 0
    CHECK(rep.find("s1 y1 - y2 s1 = kappa1")->status == Status::fail);
    CHECK(rep.find("gamma y2 + y2 gamma = kappa2")->status == Status::fail);
    CHECK(rep.find("y1 y2 = y2 y1")->status == Status::pass);
}
