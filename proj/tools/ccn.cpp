#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ccn/braid_actions.hpp"
#include "ccn/degeneration.hpp"
#include "ccn/polyrep.hpp"
#include "ccn/presentations.hpp"
#include "ccn/quantum_gl.hpp"
#include "ccn/suites.hpp"

using namespace ccn;
using nlohmann::json;

namespace {

constexpr const char* kOutDirEnv = "CCN_REPORT_DIR";

struct Options {
    int N = 2, p = 1, n = 1, m = 1;
    int box = -1, random = 20, seeds = 3;
    unsigned seed = 0;
    std::string numeric, out, mu = "0", sigma = "1/3", name = "daha_ccn", op = "T0", poly = "1", map;
    bool with_constraint = false;
};

int default_box(int n) { return n <= 2 ? 2 : 1; }

json matrix_dump(const Matrix& m) {
    json ent = json::object();
    for (auto [r, c, v] : m.entries())
        ent["(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")"] = v.str();
    return {{"nrows", m.nrows()}, {"ncols", m.ncols()}, {"entries", ent}, {"matrix", m.to_json()}};
}

void emit(const json& j, const std::string& out, const std::string& stem) {
    std::string path = out;
    if (path.empty())
        if (const char* dir = std::getenv(kOutDirEnv)) path = (std::filesystem::path(dir) / (stem + ".json")).string();
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << j.dump(2) << "\n";
}

int finish(const std::string& suite, json config, const Report& rep, const Options& o) {
    json j = rep.to_json();
    j["suite"] = suite;
    j["config"] = std::move(config);
    j["status"] = rep.ok() ? "pass" : "fail";
    std::string stem = suite;
    for (char& c : stem)
        if (c == ' ') c = '-';
    emit(j, o.out, stem);
    return rep.ok() ? 0 : 1;
}

AffineRepConfig affine_config(const Options& o) {
    AffineRepConfig c;
    c.gp = {o.N, o.p};
    c.n = o.n;
    c.m = o.m;
    c.validate();
    return c;
}

ParameterMap parse_map(const Options& o) {
    if (o.map.empty()) return o.with_constraint ? ParameterMap::literal_constrained : ParameterMap::literal;
    for (ParameterMap m : {ParameterMap::literal, ParameterMap::literal_constrained, ParameterMap::inverted_x})
        if (to_string(m) == o.map) return m;
    throw std::invalid_argument("unknown parameter map " + o.map);
}

int run_verify(const std::string& what, const Options& o) {
    json cfg = {{"seed", o.seed}};
    if (what == "qybe") {
        cfg["N"] = o.N;
        return finish("verify qybe", cfg, verify_qybe(o.N), o);
    }
    if (what == "reflection") {
        GlParams gp{o.N, o.p};
        cfg.update({{"N", o.N}, {"p", o.p}});
        Report rep = verify_reflection(gp);
        for (int w = 1; w <= 2; ++w) rep.append(verify_coideal_forms(gp, w));
        return finish("verify reflection", cfg, rep, o);
    }
    if (what == "affine") {
        AffineRepConfig c = affine_config(o);
        cfg.update({{"N", o.N}, {"p", o.p}, {"n", o.n}, {"m", o.m}});
        if (o.numeric.empty()) return finish("verify affine", cfg, verify_affine_relations(c), o);
        NumericPoint pt = parse_point(o.numeric);
        cfg["numeric"] = o.numeric;
        Report rep = verify_affine_relations(c, pt);
        rep.append(verify_T0_on_invariants(c, pt), "invariants: ");
        return finish("verify affine", cfg, rep, o);
    }
    if (what == "invident") {
        AffineRepConfig c = affine_config(o);
        cfg.update({{"N", o.N}, {"p", o.p}, {"n", o.n}, {"m", o.m}, {"seeds", o.seeds}});
        return finish("verify invident", cfg, verify_T0_identities(c, o.seed, o.seeds), o);
    }
    if (what == "daha" || what == "newgen") {
        int box = o.box < 0 ? default_box(o.n) : o.box;
        cfg.update({{"n", o.n}, {"box", box}, {"random", o.random}});
        Report rep = what == "daha" ? verify_daha_on_polynomials(o.n, box, o.random, o.seed)
                                    : verify_newgen(o.n, box, o.random, o.seed);
        return finish("verify " + what, cfg, rep, o);
    }
    if (what == "degeneration") {
        GlParams gp{o.N, o.p};
        cfg.update({{"N", o.N}, {"p", o.p}, {"with_constraint", o.with_constraint}});
        Report rep = verify_coideal_limits(gp);
        rep.append(verify_degenerate_characters(gp), "characters: ");
        AffineRepConfig c;
        c.gp = gp;
        rep.append(verify_yhat(c), "yhat: ");
        return finish("verify degeneration", cfg, rep, o);
    }
    if (what == "daha-limits") {
        int box = o.box < 0 ? 1 : o.box;
        ParameterMap mode = parse_map(o);
        cfg.update({{"n", o.n}, {"box", box}, {"map", to_string(mode)}});
        return finish("verify daha-limits", cfg, verify_dDAHA_degeneration(o.n, box, mode), o);
    }
    if (what == "daha-classical") {
        DahaConfig c{{o.N, o.p}, o.n, o.m, Rational::parse(o.mu)};
        cfg.update({{"N", o.N}, {"p", o.p}, {"n", o.n}, {"m", o.m}, {"mu", o.mu}, {"sigma", o.sigma}});
        Report rep = verify_dAHA(c);
        rep.append(verify_y1_identity(c, Rational::parse(o.sigma)), "y1: ");
        return finish("verify daha-classical", cfg, rep, o);
    }
    throw std::invalid_argument("unknown suite " + what);
}

int run_dump(const std::string& what, const Options& o) {
    json j;
    GlParams gp{o.N, o.p};
    if (what == "rmatrix") {
        j = matrix_dump(build_R(gp));
        j["N"] = o.N;
    } else if (what == "jsigma") {
        gp.validate();
        j = matrix_dump(build_J_sigma(gp));
        j.update({{"N", o.N}, {"p", o.p}});
    } else if (what == "tildej") {
        gp.validate();
        j = matrix_dump(build_tilde_J(gp));
        j.update({{"N", o.N}, {"p", o.p}, {"normalization", "alpha^-1"}});
    } else if (what == "presentation") {
        j = builtin_presentation(o.name, o.n).to_json();
    } else {
        throw std::invalid_argument("unknown dump target " + what);
    }
    emit(j, o.out, "dump-" + what);
    return 0;
}

int run_apply(const Options& o) {
    SahiOperators ops(o.n);
    LaurentPoly f = LaurentPoly::parse(o.n, o.poly);
    Word w = expand_macros(parse_word(o.op), o.n);
    LaurentPoly img = ops.word(w)(f);
    json j = {{"op", o.op}, {"n", o.n}, {"poly", o.poly}, {"image", img.str()}};
    if (o.out.empty() && !std::getenv(kOutDirEnv)) {
        std::cout << img.str() << "\n";
        return 0;
    }
    emit(j, o.out, "apply");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of type C^vee C_n constructions"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* s) {
        s->add_option("--out", o.out, std::string("report file; defaults to stdout or $") + kOutDirEnv);
        s->add_option("--seed", o.seed, "random seed")->capture_default_str();
    };

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"qybe", "reflection", "affine", "invident", "daha", "newgen", "degeneration",
                               "daha-limits", "daha-classical"}));
    verify->add_option("--N", o.N)->capture_default_str();
    verify->add_option("--p", o.p)->capture_default_str();
    verify->add_option("--n", o.n)->capture_default_str();
    verify->add_option("--m", o.m)->capture_default_str();
    verify->add_option("--box", o.box, "box radius; default 2 for n <= 2, else 1");
    verify->add_option("--random", o.random, "random monomials")->capture_default_str();
    verify->add_option("--seeds", o.seeds, "random base points for invident")->capture_default_str();
    verify->add_option("--numeric", o.numeric, "rational point, e.g. q=2,qs=3,qt=5,qe=1");
    verify->add_option("--mu", o.mu)->capture_default_str();
    verify->add_option("--sigma", o.sigma, "sigma value for the y1 identity")->capture_default_str();
    verify->add_flag("--with-constraint", o.with_constraint, "impose m3 = m4 + m5");
    verify->add_option("--map", o.map, "literal | literal_constrained | inverted_x");
    common(verify);

    CLI::App* dump = app.add_subcommand("dump", "print an operator or presentation as JSON");
    std::string target;
    dump->add_option("target", target)->required()->check(
        CLI::IsMember({"rmatrix", "jsigma", "tildej", "presentation"}));
    dump->add_option("--N", o.N)->capture_default_str();
    dump->add_option("--p", o.p)->capture_default_str();
    dump->add_option("--n", o.n)->capture_default_str();
    dump->add_option("--name", o.name, "presentation name")->capture_default_str();
    common(dump);

    CLI::App* apply = app.add_subcommand("apply", "apply a word in the polynomial representation");
    apply->add_option("--op", o.op, "word, e.g. T0 or \"T1^-1 X2\"")->capture_default_str();
    apply->add_option("--n", o.n)->capture_default_str();
    apply->add_option("--poly", o.poly, "Laurent polynomial in x1..xn")->capture_default_str();
    common(apply);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (verify->parsed()) return run_verify(suite, o);
        if (dump->parsed()) return run_dump(target, o);
        return run_apply(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
