#include "ccn/braid_actions.hpp"

#include <random>

namespace ccn {

void AffineRepConfig::validate() const {
    gp.validate();
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (m < 0) throw std::invalid_argument("m must be non-negative");
    if (character.kind != CharacterSpec::Kind::chi) throw std::invalid_argument("affine action needs a chi character");
}

LocalData<Scalar> local_data(const AffineRepConfig& cfg) {
    cfg.validate();
    return {braiding(cfg.gp), braiding_inv(cfg.gp), build_J_sigma(cfg.gp), build_J_inv(cfg.gp, Scalar::sym(qs)),
            cfg.alpha()};
}

LocalData<Rational> local_data(const AffineRepConfig& cfg, const NumericPoint& pt) {
    LocalData<Scalar> s = local_data(cfg);
    return {specialize(s.sigma, pt), specialize(s.sigma_inv, pt), specialize(s.J, pt), specialize(s.J_inv, pt),
            s.alpha.evaluate(pt)};
}

AffineGenerators<Scalar> build_affine_generators(const AffineRepConfig& cfg) {
    return assemble_generators(cfg.gp.N, cfg.m, cfg.n, local_data(cfg));
}

AffineGenerators<Rational> build_affine_generators(const AffineRepConfig& cfg, const NumericPoint& pt) {
    return assemble_generators(cfg.gp.N, cfg.m, cfg.n, local_data(cfg, pt));
}

namespace {

template <class F>
Report affine_report(const AffineRepConfig& cfg, const AffineGenerators<F>& g,
                     std::function<F(const Scalar&)> coeff) {
    MatrixAssignment<F> asg = g.assignment(coeff);
    Presentation pres = builtin_presentation("affine_braid_ccn", cfg.n);
    Report rep = verify(pres, asg.action(), {SparseMatrix<F>::identity(g.dim())});
    for (int i = 1; i < cfg.n; ++i) {
        Stopwatch sw;
        std::size_t res = hecke_residual(g.T[i], coeff(Scalar::sym(q))).nonzeros();
        rep.add("T" + std::to_string(i) + " ~ q", res, sw.ms(), "hecke");
    }
    Stopwatch sw;
    std::size_t res = hecke_residual(g.T[cfg.n], coeff(Scalar::sym(qs))).nonzeros();
    rep.add("T" + std::to_string(cfg.n) + " ~ qs", res, sw.ms(), "hecke");
    return rep;
}

std::vector<QMatrix> coideal_blocks(const AffineRepConfig& cfg, const NumericPoint& pt) {
    cfg.validate();
    QMatrix c = coideal_matrix_from(specialize(braiding(cfg.gp), pt), specialize(build_J_sigma(cfg.gp), pt),
                                    cfg.gp.N, cfg.slots());
    std::vector<QMatrix> blocks;
    for (int i = 1; i <= cfg.gp.N; ++i)
        for (int l = 1; l <= cfg.gp.N; ++l) blocks.push_back(aux_block(c, cfg.gp.N, i, l));
    return blocks;
}

QMatrix shifted_system(const std::vector<QMatrix>& blocks, const QMatrix& chi) {
    std::vector<QMatrix> rows;
    const std::size_t N = chi.nrows();
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t l = 0; l < N; ++l) {
            const QMatrix& b = blocks[i * N + l];
            rows.push_back(b - QMatrix::scalar(b.nrows(), chi.get(i, l)));
        }
    return QMatrix::vstack(rows);
}

Symbol single_symbol(const Scalar& s) {
    const Poly& p = s.num();
    if (!s.is_laurent() || p.size() != 1 || !p.terms()[0].c.is_one() || p.symbols().size() != 1 ||
        p.terms()[0].m.e[p.symbols()[0]] != 1)
        throw std::invalid_argument("locus search needs the character parameters to be plain symbols");
    return static_cast<Symbol>(p.symbols()[0]);
}

}  // namespace

Report verify_affine_relations(const AffineRepConfig& cfg) {
    return affine_report<Scalar>(cfg, build_affine_generators(cfg), [](const Scalar& s) { return s; });
}

Report verify_affine_relations(const AffineRepConfig& cfg, const NumericPoint& pt) {
    return affine_report<Rational>(cfg, build_affine_generators(cfg, pt),
                                   [&pt](const Scalar& s) { return s.evaluate(pt); });
}

Matrix invariant_system(const AffineRepConfig& cfg) {
    cfg.validate();
    const int N = cfg.gp.N;
    Matrix c = coideal_matrix(cfg.gp, cfg.slots());
    Matrix chi = character_matrix(cfg.gp, cfg.character);
    std::vector<Matrix> rows;
    for (int i = 1; i <= N; ++i)
        for (int l = 1; l <= N; ++l) {
            Matrix b = aux_block(c, N, i, l);
            rows.push_back(b - Matrix::scalar(b.nrows(), chi.get(i - 1, l - 1)));
        }
    return Matrix::vstack(rows);
}

QMatrix invariant_system(const AffineRepConfig& cfg, const NumericPoint& pt) {
    return shifted_system(coideal_blocks(cfg, pt), specialize(character_matrix(cfg.gp, cfg.character), pt));
}

QMatrix invariant_subspace(const AffineRepConfig& cfg, const NumericPoint& pt) {
    return kernel(invariant_system(cfg, pt));
}

Report verify_T0_on_invariants(const AffineRepConfig& cfg, const NumericPoint& pt) {
    Report rep;
    Stopwatch sw;
    QMatrix B = invariant_subspace(cfg, pt);
    std::string dim = "dim " + std::to_string(B.ncols());
    if (B.ncols() == 0) {
        rep.add_status("invariants", Status::inconclusive, "zero invariant space", sw.ms());
        return rep;
    }
    rep.add_status("invariants", Status::pass, dim, sw.ms());
    AffineGenerators<Rational> g = build_affine_generators(cfg, pt);

    sw = Stopwatch();
    TensorSpace sp{cfg.gp.N, cfg.slots()};
    QMatrix jt = embed(specialize(build_tilde_J(cfg.gp, cfg.character.x), pt), {0}, sp);
    QMatrix rhs = g.sigma_VM * (jt * (g.sigma_VM_inv * B));
    std::size_t res = (g.Tinv[0] * B - rhs).nonzeros();
    rep.add("T0^-1 = sigma_VM J~ sigma_VM^-1 on invariants", res, sw.ms(), dim);

    sw = Stopwatch();
    Scalar xs = Scalar::sym(q, cfg.gp.p - cfg.gp.qdim()) * cfg.character.x.inverse();
    Rational x = xs.evaluate(pt);
    QMatrix a = g.T[0] * B - B.scaled(x);
    QMatrix h = g.T[0] * a + a.scaled(x.inverse());
    rep.add("T0 ~ q^(p-q) qt^-1 on invariants", h.nonzeros(), sw.ms(), dim);

    for (int i = 0; i <= cfg.n; ++i) {
        sw = Stopwatch();
        bool stable = restrict_to(g.T[i], B).has_value();
        rep.add("T" + std::to_string(i) + " preserves invariants", stable ? 0 : 1, sw.ms(), dim);
    }
    return rep;
}

std::vector<InvariantLocus> find_invariant_loci(const AffineRepConfig& cfg, const NumericPoint& base) {
    const int N = cfg.gp.N, W = cfg.slots();
    std::vector<QMatrix> blocks = coideal_blocks(cfg, base);
    const Rational Q = base.at(q), QS = base.at(qs);
    const Symbol eta_sym = single_symbol(cfg.character.scale), tau_sym = single_symbol(cfg.character.x);
    std::vector<InvariantLocus> out;
    const QMatrix& corner = blocks[N - 1];  // (1, N): chi value is qe
    for (int a = -W; a <= W; ++a) {
        Rational qe_val = Q.pow(a);
        QMatrix Ka = kernel(corner - QMatrix::scalar(corner.nrows(), qe_val));
        if (Ka.ncols() == 0) continue;
        std::vector<QMatrix> restricted;
        for (const QMatrix& b : blocks) restricted.push_back(b * Ka);
        for (int sign : {1, -1})
            for (int b = -W - 1; b <= W + 1; ++b) {
                NumericPoint pt = base;
                pt[eta_sym] = qe_val;
                pt[tau_sym] = QS.pow(sign) * Q.pow(b);
                QMatrix chi = specialize(character_matrix(cfg.gp, cfg.character), pt);
                std::vector<QMatrix> rows;
                for (int i = 0; i < N; ++i)
                    for (int l = 0; l < N; ++l)
                        rows.push_back(restricted[i * N + l] - Ka.scaled(chi.get(i, l)));
                QMatrix K = kernel(QMatrix::vstack(rows));
                if (K.ncols() == 0) continue;
                out.push_back({a, sign, b, K.ncols(), pt});
            }
    }
    return out;
}

NumericPoint random_base_point(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(2, 9), den(1, 4);
    auto pick = [&]() {
        for (;;) {
            Rational r(num(rng), den(rng));
            if (!(r == Rational(1))) return r;
        }
    };
    Rational a = pick(), b = pick();
    while (b == a || b == a.inverse()) b = pick();
    return {{q, a}, {qs, b}};
}

}  // namespace ccn
