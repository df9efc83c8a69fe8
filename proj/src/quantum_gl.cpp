#include "ccn/quantum_gl.hpp"

#include <stdexcept>

namespace ccn {

void GlParams::validate() const {
    if (N < 2) throw std::invalid_argument("N must be at least 2");
    if (p < 1 || 2 * p > N) throw std::invalid_argument("p must satisfy 1 <= p <= N/2");
}

Matrix unit(int N, int i, int j, const Scalar& c) {
    Matrix m(N, N);
    m.set(i - 1, j - 1, c);
    return m;
}

namespace {

// R_{ij}^{kl} at (row kl, col ij) with the off-diagonal weight w
Matrix r_from_table(int N, const Scalar& diag, const Scalar& w) {
    Matrix r(N * N, N * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            std::size_t col = i * N + j;
            if (i == j) {
                r.set(col, col, diag);
            } else {
                r.set(col, col, Scalar(1));
                if (i < j) r.set(j * N + i, col, w);  // i = l < j = k
            }
        }
    return r;
}

Scalar Q() { return Scalar::sym(q); }
Scalar Qi() { return Scalar::sym(q, -1); }

}  // namespace

Matrix build_R(const GlParams& gp) { return r_from_table(gp.N, Q(), Q() - Qi()); }
Matrix build_R_inv(const GlParams& gp) { return r_from_table(gp.N, Qi(), Qi() - Q()); }
Matrix braiding(const GlParams& gp) { return flip_matrix<Scalar>(gp.N) * build_R(gp); }
Matrix braiding_inv(const GlParams& gp) { return build_R_inv(gp) * flip_matrix<Scalar>(gp.N); }

LMatrices build_l_matrices(const GlParams& gp) {
    const int N = gp.N;
    Matrix R = build_R(gp), Ri = build_R_inv(gp);
    // M_{ab}^{cd}: coefficient of e_c (x) e_d in M(e_a (x) e_b), 1-based
    auto ent = [N](const Matrix& M, int a, int b, int c, int d) {
        return M.get((c - 1) * N + (d - 1), (a - 1) * N + (b - 1));
    };
    LMatrices L;
    L.N = N;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            Matrix lp(N, N), lm(N, N), slp(N, N), slm(N, N);
            for (int k = 1; k <= N; ++k)
                for (int l = 1; l <= N; ++l) {
                    lp.set(k - 1, l - 1, ent(R, l, j, k, i));
                    lm.set(k - 1, l - 1, ent(Ri, j, l, i, k));
                    slp.set(k - 1, l - 1, ent(Ri, l, j, k, i));
                    slm.set(k - 1, l - 1, ent(R, j, l, i, k));
                }
            L.lp.push_back(lp);
            L.lm.push_back(lm);
            L.slp.push_back(slp);
            L.slm.push_back(slm);
        }
    return L;
}

Matrix block_matrix(int N, const std::vector<Matrix>& fam) {
    Matrix r(N * N, N * N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) r = r + kron(unit(N, i, j), fam[(i - 1) * N + (j - 1)]);
    return r;
}

Matrix build_J(const GlParams& gp, const Scalar& x) {
    gp.validate();
    const int N = gp.N, p = gp.p;
    Matrix J(N, N);
    Scalar xi = x.inverse();
    for (int k = 1; k <= p; ++k) {
        J.set(k - 1, k - 1, x - xi);
        J.set(k - 1, N - k, Scalar(1));
        J.set(N - k, k - 1, Scalar(1));
    }
    for (int k = p + 1; k <= N - p; ++k) J.set(k - 1, k - 1, -xi);
    return J;
}

Matrix build_J_sigma(const GlParams& gp) { return build_J(gp, Scalar::sym(qs)); }

Matrix build_J_inv(const GlParams& gp, const Scalar& x) {
    // Hecke relation: J^{-1} = J - (x - x^{-1})
    Matrix J = build_J(gp, x);
    return J - Matrix::scalar(gp.N, x - x.inverse());
}

Matrix build_J_prime(const GlParams& gp) {
    gp.validate();
    const int N = gp.N, p = gp.p;
    Matrix J(N, N);
    for (int k = 1; k <= p; ++k) {
        J.set(k - 1, N - k, Scalar(1));
        J.set(N - k, k - 1, Scalar(1));
    }
    for (int k = p + 1; k <= N - p; ++k) J.set(k - 1, k - 1, Scalar(-1));
    return J;
}

Matrix check_reflection(const Matrix& J, ReflectionSide side, const GlParams& gp) {
    TensorSpace sp{gp.N, 2};
    Matrix s = braiding(gp);
    Matrix Jx = embed(J, {side == ReflectionSide::right ? 1 : 0}, sp);
    Matrix sJs = s * Jx * s;
    return sJs * Jx - Jx * sJs;
}

Matrix coideal_matrix(const GlParams& gp, int wslots) {
    return coideal_matrix_from(braiding(gp), build_J_sigma(gp), gp.N, wslots);
}

Matrix coideal_matrix_via_l(const GlParams& gp, int wslots) {
    const int N = gp.N;
    LMatrices L = build_l_matrices(gp);
    TensorSpace sp{N, wslots + 1};
    Matrix lp = block_matrix(N, L.lp), slm = block_matrix(N, L.slm);
    Matrix left = Matrix::identity(sp.dim()), right = Matrix::identity(sp.dim());
    for (int k = 1; k <= wslots; ++k) {
        left = left * embed(lp, {0, k}, sp);
        right = embed(slm, {0, k}, sp) * right;
    }
    return left * embed(build_J_sigma(gp), {0}, sp) * right;
}

Scalar character_value(const GlParams& gp, const CharacterSpec& spec, int i, int l) {
    if (i < 1 || i > gp.N || l < 1 || l > gp.N) throw std::out_of_range("character index out of range");
    Matrix J = spec.kind == CharacterSpec::Kind::chi ? build_J(gp, spec.x) : build_J_inv(gp, spec.x);
    return spec.scale * J.get(i - 1, l - 1);
}

Matrix character_matrix(const GlParams& gp, const CharacterSpec& spec) {
    Matrix J = spec.kind == CharacterSpec::Kind::chi ? build_J(gp, spec.x) : build_J_inv(gp, spec.x);
    return J.scaled(spec.scale);
}

Matrix drinfeld_u(const GlParams& gp) {
    Matrix u(gp.N, gp.N);
    for (int i = 1; i <= gp.N; ++i) u.set(i - 1, i - 1, Scalar::sym(q, 2 * i - 2));
    return u;
}

Matrix build_tilde_J(const GlParams& gp, const Scalar& x) {
    gp.validate();
    const int N = gp.N, p = gp.p, d = gp.qdim() - p;
    Matrix J(N, N);
    Scalar up = Scalar::sym(q, d) * x, down = Scalar::sym(q, -d) * x.inverse();
    for (int i = 1; i <= p; ++i) {
        J.set(i - 1, i - 1, up - down);
        J.set(i - 1, N - i, Scalar::sym(q, -N + 2 * i - 1));
        J.set(N - i, i - 1, Scalar::sym(q, N - 2 * i + 1));
    }
    for (int i = p + 1; i <= N - p; ++i) J.set(i - 1, i - 1, -down);
    return J;
}

Matrix tilde_J_via_drinfeld(const GlParams& gp, const Scalar& x) {
    const int N = gp.N;
    LMatrices L = build_l_matrices(gp);
    Matrix u = drinfeld_u(gp), ui = inverse(u);
    Matrix Jt = build_J(gp, x);
    Matrix r(N, N);
    for (int i = 1; i <= N; ++i)
        for (int l = 1; l <= N; ++l)
            for (int j = 1; j <= N; ++j)
                for (int k = 1; k <= N; ++k) {
                    Scalar c = Jt.get(j - 1, k - 1);
                    if (c.is_zero()) continue;
                    r = r + unit(N, i, l) * u * L.minus(k, l) * ui * L.s_plus(i, j).scaled(c);
                }
    return r.scaled(Scalar::sym(q, N));
}

}  // namespace ccn
