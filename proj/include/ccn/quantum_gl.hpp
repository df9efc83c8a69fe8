#pragma once

#include <vector>

#include "ccn/linalg.hpp"
#include "ccn/tensor.hpp"

namespace ccn {

struct GlParams {
    int N = 2;
    int p = 1;

    int qdim() const { return N - p; }
    void validate() const;
};

Matrix build_R(const GlParams& gp);
Matrix build_R_inv(const GlParams& gp);
// flip o R on V (x) V
Matrix braiding(const GlParams& gp);
Matrix braiding_inv(const GlParams& gp);

// rho_V of l^+_{ij}, l^-_{ij}, S(l^+_{ij}), S(l^-_{ij}); 1-based (i, j).
struct LMatrices {
    int N = 0;
    std::vector<Matrix> lp, lm, slp, slm;

    const Matrix& plus(int i, int j) const { return lp[idx(i, j)]; }
    const Matrix& minus(int i, int j) const { return lm[idx(i, j)]; }
    const Matrix& s_plus(int i, int j) const { return slp[idx(i, j)]; }
    const Matrix& s_minus(int i, int j) const { return slm[idx(i, j)]; }
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>((i - 1) * N + (j - 1)); }
};

LMatrices build_l_matrices(const GlParams& gp);

// Block matrix sum_{ij} E_i^j (x) fam(i, j) on aux (x) V.
Matrix block_matrix(int N, const std::vector<Matrix>& fam);

// J with q^sigma replaced by x; build_J_sigma uses the symbol qs.
Matrix build_J(const GlParams& gp, const Scalar& x);
Matrix build_J_sigma(const GlParams& gp);
Matrix build_J_inv(const GlParams& gp, const Scalar& x);
// q -> 1 limit of J^sigma
Matrix build_J_prime(const GlParams& gp);

enum class ReflectionSide { right, left };

// right: s J2 s J2 - J2 s J2 s,  left: s J1 s J1 - J1 s J1 s,  s = braiding
Matrix check_reflection(const Matrix& J, ReflectionSide side, const GlParams& gp);

// Operator on aux (x) V^{(x) wslots} whose (i,l) aux block is rho_W(c_{il}),
// as the double braiding conjugate of J on the aux slot.
template <class F>
SparseMatrix<F> coideal_matrix_from(const SparseMatrix<F>& sigma, const SparseMatrix<F>& J, int N, int wslots) {
    TensorSpace sp{N, wslots + 1};
    SparseMatrix<F> c = embed(J, {wslots}, sp);
    for (int k = wslots - 1; k >= 0; --k) {
        SparseMatrix<F> s = embed(sigma, {k, k + 1}, sp);
        c = s * c * s;
    }
    return c;
}

Matrix coideal_matrix(const GlParams& gp, int wslots);
// Same operator from the L-operator contraction sum l+_{ij} J_{jk} S(l-_{kl}).
Matrix coideal_matrix_via_l(const GlParams& gp, int wslots);

// (i, l) block of an operator on aux (x) W, 1-based.
template <class F>
SparseMatrix<F> aux_block(const SparseMatrix<F>& c, int N, int i, int l) {
    std::size_t d = c.nrows() / static_cast<std::size_t>(N);
    return c.block(static_cast<std::size_t>(i - 1) * d, static_cast<std::size_t>(l - 1) * d, d, d);
}

struct CharacterSpec {
    enum class Kind { chi, lambda };
    Kind kind = Kind::chi;
    Scalar scale = Scalar::sym(qe);  // q^eta or q^omega
    Scalar x = Scalar::sym(qt);      // q^tau or q^nu

    static CharacterSpec chi(Symbol eta_sym = qe, Symbol tau_sym = qt) {
        return {Kind::chi, Scalar::sym(eta_sym), Scalar::sym(tau_sym)};
    }
    static CharacterSpec lambda(Symbol omega_sym = qo, Symbol nu_sym = qn) {
        return {Kind::lambda, Scalar::sym(omega_sym), Scalar::sym(nu_sym)};
    }
};

Scalar character_value(const GlParams& gp, const CharacterSpec& spec, int i, int l);
// the N x N matrix of character values
Matrix character_matrix(const GlParams& gp, const CharacterSpec& spec);

// rho_V(u) = sum q^{2i-2} E_i^i
Matrix drinfeld_u(const GlParams& gp);

// alpha^{-1} J~ from the explicit formula, with q^tau replaced by x
Matrix build_tilde_J(const GlParams& gp, const Scalar& x = Scalar::sym(qt));
// the same matrix from q^N sum E_i^l rho(u l-_{kl} u^-1) J^tau_{jk} rho(S(l+_{ij}))
Matrix tilde_J_via_drinfeld(const GlParams& gp, const Scalar& x = Scalar::sym(qt));

// Matrix unit E_i^j (1-based) of size N.
Matrix unit(int N, int i, int j, const Scalar& c = Scalar(1));

}  // namespace ccn
