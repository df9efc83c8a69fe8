#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ccn/braid_actions.hpp"
#include "ccn/polyrep.hpp"
#include "ccn/quantum_gl.hpp"
#include "ccn/report.hpp"
#include "ccn/series.hpp"

namespace ccn {

// q -> 1, qs -> sigma, qt -> tau, qe -> eta, t -> m1, tn -> m2, t0 -> m3, u0 -> m4, un -> m5, v -> m6
ExponentMap default_exponent_map();
// the same with t0 -> m4 + m5
ExponentMap constrained_exponent_map();

struct DegenConfig {
    GlParams gp;
    ExponentMap map = default_exponent_map();
    int order = 2;
};

// h^0 and h^1 coefficients of a matrix of Laurent or rational entries.
struct ClassicalOperator {
    Matrix order0, order1;
};

ClassicalOperator expand_operator(const Matrix& m, const ExponentMap& map = default_exponent_map(), int order = 2);

// Split of a Laurent polynomial into its h^0 and h^1 parts; mapped symbols must carry Laurent forms.
std::pair<Poly, Poly> hbar_split(const Poly& p, const ExponentMap& map);

// sum_i E_i^i (x) E_i^i + 2 sum_{i>j} E_i^j (x) E_j^i
Matrix classical_r(int N);
// sum_{i,j} E_i^j (x) E_j^i
Matrix casimir(int N);
// 2 sum_{i<=p} E_i^i + sum_{p<i<=N-p} E_i^i
Matrix j_hat(const GlParams& gp);
Matrix g_matrix(const GlParams& gp);
Matrix conjugate_by_g(const Matrix& x, const GlParams& gp);
// [x]_{ab} vanishes unless a, b <= p or a, b > p
bool in_k(const Matrix& x, const GlParams& gp);

enum class CoidealCase { c1a, c1b, c1c, c2, c3a, c3b, c4, c5a, c5b, c5c, c6a, c6b, unclassified };
std::string to_string(CoidealCase c);
CoidealCase classify_coideal_entry(const GlParams& gp, int i, int l);

// Classical limit of rho_V(c_il) under the case normalization.
struct CoidealLimit {
    int i = 0, l = 0;
    CoidealCase kind = CoidealCase::unclassified;
    Matrix computed;        // normalized limit, scalar part included
    Scalar claimed_scalar;  // sigma in Case 1c
    Matrix claimed;         // matrix part of the case-table element
    Matrix centered;        // lim (c_il - eps(c_il)) / (q - q^-1)
    Matrix conjugation_input;  // left side of the conjugation table row
    Matrix conjugated;         // g input g^-1
    Matrix conjugation_row;    // right side of the conjugation table row
};

std::vector<CoidealLimit> classical_coideal_limits(const GlParams& gp);
Report verify_coideal_limits(const GlParams& gp);

// (a1 tr A1 + a2 tr A2) on block diagonal matrices, blocks of sizes p and N - p.
struct DegenerateCharacter {
    GlParams gp;
    Scalar tr_coeff, chi_coeff;  // a tr + b chi
    Scalar operator()(const Matrix& x) const;
    Scalar block1() const;  // value on E_i^i, i <= p
    Scalar block2() const;  // value on E_i^i, i > p
};

// q_dim tr A1 - p tr A2
Scalar classical_chi(const GlParams& gp, const Matrix& x);
DegenerateCharacter chi_tilde(const GlParams& gp, const Scalar& eta_v, const Scalar& tau_v,
                              const Scalar& sigma_v = Scalar::sym(sigma));
DegenerateCharacter lambda_tilde(const GlParams& gp, const Scalar& omega_v, const Scalar& nu_v,
                                 const Scalar& rho_v = Scalar::sym(rho));
// h^1 of the quantum character on c_il against chi~ on the conjugated classical limit
Report verify_degenerate_characters(const GlParams& gp);

// Classical gl_N on M (x) V^{(x) n}, M = V^{(x) m}, V_i in slot m + i - 1.
struct DahaConfig {
    GlParams gp;
    int n = 1, m = 1;
    Rational mu;
    int slots() const { return m + n; }
};

struct DegenerateAffineRep {
    DahaConfig cfg;
    QMatrix basis;                     // invariant vectors as columns
    std::vector<QMatrix> s, gamma, y;  // full-space operators
    Rational kappa1() const { return Rational(1); }
    Rational kappa2() const;
};

// (k_0, mu)-invariants: x w = mu chi(x) w for trace-zero x in gl_p x gl_q
QMatrix k0_invariants(const DahaConfig& cfg);
DegenerateAffineRep build_dAHA_rep(const DahaConfig& cfg);
Report verify_dAHA(const DahaConfig& cfg);

// classical operators on the full space
QMatrix classical_action(const GlParams& gp, int slots, const QMatrix& x, const std::vector<int>& on);
QMatrix casimir_between(const GlParams& gp, int slots, const std::vector<int>& a, int b);

// y_1 of the dAHA rep against -Omega_01 + (eta-N)/2 + ((tau-sigma) - mu N)/2 gamma_1 on (k, chi~)-invariants
Report verify_y1_identity(const DahaConfig& cfg, const Rational& sigma_v);

// 1/2 h^1(Y_i) of the quantum operators against -Omega_0i - sum_{j<i} s_ij + (eta-N)/2
Report verify_yhat(const AffineRepConfig& cfg);

// How the degenerate generators and parameters are read off.
//   literal: x_i = X_i, k1 = m1, k2 = m2, k3 = m3, t = m2 + m3 + m6
//   literal_constrained: as literal with m3 = m4 + m5 substituted
//   inverted_x: x_i = X_i^-1, k1 = m1, k2 = m4 + m5, k3 = m2 + m3 - m4 - m5, t = -m6
enum class ParameterMap { literal, literal_constrained, inverted_x };
std::string to_string(ParameterMap m);

// Degenerate Sahi operators: s_i, gamma = h^0 of T_i, T_n, x_i from X_i, y_i = 1/2 h^1(Y_i).
class DegenerateSahi {
public:
    DegenerateSahi(int n, ParameterMap mode);
    int n() const { return ops_.n(); }
    ParameterMap mode() const { return mode_; }
    LaurentPoly apply(const std::string& gen, int exp, const LaurentPoly& f) const;
    // h^0 and h^1 of a quantum generator word applied to f
    std::pair<LaurentPoly, LaurentPoly> expand(const Word& w, const LaurentPoly& f) const;
    Action<LaurentPoly> action() const;
    PresentationParams params() const;

private:
    SahiOperators ops_;
    ParameterMap mode_;
    ExponentMap map_;
};

Report verify_dDAHA_degeneration(int n, int box, ParameterMap mode);

}  // namespace ccn
