#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ccn/presentations.hpp"
#include "ccn/quantum_gl.hpp"
#include "ccn/report.hpp"

namespace ccn {

using NumericPoint = std::map<Symbol, Rational>;

struct AffineRepConfig {
    GlParams gp;
    int n = 1;  // strands
    int m = 0;  // M = V^{(x) m}
    CharacterSpec character = CharacterSpec::chi();

    // q^{-N} q^eta
    Scalar alpha() const { return Scalar::sym(q, -gp.N) * character.scale; }
    int slots() const { return m + n; }
    void validate() const;
};

// The vector representation data the generators are assembled from.
template <class F>
struct LocalData {
    SparseMatrix<F> sigma, sigma_inv, J, J_inv;
    F alpha;
};

LocalData<Scalar> local_data(const AffineRepConfig& cfg);
LocalData<Rational> local_data(const AffineRepConfig& cfg, const NumericPoint& pt);

// Operators on M (x) V^{(x) n}; M occupies slots 0..m-1 and V_k sits at slot m+k-1.
template <class F>
struct AffineGenerators {
    int N = 2, m = 0, n = 1;
    std::vector<SparseMatrix<F>> T, Tinv;  // T[0..n]
    SparseMatrix<F> P1, P1inv;
    SparseMatrix<F> sigma_VM, sigma_VM_inv;  // V_1 (x) M -> M (x) V_1 when V_1 is in front
    SparseMatrix<F> double_braid, double_braid_inv;
    F alpha;

    std::size_t dim() const { return T.front().nrows(); }

    MatrixAssignment<F> assignment(std::function<F(const Scalar&)> coeff) const {
        MatrixAssignment<F> a;
        a.coeff = std::move(coeff);
        for (int i = 0; i <= n; ++i) a.set("T" + std::to_string(i), T[i], Tinv[i]);
        return a;
    }
};

template <class F>
AffineGenerators<F> assemble_generators(int N, int m, int n, const LocalData<F>& loc) {
    if (n < 1 || m < 0) throw std::invalid_argument("need n >= 1 and m >= 0");
    AffineGenerators<F> g;
    g.N = N, g.m = m, g.n = n, g.alpha = loc.alpha;
    TensorSpace sp{N, m + n};
    const std::size_t d = sp.dim();
    g.T.resize(n + 1), g.Tinv.resize(n + 1);
    for (int i = 1; i < n; ++i) {
        g.T[i] = embed(loc.sigma, {m + i - 1, m + i}, sp);
        g.Tinv[i] = embed(loc.sigma_inv, {m + i - 1, m + i}, sp);
    }
    g.T[n] = embed(loc.J, {m + n - 1}, sp);
    g.Tinv[n] = embed(loc.J_inv, {m + n - 1}, sp);

    g.P1 = g.T[n], g.P1inv = g.Tinv[n];
    for (int i = n - 1; i >= 1; --i) {
        g.P1 = g.T[i] * g.P1 * g.T[i];
        g.P1inv = g.Tinv[i] * g.P1inv * g.Tinv[i];
    }

    SparseMatrix<F> vm = SparseMatrix<F>::identity(d), vmi = vm, mv = vm, mvi = vm;
    for (int k = 0; k < m; ++k) {
        SparseMatrix<F> s = embed(loc.sigma, {k, k + 1}, sp), si = embed(loc.sigma_inv, {k, k + 1}, sp);
        vm = s * vm;
        vmi = vmi * si;
    }
    for (int k = m - 1; k >= 0; --k) {
        SparseMatrix<F> s = embed(loc.sigma, {k, k + 1}, sp), si = embed(loc.sigma_inv, {k, k + 1}, sp);
        mv = s * mv;
        mvi = mvi * si;
    }
    g.sigma_VM = vm, g.sigma_VM_inv = vmi;
    g.double_braid = vm * mv;
    g.double_braid_inv = mvi * vmi;
    g.T[0] = (g.P1inv * g.double_braid_inv).scaled(loc.alpha);
    g.Tinv[0] = (g.double_braid * g.P1).scaled(F(1) / loc.alpha);
    return g;
}

AffineGenerators<Scalar> build_affine_generators(const AffineRepConfig& cfg);
AffineGenerators<Rational> build_affine_generators(const AffineRepConfig& cfg, const NumericPoint& pt);

// Braid relations, the derived braid-group identities and the Hecke relations of T_1..T_n.
Report verify_affine_relations(const AffineRepConfig& cfg);
Report verify_affine_relations(const AffineRepConfig& cfg, const NumericPoint& pt);

// Stacked blocks rho(c_il) - chi(c_il) I over all m+n slots.
Matrix invariant_system(const AffineRepConfig& cfg);
QMatrix invariant_system(const AffineRepConfig& cfg, const NumericPoint& pt);
// Columns form a basis of the invariants.
QMatrix invariant_subspace(const AffineRepConfig& cfg, const NumericPoint& pt);

// T0^{-1} against sigma_{V,M} (alpha^{-1} J~)_{V_1} sigma_{V,M}^{-1}, the Hecke relation of T0 with
// q^{p-q} q^{-tau}, and stability of the invariants under every generator.
Report verify_T0_on_invariants(const AffineRepConfig& cfg, const NumericPoint& pt);

// Parameter points (q, qs fixed by base) with qe = q^a and qt = qs^{+-1} q^b that carry invariants.
struct InvariantLocus {
    int a = 0, sign = 1, b = 0;
    std::size_t dim = 0;
    NumericPoint point;
};
std::vector<InvariantLocus> find_invariant_loci(const AffineRepConfig& cfg, const NumericPoint& base);

// Random q, qs values from a seeded generator.
NumericPoint random_base_point(unsigned seed);

}  // namespace ccn
