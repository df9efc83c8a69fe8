#pragma once

#include <optional>

#include "ccn/matrix.hpp"

namespace ccn {

template <class F>
struct Echelon {
    std::vector<std::vector<F>> rows;  // reduced row echelon form, dense
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

namespace detail {

inline std::size_t weight(const Rational& r) { return r.is_small() ? 1 : 4; }
inline std::size_t weight(const Scalar& s) { return s.num().size() + s.den().size(); }

}  // namespace detail

// Gauss-Jordan elimination over the field, choosing the lightest pivot.
template <class F>
Echelon<F> rref(const SparseMatrix<F>& m) {
    const std::size_t nr = m.nrows(), nc = m.ncols();
    std::vector<std::vector<F>> a(nr, std::vector<F>(nc));
    for (std::size_t i = 0; i < nr; ++i)
        for (auto& [c, v] : m.row(i)) a[i][c] = v;
    Echelon<F> e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t best = nr, bw = 0;
        for (std::size_t i = r; i < nr; ++i) {
            if (a[i][c].is_zero()) continue;
            std::size_t w = detail::weight(a[i][c]);
            if (best == nr || w < bw) {
                best = i;
                bw = w;
            }
        }
        if (best == nr) continue;
        std::swap(a[r], a[best]);
        F inv = F(1) / a[r][c];
        for (std::size_t j = c; j < nc; ++j)
            if (!a[r][j].is_zero()) a[r][j] *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            F f = a[i][c];
            for (std::size_t j = c; j < nc; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    e.rows = std::move(a);
    return e;
}

template <class F>
std::size_t rank(const SparseMatrix<F>& m) {
    return rref(m).pivots.size();
}

// Basis of the right kernel, as the columns of an ncols x k matrix.
template <class F>
SparseMatrix<F> kernel(const SparseMatrix<F>& m) {
    Echelon<F> e = rref(m);
    const std::size_t nc = m.ncols();
    std::vector<char> is_pivot(nc, 0);
    for (auto p : e.pivots) is_pivot[p] = 1;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < nc; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    SparseMatrix<F> k(nc, free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k.set(free_cols[f], f, F(1));
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            const F& v = e.rows[r][free_cols[f]];
            if (!v.is_zero()) k.set(e.pivots[r], f, -v);
        }
    }
    return k;
}

template <class F>
SparseMatrix<F> inverse(const SparseMatrix<F>& m) {
    if (m.nrows() != m.ncols()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.nrows();
    SparseMatrix<F> aug = SparseMatrix<F>::hstack({m, SparseMatrix<F>::identity(n)});
    Echelon<F> e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
    SparseMatrix<F> r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!e.rows[i][n + j].is_zero()) r.set(i, j, e.rows[i][n + j]);
    return r;
}

// (X - x)(X + x^{-1}); zero iff X satisfies the Hecke relation with parameter x.
template <class F>
SparseMatrix<F> hecke_residual(const SparseMatrix<F>& X, const F& x) {
    const std::size_t n = X.nrows();
    return (X - SparseMatrix<F>::scalar(n, x)) * (X + SparseMatrix<F>::scalar(n, F(1) / x));
}

template <class F>
bool hecke_check(const SparseMatrix<F>& X, const F& x) {
    return hecke_residual(X, x).is_zero();
}

// Matrix A with T B = B A, if the column span of B is T-stable.
template <class F>
std::optional<SparseMatrix<F>> restrict_to(const SparseMatrix<F>& T, const SparseMatrix<F>& B) {
    SparseMatrix<F> TB = T * B;
    const std::size_t k = B.ncols();
    // solve B A = TB via elimination on [B | TB]
    Echelon<F> e = rref(SparseMatrix<F>::hstack({B, TB}));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        if (e.pivots[r] >= k) return std::nullopt;
    if (e.pivots.size() != k) throw std::invalid_argument("basis columns are not independent");
    SparseMatrix<F> A(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < k; ++j)
            if (!e.rows[r][k + j].is_zero()) A.set(r, j, e.rows[r][k + j]);
    return A;
}

}  // namespace ccn
