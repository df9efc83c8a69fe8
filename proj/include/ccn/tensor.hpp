#pragma once

#include <vector>

#include "ccn/matrix.hpp"

namespace ccn {

// V^{(x) n} with dim V = N. Slot 0 is the most significant digit:
// e_{i_0} (x) ... (x) e_{i_{n-1}} has index sum_k i_k N^{n-1-k} (0-based i_k).
struct TensorSpace {
    int N = 2;
    int nslots = 1;

    std::size_t dim() const;
    std::size_t index(const std::vector<int>& digits) const;
    std::vector<int> digits(std::size_t index) const;
};

// A local operator acting on the listed slots, in the listed order.
template <class F>
struct SlotOperator {
    SparseMatrix<F> local;
    std::vector<int> slots;
};

template <class F>
SparseMatrix<F> embed(const SlotOperator<F>& op, const TensorSpace& space) {
    const int k = static_cast<int>(op.slots.size());
    std::size_t ldim = 1;
    for (int i = 0; i < k; ++i) ldim *= static_cast<std::size_t>(space.N);
    if (op.local.nrows() != ldim || op.local.ncols() != ldim)
        throw std::invalid_argument("slot operator size does not match its slots");
    for (int s : op.slots)
        if (s < 0 || s >= space.nslots) throw std::out_of_range("slot index out of range");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (op.slots[i] == op.slots[j]) throw std::invalid_argument("repeated slot");

    const std::size_t dim = space.dim();
    std::vector<std::size_t> weight(space.nslots);
    {
        std::size_t w = 1;
        for (int s = space.nslots - 1; s >= 0; --s) {
            weight[s] = w;
            w *= static_cast<std::size_t>(space.N);
        }
    }
    // columns of a local operator, transposed lookup
    SparseMatrix<F> lt = op.local.transpose();
    SparseMatrix<F> r(dim, dim);
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, F>>> cols(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t lc = 0, base = col;
        for (int i = 0; i < k; ++i) {
            std::size_t d = (col / weight[op.slots[i]]) % space.N;
            lc = lc * space.N + d;
            base -= d * weight[op.slots[i]];
        }
        for (auto& [lr, v] : lt.row(lc)) {
            std::size_t row = base, rest = lr;
            for (int i = k - 1; i >= 0; --i) {
                row += (rest % space.N) * weight[op.slots[i]];
                rest /= space.N;
            }
            cols[row].emplace_back(col, 0, v);
        }
    }
    for (std::size_t row = 0; row < dim; ++row)
        for (auto& [c, unused, v] : cols[row]) r.set(row, c, v);
    return r;
}

template <class F>
SparseMatrix<F> embed(const SparseMatrix<F>& local, std::vector<int> slots, const TensorSpace& space) {
    return embed(SlotOperator<F>{local, std::move(slots)}, space);
}

// Flip on V (x) V.
template <class F>
SparseMatrix<F> flip_matrix(int N) {
    SparseMatrix<F> p(N * N, N * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) p.set(j * N + i, i * N + j, F(1));
    return p;
}

}  // namespace ccn
