#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ccn/scalar.hpp"

namespace ccn {

// Row-compressed sparse matrix over an exact field F (Rational or Scalar).
template <class F>
class SparseMatrix {
public:
    using Entry = std::pair<std::size_t, F>;
    using Row = std::vector<Entry>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : nrows_(r), ncols_(c), rows_(r) {}

    static SparseMatrix identity(std::size_t n) {
        SparseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, F(1)});
        return m;
    }
    static SparseMatrix scalar(std::size_t n, const F& x) {
        SparseMatrix m(n, n);
        if (!x.is_zero())
            for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, x});
        return m;
    }

    std::size_t nrows() const { return nrows_; }
    std::size_t ncols() const { return ncols_; }
    const Row& row(std::size_t i) const { return rows_[i]; }

    F get(std::size_t r, std::size_t c) const {
        check(r, c);
        const Row& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t k) { return e.first < k; });
        if (it != row.end() && it->first == c) return it->second;
        return F(0);
    }
    void set(std::size_t r, std::size_t c, const F& x) {
        check(r, c);
        Row& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t k) { return e.first < k; });
        if (it != row.end() && it->first == c) {
            if (x.is_zero())
                row.erase(it);
            else
                it->second = x;
        } else if (!x.is_zero()) {
            row.insert(it, {c, x});
        }
    }
    void add_to(std::size_t r, std::size_t c, const F& x) {
        if (!x.is_zero()) set(r, c, get(r, c) + x);
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (auto& r : rows_) n += r.size();
        return n;
    }
    bool is_zero() const { return nonzeros() == 0; }

    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return a.combine(b, false); }
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a.combine(b, true); }
    SparseMatrix operator-() const { return scaled(F(-1)); }

    SparseMatrix scaled(const F& x) const {
        SparseMatrix r(nrows_, ncols_);
        if (x.is_zero()) return r;
        for (std::size_t i = 0; i < nrows_; ++i) {
            r.rows_[i].reserve(rows_[i].size());
            for (auto& [c, v] : rows_[i]) r.rows_[i].push_back({c, v * x});
        }
        return r;
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.ncols_ != b.nrows_) throw std::invalid_argument("matrix shape mismatch in product");
        SparseMatrix r(a.nrows_, b.ncols_);
        std::vector<F> acc(b.ncols_);
        std::vector<char> used(b.ncols_, 0);
        std::vector<std::size_t> touched;
        for (std::size_t i = 0; i < a.nrows_; ++i) {
            touched.clear();
            for (auto& [k, av] : a.rows_[i]) {
                for (auto& [j, bv] : b.rows_[k]) {
                    if (!used[j]) {
                        used[j] = 1;
                        touched.push_back(j);
                        acc[j] = av * bv;
                    } else {
                        acc[j] += av * bv;
                    }
                }
            }
            std::sort(touched.begin(), touched.end());
            for (std::size_t j : touched) {
                if (!acc[j].is_zero()) r.rows_[i].push_back({j, std::move(acc[j])});
                acc[j] = F(0);
                used[j] = 0;
            }
        }
        return r;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.nrows_ != b.nrows_ || a.ncols_ != b.ncols_) return false;
        for (std::size_t i = 0; i < a.nrows_; ++i) {
            if (a.rows_[i].size() != b.rows_[i].size()) return false;
            for (std::size_t k = 0; k < a.rows_[i].size(); ++k)
                if (a.rows_[i][k].first != b.rows_[i][k].first || a.rows_[i][k].second != b.rows_[i][k].second)
                    return false;
        }
        return true;
    }
    friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

    SparseMatrix transpose() const {
        SparseMatrix r(ncols_, nrows_);
        for (std::size_t i = 0; i < nrows_; ++i)
            for (auto& [c, v] : rows_[i]) r.rows_[c].push_back({i, v});
        return r;
    }

    // rows [r0, r0 + nr), columns [c0, c0 + nc)
    SparseMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        SparseMatrix r(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (auto& [c, v] : rows_[r0 + i])
                if (c >= c0 && c < c0 + nc) r.rows_[i].push_back({c - c0, v});
        return r;
    }

    static SparseMatrix vstack(const std::vector<SparseMatrix>& parts) {
        if (parts.empty()) return SparseMatrix();
        std::size_t nr = 0, nc = parts[0].ncols_;
        for (auto& p : parts) {
            if (p.ncols_ != nc) throw std::invalid_argument("vstack column mismatch");
            nr += p.nrows_;
        }
        SparseMatrix r(nr, nc);
        std::size_t off = 0;
        for (auto& p : parts) {
            for (std::size_t i = 0; i < p.nrows_; ++i) r.rows_[off + i] = p.rows_[i];
            off += p.nrows_;
        }
        return r;
    }
    static SparseMatrix hstack(const std::vector<SparseMatrix>& parts) {
        std::vector<SparseMatrix> t;
        for (auto& p : parts) t.push_back(p.transpose());
        return vstack(t).transpose();
    }

    template <class G, class Fn>
    SparseMatrix<G> map(Fn fn) const {
        SparseMatrix<G> r(nrows_, ncols_);
        for (std::size_t i = 0; i < nrows_; ++i)
            for (auto& [c, v] : rows_[i]) r.set(i, c, fn(v));
        return r;
    }

    // nonzero entries as (row, col, value), sorted
    std::vector<std::tuple<std::size_t, std::size_t, F>> entries() const {
        std::vector<std::tuple<std::size_t, std::size_t, F>> e;
        for (std::size_t i = 0; i < nrows_; ++i)
            for (auto& [c, v] : rows_[i]) e.emplace_back(i, c, v);
        return e;
    }

    nlohmann::json to_json() const {
        nlohmann::json ent = nlohmann::json::array();
        for (std::size_t i = 0; i < nrows_; ++i)
            for (auto& [c, v] : rows_[i]) ent.push_back({i, c, v.str()});
        return {{"nrows", nrows_}, {"ncols", ncols_}, {"entries", ent}};
    }

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= nrows_ || c >= ncols_) throw std::out_of_range("matrix index out of range");
    }
    SparseMatrix combine(const SparseMatrix& b, bool subtract) const {
        if (nrows_ != b.nrows_ || ncols_ != b.ncols_) throw std::invalid_argument("matrix shape mismatch in sum");
        SparseMatrix r(nrows_, ncols_);
        for (std::size_t i = 0; i < nrows_; ++i) {
            auto x = rows_[i].begin(), xe = rows_[i].end();
            auto y = b.rows_[i].begin(), ye = b.rows_[i].end();
            Row& out = r.rows_[i];
            while (x != xe || y != ye) {
                if (y == ye || (x != xe && x->first < y->first)) {
                    out.push_back(*x++);
                } else if (x == xe || y->first < x->first) {
                    out.push_back({y->first, subtract ? -y->second : y->second});
                    ++y;
                } else {
                    F s = subtract ? x->second - y->second : x->second + y->second;
                    if (!s.is_zero()) out.push_back({x->first, std::move(s)});
                    ++x;
                    ++y;
                }
            }
        }
        return r;
    }

    std::size_t nrows_ = 0, ncols_ = 0;
    std::vector<Row> rows_;
};

using Matrix = SparseMatrix<Scalar>;
using QMatrix = SparseMatrix<Rational>;

template <class F>
SparseMatrix<F> kron(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
    SparseMatrix<F> r(a.nrows() * b.nrows(), a.ncols() * b.ncols());
    for (std::size_t i = 0; i < a.nrows(); ++i)
        for (auto& [j, av] : a.row(i))
            for (std::size_t k = 0; k < b.nrows(); ++k)
                for (auto& [l, bv] : b.row(k)) r.set(i * b.nrows() + k, j * b.ncols() + l, av * bv);
    return r;
}

// Matrix from a row-major list of string entries.
Matrix matrix_from_strings(std::size_t nrows, std::size_t ncols, const std::vector<std::string>& entries);

// Specialize every entry at a rational point.
QMatrix specialize(const Matrix& m, const std::map<Symbol, Rational>& point);
Matrix to_symbolic(const QMatrix& m);
Matrix substitute(const Matrix& m, const std::map<Symbol, Scalar>& values);

Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace ccn
