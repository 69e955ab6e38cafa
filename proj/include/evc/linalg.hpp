#pragma once

#include <vector>

#include "evc/poly.hpp"

namespace evc {

// Dense matrix over GF(q), row-major.
class Matrix {
public:
    Matrix(const Field& field, int rows, int cols)
        : field_(&field), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(const Field& field, int n) {
        Matrix m(field, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    static Matrix from_rows(const Field& field, const std::vector<std::vector<Fq>>& rows, int cols) {
        Matrix m(field, static_cast<int>(rows.size()), cols);
        for (int i = 0; i < m.rows_; ++i) {
            if (static_cast<int>(rows[i].size()) != cols)
                throw DomainError("matrix/ragged", "rows have inconsistent lengths");
            for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const Field& field() const { return *field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Fq& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    Fq at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::vector<Fq> row(int i) const {
        return {a_.begin() + static_cast<std::size_t>(i) * cols_,
                a_.begin() + static_cast<std::size_t>(i + 1) * cols_};
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && *x.field_ == *y.field_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

private:
    const Field* field_;
    int rows_, cols_;
    std::vector<Fq> a_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivot_cols;
    int rank;
};

inline RrefResult rref(Matrix m) {
    const Field& F = m.field();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!F.is_zero(m.at(i, c))) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
        Fq inv = F.inv(m.at(r, c));
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || F.is_zero(m.at(i, c))) continue;
            Fq factor = m.at(i, c);
            for (int j = c; j < m.cols(); ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots), r};
}

// Basis of the right kernel {x : M x = 0}, one row per basis vector.  Each
// vector carries a 1 in its free column; rows are ordered by free column.
inline std::vector<std::vector<Fq>> null_space(const Matrix& m) {
    const Field& F = m.field();
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Fq>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Fq> v(m.cols(), Field::zero());
        v[free] = F.one();
        for (int k = 0; k < rr.rank; ++k)
            v[rr.pivot_cols[k]] = F.neg(rr.reduced.at(k, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Matrix invert(const Matrix& m) {
    if (m.rows() != m.cols())
        throw DomainError("matrix/not-square", "only square matrices invert");
    const Field& F = m.field();
    int n = m.rows();
    Matrix aug(F, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = F.one();
    }
    RrefResult rr = rref(aug);
    int left_rank = 0;
    for (int c : rr.pivot_cols)
        if (c < n) ++left_rank;
    if (left_rank < n) throw DomainError("matrix/singular", "matrix is singular");
    Matrix inv(F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.reduced.at(i, n + j);
    return inv;
}

inline std::vector<Fq> mat_vec(const Matrix& m, const std::vector<Fq>& x) {
    const Field& F = m.field();
    if (static_cast<int>(x.size()) != m.cols())
        throw DomainError("matrix/shape", "vector length does not match matrix");
    std::vector<Fq> y(m.rows(), Field::zero());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            y[i] = F.add(y[i], F.mul(m.at(i, j), x[j]));
    return y;
}

// Gaussian elimination on polynomials: repeatedly emit an element with the
// currently largest initial monomial and cancel that monomial from everything
// that shares it.  Output is monic with strictly decreasing initial monomials,
// so its length is dim span(input).  Ties pick the earliest list element.
inline std::vector<Polynomial> basis_algorithm(std::vector<Polynomial> work, MonomialOrder ord) {
    std::vector<Polynomial> basis;
    std::erase_if(work, [](const Polynomial& f) { return f.is_zero(); });
    while (!work.empty()) {
        std::size_t max_idx = 0;
        Monomial max_lm = work[0].leading_monomial(ord);
        for (std::size_t i = 1; i < work.size(); ++i) {
            Monomial lm = work[i].leading_monomial(ord);
            if (order_less(max_lm, lm, ord)) { max_lm = lm; max_idx = i; }
        }
        const Polynomial pick = work[max_idx];
        const Field& F = pick.field();
        Fq pick_lc = pick.leading_coeff(ord);
        std::vector<Polynomial> next;
        next.reserve(work.size());
        for (const Polynomial& g : work) {
            if (!(g.leading_monomial(ord) == max_lm)) continue;
            Polynomial diff = pick - g.scaled(F.div(pick_lc, g.leading_coeff(ord)));
            if (!diff.is_zero()) next.push_back(std::move(diff));
        }
        for (const Polynomial& g : work)
            if (!(g.leading_monomial(ord) == max_lm)) next.push_back(g);
        basis.push_back(pick.monic(ord));
        work = std::move(next);
    }
    return basis;
}

}  // namespace evc
