#pragma once

// Dense row-major matrices over GF(p) with exact Gaussian elimination.
// Pivoting is deterministic: first nonzero entry in column order.

#include "quivhom/field.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace quivhom {

class Matrix {
public:
    Matrix(PrimeField field, int rows, int cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), e_(checked_size(rows, cols), 0u) {}

    Matrix(PrimeField field, int rows, int cols, std::vector<std::uint32_t> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows < 0 || cols < 0 || e_.size() != (std::size_t)rows * cols)
            throw std::invalid_argument("Matrix: entry count does not match shape");
        for (std::uint32_t v : e_)
            if (v >= field_.prime())
                throw std::invalid_argument("Matrix: entry not reduced mod p");
    }

    static Matrix zero(const PrimeField& f, int rows, int cols) { return Matrix(f, rows, cols); }

    static Matrix identity(const PrimeField& f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const PrimeField& f, const std::vector<std::vector<std::uint32_t>>& rows, int cols) {
        Matrix m(f, (int)rows.size(), cols);
        for (int r = 0; r < (int)rows.size(); ++r) {
            if ((int)rows[r].size() != cols)
                throw std::invalid_argument("Matrix::from_rows: ragged row");
            for (int c = 0; c < cols; ++c)
                m.at(r, c) = f.reduce((long long)rows[r][c]);
        }
        return m;
    }

    const PrimeField& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::uint32_t& at(int r, int c) { return e_[(std::size_t)r * cols_ + c]; }
    std::uint32_t at(int r, int c) const { return e_[(std::size_t)r * cols_ + c]; }

    bool is_zero() const {
        for (std::uint32_t v : e_)
            if (v)
                return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                t.at(c, r) = at(r, c);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_ || field_ != o.field_)
            throw std::invalid_argument("Matrix::mul: shape or field mismatch");
        Matrix r(field_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int k = 0; k < cols_; ++k) {
                std::uint64_t aik = at(i, k);
                if (!aik)
                    continue;
                for (int j = 0; j < o.cols_; ++j) {
                    std::uint64_t v = r.at(i, j) + aik * o.at(k, j) % field_.prime();
                    r.at(i, j) = (std::uint32_t)(v >= field_.prime() ? v - field_.prime() : v);
                }
            }
        }
        return r;
    }

    Matrix vstack(const Matrix& below) const {
        if (cols_ != below.cols_ || field_ != below.field_)
            throw std::invalid_argument("Matrix::vstack: shape or field mismatch");
        Matrix r(field_, rows_ + below.rows_, cols_);
        std::copy(e_.begin(), e_.end(), r.e_.begin());
        std::copy(below.e_.begin(), below.e_.end(), r.e_.begin() + e_.size());
        return r;
    }

    Matrix hstack(const Matrix& right) const {
        if (rows_ != right.rows_ || field_ != right.field_)
            throw std::invalid_argument("Matrix::hstack: shape or field mismatch");
        Matrix r(field_, rows_, cols_ + right.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int c = 0; c < cols_; ++c)
                r.at(i, c) = at(i, c);
            for (int c = 0; c < right.cols_; ++c)
                r.at(i, cols_ + c) = right.at(i, c);
        }
        return r;
    }

    // Reduced row echelon form; pivot column indices are strictly increasing.
    std::pair<Matrix, std::vector<int>> rref() const {
        Matrix m = *this;
        std::vector<int> pivots;
        int lead = 0;
        for (int col = 0; col < cols_ && lead < rows_; ++col) {
            int sel = -1;
            for (int r = lead; r < rows_; ++r) {
                if (m.at(r, col)) {
                    sel = r;
                    break;
                }
            }
            if (sel < 0)
                continue;
            if (sel != lead)
                for (int c = 0; c < cols_; ++c)
                    std::swap(m.at(sel, c), m.at(lead, c));
            std::uint32_t piv_inv = field_.inv(m.at(lead, col));
            for (int c = col; c < cols_; ++c)
                m.at(lead, c) = field_.mul(m.at(lead, c), piv_inv);
            for (int r = 0; r < rows_; ++r) {
                if (r == lead)
                    continue;
                std::uint32_t f = m.at(r, col);
                if (!f)
                    continue;
                for (int c = col; c < cols_; ++c)
                    m.at(r, c) = field_.sub(m.at(r, c), field_.mul(f, m.at(lead, c)));
            }
            pivots.push_back(col);
            ++lead;
        }
        return {std::move(m), std::move(pivots)};
    }

    int rank() const { return (int)rref().second.size(); }

    // Basis of the right null space {v : m v^T = 0}, one vector per row.
    // Free variables are set by unit vectors at non-pivot columns, ascending.
    Matrix kernel_basis() const {
        auto [r, pivots] = rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int p : pivots)
            is_pivot[p] = true;
        Matrix k(field_, cols_ - (int)pivots.size(), cols_);
        int out = 0;
        for (int freec = 0; freec < cols_; ++freec) {
            if (is_pivot[freec])
                continue;
            k.at(out, freec) = 1;
            for (int pr = 0; pr < (int)pivots.size(); ++pr)
                k.at(out, pivots[pr]) = field_.neg(r.at(pr, freec));
            ++out;
        }
        return k;
    }

    // One solution X of (*this) * X = b, free variables zero; empty when inconsistent.
    std::optional<Matrix> solve_right(const Matrix& b) const {
        if (b.rows_ != rows_ || field_ != b.field_)
            throw std::invalid_argument("Matrix::solve_right: dimension mismatch");
        auto [r, pivots] = hstack(b).rref();
        for (int p : pivots)
            if (p >= cols_)
                return std::nullopt;
        Matrix x(field_, cols_, b.cols_);
        for (int pr = 0; pr < (int)pivots.size(); ++pr)
            for (int c = 0; c < b.cols_; ++c)
                x.at(pivots[pr], c) = r.at(pr, cols_ + c);
        return x;
    }

private:
    static std::size_t checked_size(int rows, int cols) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("Matrix: negative dimension");
        return (std::size_t)rows * cols;
    }

    PrimeField field_;
    int rows_, cols_;
    std::vector<std::uint32_t> e_;
};

} // namespace quivhom
