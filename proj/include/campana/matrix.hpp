#pragma once

#include "campana/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace campana {

/// Dense matrix with arbitrary-precision integer entries.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
    IntMat(std::initializer_list<std::initializer_list<Int>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("IntMat: ragged initializer");
            for (const auto& e : row) entries_.push_back(e);
        }
    }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    IntMat operator*(const IntMat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMat: dimension mismatch in product");
        IntMat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    IntMat transposed() const {
        IntMat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

using LatticeVector = std::vector<Int>;

/// Stacks vectors as the rows of a matrix; throws on dimension mismatch.
inline IntMat rows_from_vectors(const std::vector<LatticeVector>& vs, std::size_t dim) {
    IntMat m(vs.size(), dim);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].size() != dim)
            throw std::invalid_argument("lattice vector dimension mismatch");
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = vs[i][j];
    }
    return m;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det(IntMat a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det: non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

/// Rank over Q by fraction-free row elimination.
inline std::size_t rank_over_q(IntMat a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && a(piv, col) == 0) ++piv;
        if (piv == m) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(a(rank, j), a(piv, j));
        for (std::size_t i = rank + 1; i < m; ++i) {
            if (a(i, col) == 0) continue;
            Int f1 = a(rank, col), f2 = a(i, col);
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = a(i, j) * f1 - a(rank, j) * f2;
        }
        ++rank;
    }
    return rank;
}

}  // namespace campana
