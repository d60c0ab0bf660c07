#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rep/rational.hpp"

namespace rep {

// Dense matrix over an exact scalar (Rat or DualScalar). Row-major storage.
// Target sizes stay in the low hundreds, so no sparse machinery.
template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
        assert(rows >= 0 && cols >= 0);
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }
    const T& operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!(e == T(0))) return false;
        return true;
    }
    bool is_square() const { return rows_ == cols_; }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& e : entries_) e = e * s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector: shape mismatch");
        std::vector<T> out(rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

  private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix sum: shape mismatch");
    }

    int rows_, cols_;
    std::vector<T> entries_;
};

using RationalMatrix = Matrix<Rat>;
using DualMatrix = Matrix<DualScalar>;

inline DualMatrix to_dual(const RationalMatrix& value, const RationalMatrix& eps) {
    DualMatrix d(value.rows(), value.cols());
    for (int i = 0; i < value.rows(); ++i)
        for (int j = 0; j < value.cols(); ++j) d(i, j) = DualScalar(value(i, j), eps(i, j));
    return d;
}

struct RrefResult {
    RationalMatrix reduced;
    int rank = 0;
    std::vector<int> pivot_columns;
};

struct KernelBasis {
    int dimension = 0;
    std::vector<std::vector<Rat>> basis_vectors;  // reduced echelon, leftmost-pivot normalized
};

// Either a solution of M x = target or a row combination y with y*M = 0,
// y*target != 0 witnessing inconsistency.
struct SolveResult {
    bool consistent = false;
    std::vector<Rat> solution;
    std::vector<Rat> certificate;
};

// Reduced row echelon form, deterministic: leftmost pivot column, topmost
// nonzero row. Rows are rescaled to coprime integer entries between
// elimination steps to bound bit growth; the returned form has unit pivots.
RrefResult rref(const RationalMatrix& m);

KernelBasis kernel(const RationalMatrix& m);

SolveResult solve(const RationalMatrix& m, const std::vector<Rat>& target);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

int rank(const RationalMatrix& m);

}  // namespace rep
