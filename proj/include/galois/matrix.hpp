#pragma once

#include <vector>

#include "galois/ratfunc.hpp"

namespace galois {

// Small dense matrix over an exact field (Rational or RatFunc).
template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    K& operator()(int i, int j) { return data_[i * cols_ + j]; }
    const K& operator()(int i, int j) const { return data_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const {
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const K& a = (*this)(i, k);
                if (is_zero_val(a)) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (is_zero_val(o(k, j))) continue;
                    r(i, j) += a * o(k, j);
                }
            }
        return r;
    }

    std::vector<K> operator*(const std::vector<K>& v) const {
        std::vector<K> r(rows_, K(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!is_zero_val((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    K det() const;
    Matrix inverse() const;  // throws std::domain_error when singular

    static bool is_zero_val(const K& k);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<K> data_;
};

template <>
inline bool Matrix<Rational>::is_zero_val(const Rational& k) { return sgn(k) == 0; }
template <>
inline bool Matrix<RatFunc>::is_zero_val(const RatFunc& k) { return k.is_zero(); }

using MatQ = Matrix<Rational>;
using MatQx = Matrix<RatFunc>;

// Determinant of the submatrix picked by the given row/column index sets.
template <class K>
K minor_det(const Matrix<K>& m, const std::vector<int>& rows, const std::vector<int>& cols);

// Kernel basis over Q of a rational matrix, via reduced row echelon form with
// deterministic pivoting. Rows of the result span {v : M v = 0}.
std::vector<std::vector<Rational>> kernel_q(const MatQ& m);

// Reduced row echelon form over Q in place; returns pivot column indices.
std::vector<int> rref_q(MatQ& m);

// Incremental linear-dependence detector over Q(x). Rows are added one at a
// time; the first row that is a combination of the previous ones reports the
// combination coefficients (in terms of the original rows).
class DependenceFinder {
public:
    explicit DependenceFinder(int cols) : cols_(cols) {}

    // Returns empty vector while rows stay independent; otherwise the
    // coefficients c_0..c_k (c_k != 0) with sum c_i * row_i = 0.
    std::vector<RatFunc> add_row(std::vector<RatFunc> row);

    int rank() const { return static_cast<int>(echelon_.size()); }

private:
    struct EchelonRow {
        std::vector<RatFunc> row;
        std::vector<RatFunc> combo;  // expression in original rows
        int pivot;
    };
    int cols_;
    int added_ = 0;
    std::vector<EchelonRow> echelon_;
};

}  // namespace galois
