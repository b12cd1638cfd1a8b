#include "galois/matrix.hpp"

#include <stdexcept>

namespace galois {

template <class K>
K Matrix<K>::det() const {
    if (rows_ != cols_) throw std::domain_error("determinant of non-square matrix");
    Matrix<K> m = *this;
    int n = rows_;
    K d(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!is_zero_val(m(r, col))) {
                piv = r;
                break;
            }
        if (piv < 0) return K(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            d = K(0) - d;
        }
        d = d * m(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (is_zero_val(m(r, col))) continue;
            K f = m(r, col) / m(col, col);
            for (int j = col; j < n; ++j) m(r, j) = m(r, j) - f * m(col, j);
        }
    }
    return d;
}

template <class K>
Matrix<K> Matrix<K>::inverse() const {
    if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
    int n = rows_;
    Matrix<K> m = *this;
    Matrix<K> inv = Matrix<K>::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!is_zero_val(m(r, col))) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        K f = m(col, col);
        for (int j = 0; j < n; ++j) {
            m(col, j) = m(col, j) / f;
            inv(col, j) = inv(col, j) / f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || is_zero_val(m(r, col))) continue;
            K g = m(r, col);
            for (int j = 0; j < n; ++j) {
                m(r, j) = m(r, j) - g * m(col, j);
                inv(r, j) = inv(r, j) - g * inv(col, j);
            }
        }
    }
    return inv;
}

template class Matrix<Rational>;
template class Matrix<RatFunc>;

template <class K>
K minor_det(const Matrix<K>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    Matrix<K> sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
    return sub.det();
}

template Rational minor_det(const MatQ&, const std::vector<int>&, const std::vector<int>&);
template RatFunc minor_det(const MatQx&, const std::vector<int>&, const std::vector<int>&);

std::vector<int> rref_q(MatQ& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r)
            if (sgn(m(r, col)) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        Rational f = m(row, col);
        for (int j = 0; j < m.cols(); ++j) m(row, j) /= f;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            Rational g = m(r, col);
            for (int j = 0; j < m.cols(); ++j) m(r, j) -= g * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> kernel_q(const MatQ& m0) {
    MatQ m = m0;
    std::vector<int> pivots = rref_q(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<RatFunc> DependenceFinder::add_row(std::vector<RatFunc> row) {
    std::vector<RatFunc> combo(added_ + 1, RatFunc(Rational(0)));
    combo[added_] = RatFunc(Rational(1));
    ++added_;
    // reduce against echelon rows
    for (const auto& er : echelon_) {
        const RatFunc& lead = row[er.pivot];
        if (lead.is_zero()) continue;
        RatFunc f = lead / er.row[er.pivot];
        for (int j = 0; j < cols_; ++j)
            if (!er.row[j].is_zero()) row[j] -= f * er.row[j];
        for (size_t j = 0; j < er.combo.size(); ++j)
            if (!er.combo[j].is_zero()) combo[j] -= f * er.combo[j];
    }
    int piv = -1;
    for (int j = 0; j < cols_; ++j)
        if (!row[j].is_zero()) {
            piv = j;
            break;
        }
    if (piv < 0) return combo;  // dependence found
    echelon_.push_back({std::move(row), std::move(combo), piv});
    return {};
}

}  // namespace galois
