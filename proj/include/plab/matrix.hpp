#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "plab/quadext.hpp"
#include "plab/rational.hpp"

namespace plab {

// Dense matrix over an exact scalar field (Rat or QuadExt).
template <class K>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, K(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative shape");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& at(int r, int c) { return data_[idx(r, c)]; }
    const K& at(int r, int c) const { return data_[idx(r, c)]; }

    std::vector<K> col(int c) const {
        std::vector<K> v(rows_);
        for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }
    std::vector<K> row(int r) const {
        std::vector<K> v(cols_);
        for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
        return v;
    }
    void set_col(int c, const std::vector<K>& v) {
        if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("Mat: column size mismatch");
        for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    static Mat from_columns(const std::vector<std::vector<K>>& cols) {
        if (cols.empty()) return Mat(0, 0);
        Mat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].size() != cols[0].size()) throw std::invalid_argument("Mat: ragged columns");
            for (size_t r = 0; r < cols[c].size(); ++r) m.at(static_cast<int>(r), static_cast<int>(c)) = cols[c][r];
        }
        return m;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
        Mat p(a.rows_, b.cols_);
        for (int r = 0; r < a.rows_; ++r)
            for (int k = 0; k < a.cols_; ++k) {
                if (plab::is_zero(a.at(r, k))) continue;
                for (int c = 0; c < b.cols_; ++c) p.at(r, c) += a.at(r, k) * b.at(k, c);
            }
        return p;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.data_.size(); ++i)
            if (!(plab::is_zero(a.data_[i] - b.data_[i]))) return false;
        return true;
    }

    Mat submatrix(const std::vector<int>& rowset, const std::vector<int>& colset) const {
        Mat s(static_cast<int>(rowset.size()), static_cast<int>(colset.size()));
        for (size_t r = 0; r < rowset.size(); ++r) {
            if (rowset[r] < 0 || rowset[r] >= rows_) throw std::out_of_range("Mat: row index");
            for (size_t c = 0; c < colset.size(); ++c) {
                if (colset[c] < 0 || colset[c] >= cols_) throw std::out_of_range("Mat: column index");
                s.at(static_cast<int>(r), static_cast<int>(c)) = at(rowset[r], colset[c]);
            }
        }
        return s;
    }

private:
    size_t idx(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("Mat: index");
        return static_cast<size_t>(r) * cols_ + c;
    }
    int rows_, cols_;
    std::vector<K> data_;
};

// Exact determinant by Gaussian elimination with pivoting by nonzero test.
template <class K>
K det(Mat<K> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square");
    int n = m.rows();
    K result(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!is_zero(m.at(r, c))) { piv = r; break; }
        if (piv < 0) return K(0);
        if (piv != c) {
            for (int j = c; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            result = -result;
        }
        result = result * m.at(c, c);
        K inv_piv = K(1) / m.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (is_zero(m.at(r, c))) continue;
            K f = m.at(r, c) * inv_piv;
            for (int j = c; j < n; ++j) m.at(r, j) = m.at(r, j) - f * m.at(c, j);
        }
    }
    return result;
}

// Minor: alternating in the column (and row) order given.
template <class K>
K minor_det(const Mat<K>& m, const std::vector<int>& rowset, const std::vector<int>& colset) {
    if (rowset.size() != colset.size()) throw std::invalid_argument("minor: shape mismatch");
    return det(m.submatrix(rowset, colset));
}

// Plucker coordinate: maximal minor using all rows and the given columns.
template <class K>
K plucker(const Mat<K>& m, const std::vector<int>& colset) {
    if (static_cast<int>(colset.size()) != m.rows()) throw std::invalid_argument("plucker: need |colset| == rows");
    std::vector<int> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i) rows[i] = i;
    return minor_det(m, rows, colset);
}

// Reduced row echelon form in place; returns pivot column list.
template <class K>
std::vector<int> rref(Mat<K>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!is_zero(m.at(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        K inv_piv = K(1) / m.at(r, c);
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv_piv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            K f = m.at(i, c);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
int rank(Mat<K> m) {
    return static_cast<int>(rref(m).size());
}

// Basis of the right null space {x : Mx = 0}, one column per basis vector.
template <class K>
Mat<K> kernel(Mat<K> m) {
    int n = m.cols();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat<K> ker(n, static_cast<int>(free_cols.size()));
    for (size_t j = 0; j < free_cols.size(); ++j) {
        int fc = free_cols[j];
        ker.at(fc, static_cast<int>(j)) = K(1);
        for (size_t r = 0; r < pivots.size(); ++r) ker.at(pivots[r], static_cast<int>(j)) = -m.at(static_cast<int>(r), fc);
    }
    return ker;
}

using MatQ = Mat<Rat>;

}  // namespace plab
