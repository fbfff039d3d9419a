#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "hodge/dual.hpp"
#include "hodge/errors.hpp"
#include "hodge/rational.hpp"

namespace hodge {

// Dense matrix over an exact scalar (Q or DQ).  Indices are 0-based.
template <class T>
class Mat {
public:
    Mat() : r_(0), c_(0) {}
    Mat(int r, int c) : r_(r), c_(c), e_(static_cast<std::size_t>(r) * c, T(0)) {
        assert(r >= 0 && c >= 0);
    }
    Mat(int r, int c, std::vector<T> entries)
        : r_(r), c_(c), e_(std::move(entries)) {
        assert(e_.size() == static_cast<std::size_t>(r_) * c_);
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    // Antidiagonal permutation matrix (the longest Weyl element).
    static Mat w0(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = T(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    T& at(int i, int j) {
        assert(0 <= i && i < r_ && 0 <= j && j < c_);
        return e_[static_cast<std::size_t>(i) * c_ + j];
    }
    const T& at(int i, int j) const {
        assert(0 <= i && i < r_ && 0 <= j && j < c_);
        return e_[static_cast<std::size_t>(i) * c_ + j];
    }

    Mat transpose() const {
        Mat m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    // Rows in reverse order (left multiplication by w0).
    Mat reversed_rows() const {
        Mat m(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m.at(i, j) = at(r_ - 1 - i, j);
        return m;
    }

    // Columns in reverse order (right multiplication by w0).
    Mat reversed_cols() const {
        Mat m(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m.at(i, j) = at(i, c_ - 1 - j);
        return m;
    }

    // w0 * M * w0.
    Mat conj_w0() const {
        Mat m(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m.at(i, j) = at(r_ - 1 - i, c_ - 1 - j);
        return m;
    }

    // Contiguous h x w block with top-left corner (i0, j0).
    Mat submatrix(int i0, int j0, int h, int w) const {
        assert(0 <= i0 && i0 + h <= r_ && 0 <= j0 && j0 + w <= c_);
        Mat m(h, w);
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < w; ++j) m.at(i, j) = at(i0 + i, j0 + j);
        return m;
    }

    Mat select(const std::vector<int>& rows, const std::vector<int>& cols) const {
        Mat m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                m.at(static_cast<int>(i), static_cast<int>(j)) =
                    at(rows[i], cols[j]);
        return m;
    }

    void set_block(int i0, int j0, const Mat& b) {
        assert(i0 + b.rows() <= r_ && j0 + b.cols() <= c_);
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) at(i0 + i, j0 + j) = b.at(i, j);
    }

    Mat operator*(const Mat& o) const {
        assert(c_ == o.r_);
        Mat m(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const T& a = at(i, k);
                if (a == T(0)) continue;
                for (int j = 0; j < o.c_; ++j) m.at(i, j) += a * o.at(k, j);
            }
        return m;
    }

    Mat operator+(const Mat& o) const {
        assert(r_ == o.r_ && c_ == o.c_);
        Mat m(r_, c_);
        for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
        return m;
    }

    Mat operator-(const Mat& o) const {
        assert(r_ == o.r_ && c_ == o.c_);
        Mat m(r_, c_);
        for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
        return m;
    }

    Mat operator-() const {
        Mat m(r_, c_);
        for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
        return m;
    }

    friend Mat operator*(const T& s, const Mat& m) {
        Mat out(m.r_, m.c_);
        for (std::size_t i = 0; i < m.e_.size(); ++i) out.e_[i] = s * m.e_[i];
        return out;
    }

    bool operator==(const Mat& o) const {
        return r_ == o.r_ && c_ == o.c_ && e_ == o.e_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_square() const { return r_ == c_; }

    bool is_identity() const {
        if (!is_square()) return false;
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (at(i, j) != (i == j ? T(1) : T(0))) return false;
        return true;
    }

    bool is_unit_upper() const {
        if (!is_square()) return false;
        for (int i = 0; i < r_; ++i) {
            if (at(i, i) != T(1)) return false;
            for (int j = 0; j < i; ++j)
                if (at(i, j) != T(0)) return false;
        }
        return true;
    }

    bool is_unit_lower() const {
        if (!is_square()) return false;
        for (int i = 0; i < r_; ++i) {
            if (at(i, i) != T(1)) return false;
            for (int j = i + 1; j < c_; ++j)
                if (at(i, j) != T(0)) return false;
        }
        return true;
    }

    bool is_diagonal() const {
        if (!is_square()) return false;
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (i != j && at(i, j) != T(0)) return false;
        return true;
    }

private:
    int r_, c_;
    std::vector<T> e_;
};

using MatQ = Mat<Q>;
using MatDQ = Mat<DQ>;

template <class T>
Mat<T> diagonal(const std::vector<T>& d) {
    Mat<T> m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
        m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

template <class To, class From>
Mat<To> mat_cast(const Mat<From>& m) {
    Mat<To> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = To(m.at(i, j));
    return out;
}

// Gauss-Jordan inverse.  Pivots must be units (for DQ: nonzero value part);
// otherwise SingularMatrix.
template <class T>
Mat<T> inverse(Mat<T> m) {
    if (!m.is_square()) throw SingularMatrix("inverse of non-square matrix");
    const int n = m.rows();
    Mat<T> inv = Mat<T>::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (scalar_traits<T>::is_unit(m.at(row, col))) {
                piv = row;
                break;
            }
        if (piv < 0) throw SingularMatrix();
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        T d = m.at(col, col);
        for (int j = 0; j < n; ++j) {
            m.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            T f = m.at(row, col);
            if (f == T(0)) continue;
            for (int j = 0; j < n; ++j) {
                m.at(row, j) -= f * m.at(col, j);
                inv.at(row, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

// Determinant by fraction-full Gaussian elimination with row swaps.
template <class T>
T det(Mat<T> m) {
    if (!m.is_square()) throw SingularMatrix("det of non-square matrix");
    const int n = m.rows();
    T result(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (scalar_traits<T>::is_unit(m.at(row, col))) {
                piv = row;
                break;
            }
        if (piv < 0) {
            // For Q this means determinant zero; DQ callers only ever take
            // determinants of value-invertible matrices.
            bool clean = true;
            for (int row = col; row < n; ++row)
                if (m.at(row, col) != T(0)) clean = false;
            if (!clean) throw SingularMatrix("determinant needs a unit pivot");
            return T(0);
        }
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            result = -result;
        }
        result *= m.at(col, col);
        for (int row = col + 1; row < n; ++row) {
            if (m.at(row, col) == T(0)) continue;
            T f = m.at(row, col) / m.at(col, col);
            for (int j = col; j < n; ++j) m.at(row, j) -= f * m.at(col, j);
        }
    }
    return result;
}

// Rank over Q.
int rank(Mat<Q> m);

// Reduced row echelon form; appends the pivot column of each nonzero row
// to *pivot_cols when given.
MatQ rref(MatQ m, std::vector<int>* pivot_cols = nullptr);

// Basis of the right kernel, one vector per free column.
std::vector<std::vector<Q>> kernel_basis(const MatQ& m);

enum class LinStatus { unique, inconsistent, underdetermined };

// Exact solve of a general (possibly non-square) system A x = b.
LinStatus linear_solve(const MatQ& a, const std::vector<Q>& b,
                       std::vector<Q>& x);

// Solve A * x = b for square invertible A.
template <class T>
std::vector<T> solve(Mat<T> a, std::vector<T> b) {
    const int n = a.rows();
    assert(a.cols() == n && static_cast<int>(b.size()) == n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (scalar_traits<T>::is_unit(a.at(row, col))) {
                piv = row;
                break;
            }
        if (piv < 0) throw SingularMatrix("linear system is singular");
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            std::swap(b[piv], b[col]);
        }
        for (int row = col + 1; row < n; ++row) {
            if (a.at(row, col) == T(0)) continue;
            T f = a.at(row, col) / a.at(col, col);
            for (int j = col; j < n; ++j) a.at(row, j) -= f * a.at(col, j);
            b[row] -= f * b[col];
        }
    }
    std::vector<T> x(n, T(0));
    for (int row = n - 1; row >= 0; --row) {
        T acc = b[row];
        for (int j = row + 1; j < n; ++j) acc -= a.at(row, j) * x[j];
        x[row] = acc / a.at(row, row);
    }
    return x;
}

std::string to_string(const Mat<Q>& m);

}  // namespace hodge
