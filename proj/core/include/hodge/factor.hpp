#pragma once

#include <vector>

#include "hodge/errors.hpp"
#include "hodge/matrix.hpp"

namespace hodge {

// Plain Doolittle LU without pivoting: M = L * U, L unit lower triangular.
// Exists iff all leading principal minors are units.  fail_k reports the
// first 1-based step whose pivot is not a unit (0 on success).
template <class T>
struct LuResult {
    bool ok = false;
    int fail_k = 0;
    Mat<T> L, U;
};

template <class T>
LuResult<T> lu_unit_lower(const Mat<T>& m) {
    LuResult<T> res;
    const int n = m.rows();
    if (m.cols() != n) throw SingularMatrix("lu of non-square matrix");
    Mat<T> a = m;
    Mat<T> l = Mat<T>::identity(n);
    for (int k = 0; k < n; ++k) {
        if (!scalar_traits<T>::is_unit(a.at(k, k))) {
            res.fail_k = k + 1;
            return res;
        }
        for (int i = k + 1; i < n; ++i) {
            if (a.at(i, k) == T(0)) continue;
            T f = a.at(i, k) / a.at(k, k);
            l.at(i, k) = f;
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    res.ok = true;
    res.L = std::move(l);
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) a.at(i, j) = T(0);
    res.U = std::move(a);
    return res;
}

// M = U * Lw * Dg with U unit upper, Lw unit lower, Dg diagonal.  Exists
// iff every bottom-right corner minor of M is a unit; the factorization is
// then unique.  Throws SingularWindow(k) at the first vanishing corner.
template <class T>
struct Uld {
    Mat<T> U, Lw, Dg;
};

template <class T>
Uld<T> uld_factor(const Mat<T>& m) {
    // w0 M w0 = L'' U'' turns into M = (w0 L'' w0)(w0 U'' w0), an
    // unit-upper times lower factorization; split off the diagonal.
    auto lu = lu_unit_lower(m.conj_w0());
    if (!lu.ok) throw SingularWindow(lu.fail_k);
    const int n = m.rows();
    Uld<T> out;
    out.U = lu.L.conj_w0();
    Mat<T> lower = lu.U.conj_w0();
    out.Dg = Mat<T>(n, n);
    out.Lw = Mat<T>::identity(n);
    for (int j = 0; j < n; ++j) {
        out.Dg.at(j, j) = lower.at(j, j);
        for (int i = j + 1; i < n; ++i)
            out.Lw.at(i, j) = lower.at(i, j) / lower.at(j, j);
    }
    return out;
}

// M = Nu * w0 * B with Nu unit upper and B upper triangular (invertible).
// Exists iff every bottom-left corner minor of M is a unit ("big cell").
// Throws NotInBigCell(k) at the first vanishing corner.
template <class T>
struct BruhatW0 {
    Mat<T> Nu, B;
};

template <class T>
BruhatW0<T> bruhat_w0_factor(const Mat<T>& m) {
    // w0 M = (w0 Nu w0) B is a unit-lower times upper factorization.
    auto lu = lu_unit_lower(m.reversed_rows());
    if (!lu.ok) throw NotInBigCell(lu.fail_k);
    BruhatW0<T> out;
    out.Nu = lu.L.conj_w0();
    out.B = std::move(lu.U);
    return out;
}

// First k (1-based) whose bottom-left k x k corner minor is not a unit;
// 0 when the matrix lies in the big cell.
template <class T>
int first_singular_corner(const Mat<T>& m) {
    auto lu = lu_unit_lower(m.reversed_rows());
    return lu.ok ? 0 : lu.fail_k;
}

template <class T>
bool in_big_cell(const Mat<T>& m) {
    return first_singular_corner(m) == 0;
}

// Bottom-left k x k corner minor: rows n-k..n-1, columns 0..k-1.
template <class T>
T bottom_left_corner_minor(const Mat<T>& m, int k) {
    return det(m.submatrix(m.rows() - k, 0, k, k));
}

// Bottom-right k x k corner minor: rows n-k..n-1, columns n-k..n-1.
template <class T>
T bottom_right_corner_minor(const Mat<T>& m, int k) {
    return det(m.submatrix(m.rows() - k, m.cols() - k, k, k));
}

// Column c (0-based) of the unit-upper factor of uld_factor(M), computed
// directly: it is the unique vector in the span of columns c..n-1 of M
// whose coordinates c+1..n-1 vanish and whose coordinate c equals 1.  Only
// rows c..n-1 of M enter the solve, so entries of M strictly above row c
// and left of column c are never touched.
template <class T>
std::vector<T> uld_col(const Mat<T>& m, int c) {
    const int n = m.rows();
    Mat<T> a = m.submatrix(c, c, n - c, n - c);
    std::vector<T> rhs(n - c, T(0));
    rhs[0] = T(1);
    std::vector<T> y = solve(a, rhs);
    std::vector<T> col(n, T(0));
    for (int i = 0; i < n; ++i) {
        T acc(0);
        for (int j = c; j < n; ++j) acc += m.at(i, j) * y[j - c];
        col[i] = acc;
    }
    return col;
}

}  // namespace hodge
