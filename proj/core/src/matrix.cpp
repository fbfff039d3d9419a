#include "hodge/matrix.hpp"

#include <sstream>

namespace hodge {

int rank(Mat<Q> m) {
    const int r = m.rows(), c = m.cols();
    int rk = 0;
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int piv = -1;
        for (int i = row; i < r; ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < c; ++j) std::swap(m.at(piv, j), m.at(row, j));
        for (int i = row + 1; i < r; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Q f = m.at(i, col) / m.at(row, col);
            for (int j = col; j < c; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        ++row;
        ++rk;
    }
    return rk;
}

MatQ rref(MatQ m, std::vector<int>* pivot_cols) {
    const int r = m.rows(), c = m.cols();
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int piv = -1;
        for (int i = row; i < r; ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < c; ++j) std::swap(m.at(piv, j), m.at(row, j));
        Q inv = m.at(row, col).inverse();
        for (int j = col; j < c; ++j) m.at(row, j) *= inv;
        for (int i = 0; i < r; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Q f = m.at(i, col);
            for (int j = col; j < c; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return m;
}

std::vector<std::vector<Q>> kernel_basis(const MatQ& m) {
    const int c = m.cols();
    std::vector<int> pivots;
    MatQ e = rref(m, &pivots);
    std::vector<bool> is_pivot(c, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Q>> basis;
    for (int free = 0; free < c; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Q> v(c, Q(0));
        v[free] = Q(1);
        for (size_t row = 0; row < pivots.size(); ++row)
            v[pivots[row]] = -e.at(static_cast<int>(row), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

LinStatus linear_solve(const MatQ& a, const std::vector<Q>& b,
                       std::vector<Q>& x) {
    const int r = a.rows(), c = a.cols();
    assert(static_cast<int>(b.size()) == r);
    MatQ aug(r, c + 1);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, c) = b[i];
    }
    std::vector<int> pivots;
    MatQ e = rref(std::move(aug), &pivots);
    if (!pivots.empty() && pivots.back() == c) return LinStatus::inconsistent;
    if (static_cast<int>(pivots.size()) < c) return LinStatus::underdetermined;
    // Full column rank: pivots are exactly the columns 0..c-1 in order.
    x.assign(c, Q(0));
    for (int row = 0; row < c; ++row) x[row] = e.at(row, c);
    return LinStatus::unique;
}

std::string to_string(const Mat<Q>& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m.at(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace hodge
