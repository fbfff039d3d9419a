#pragma once

#include <string>
#include <vector>

#include "hodge/matrix.hpp"

namespace hodge {

// Permutation of {1..n} in one-line notation.  All public indices are
// 1-based to match the written conventions; storage is 0-based.
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);  // identity
    static Perm from_images(const std::vector<int>& images_1based);
    static Perm transposition(int n, int i);  // s_i swaps i and i+1
    static Perm longest(int n);               // w0(i) = n+1-i

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    std::vector<int> images() const { return img_; }

    Perm inverse() const;
    // (u * v)(x) = u(v(x)).
    Perm operator*(const Perm& o) const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }
    bool is_identity() const;

    // Number of inversions = Coxeter length.
    int length() const;

    // Permutation matrix with a 1 in row u(j), column j; then
    // matrix(u*v) = matrix(u) * matrix(v).
    template <class T>
    Mat<T> matrix() const {
        Mat<T> m(n(), n());
        for (int j = 1; j <= n(); ++j) m.at((*this)(j)-1, j - 1) = T(1);
        return m;
    }

    std::string str() const;  // "[3,1,2]"

private:
    std::vector<int> img_;
};

std::vector<Perm> all_perms(int n);  // lexicographic one-line order

}  // namespace hodge
