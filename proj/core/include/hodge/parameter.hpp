#pragma once

#include <optional>
#include <vector>

#include "hodge/factor.hpp"
#include "hodge/matrix.hpp"
#include "hodge/rng.hpp"
#include "hodge/shape.hpp"
#include "hodge/weyl.hpp"

namespace hodge {

// A parameter class: unit upper-triangular matrix of filtration
// coefficients attached to a shape.  The block-scalar torus Z_{S0} acts by
// scaling cross-block entries; class operations (normalize, equivalent)
// work modulo that action.
struct HodgeParameter {
    SemistableShape shape;
    MatQ L;  // n x n, unit upper-triangular

    HodgeParameter(SemistableShape sh, MatQ l);
};

// The matrix u^{-1} * L * w0 whose corner minors detect criticality of the
// refinement u.
template <class T>
Mat<T> refined_flag(const Perm& u, const Mat<T>& L) {
    const int n = L.rows();
    Mat<T> out(n, n);
    for (int i = 0; i < n; ++i) {
        int src = u(i + 1) - 1;  // row i of u^{-1}L is row u(i+1) of L
        for (int j = 0; j < n; ++j) out.at(i, j) = L.at(src, n - 1 - j);
    }
    return out;
}

// ok, or the first witness (u, k) with the k-th corner minor of
// u^{-1} L w0 vanishing.
struct NonCriticalReport {
    bool ok = true;
    Perm u;
    int k = 0;
};

NonCriticalReport check_non_critical(const HodgeParameter& P);

// Scale entry (i,j) by z_{blk(i)} / z_{blk(j)}; z has one nonzero scalar
// per block.
HodgeParameter z_action(const std::vector<Q>& z, const HodgeParameter& P);

// Unique torus translate with all boundary entries L[t_l, t_l + 1] = 1,
// l = 1..s-1.  Throws BoundaryEntryZero.
HodgeParameter normalize(const HodgeParameter& P);

// Same class: equal shapes and equal normal forms.
bool equivalent(const HodgeParameter& a, const HodgeParameter& b);

// (dual shape, w0 (L^{-1})^T w0); involution.
HodgeParameter dual(const HodgeParameter& P);

// Parameter of the subquotient made of blocks r..q: the principal
// submatrix of rows/columns t_{r-1}+1 .. t_q.
HodgeParameter principal_window(const HodgeParameter& P, int r, int q);

// Rejection sampling: strictly-upper integer entries in [-bound, bound]
// until the result is non-critical and normalizable; returns the
// normalized representative.
HodgeParameter random_non_critical(const SemistableShape& shape, Rng& rng,
                                   long bound = 9);

}  // namespace hodge
