#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hodge/parameter.hpp"

namespace hodge {

// Per-refinement Levi data: the unit upper-triangular diagonal blocks of
// the big-cell numerator of u^{-1} L w0, cut along the S0(u)-blocks.
// Cross-block torus scaling never touches these entries, so the tuple is a
// class invariant as stored.
struct LeviClass {
    Perm u;
    std::vector<MatQ> blocks;

    bool operator==(const LeviClass& o) const {
        return u == o.u && blocks == o.blocks;
    }
};

// Torus-normalized s x s crystalline class (superdiagonal all 1).
struct CrystClass {
    MatQ C;

    bool operator==(const CrystClass& o) const { return C == o.C; }
};

// Key of one window frame: blocks r < q, shift t, side (false = sub-side
// datum of E_r taken inside E_r^q, true = quotient-side datum of E_q).
struct CstKey {
    int r, q, t;
    bool quotient;

    bool operator<(const CstKey& o) const {
        if (r != o.r) return r < o.r;
        if (q != o.q) return q < o.q;
        if (t != o.t) return t < o.t;
        return quotient < o.quotient;
    }
    bool operator==(const CstKey& o) const {
        return r == o.r && q == o.q && t == o.t && quotient == o.quotient;
    }
};

// Injection/projection datum for the pair (r, q): the two-block parameter
// of E_r^{r+1} and the induced parameter read off inside E_r^q.
struct IotaPair {
    MatQ two_block;
    MatQ induced;

    bool operator==(const IotaPair& o) const {
        return two_block == o.two_block && induced == o.induced;
    }
};

struct ForwardBundle {
    std::vector<LeviClass> levi;  // one per coset representative, in order
    CrystClass cryst;
    std::map<CstKey, MatQ> cst;
    std::map<std::pair<int, int>, IotaPair> iota;

    bool operator==(const ForwardBundle& o) const {
        return levi == o.levi && cryst == o.cryst && cst == o.cst &&
               iota == o.iota;
    }
};

// Bundles of every principal window, keyed by (r, q); (1, s) is the bundle
// of the parameter itself.
struct ExtendedBundle {
    std::map<std::pair<int, int>, ForwardBundle> windows;

    bool operator==(const ExtendedBundle& o) const {
        return windows == o.windows;
    }
};

namespace detail {

// Diagonal blocks of M along the given inclusive ranges.
template <class T>
std::vector<Mat<T>> diag_blocks(const Mat<T>& M,
                                const std::vector<std::pair<int, int>>& blocks) {
    std::vector<Mat<T>> out;
    for (auto [a, b] : blocks)
        out.push_back(M.submatrix(a - 1, a - 1, b - a + 1, b - a + 1));
    return out;
}

// Unit-upper factor blocks of u^{-1} L w0 cut along S0(u).
template <class T>
std::vector<Mat<T>> levi_blocks_raw(const Perm& u, const Mat<T>& L,
                                    const Roots& S0) {
    auto nu = bruhat_w0_factor(refined_flag(u, L)).Nu;
    return diag_blocks(nu, blocks_of(L.rows(), S0_of(u, S0)));
}

// Torus-normalize a unit upper-triangular matrix so its superdiagonal
// becomes all 1.  Throws BoundaryEntryZero(i) at a vanishing entry.
template <class T>
Mat<T> torus_normalize(const Mat<T>& C) {
    const int s = C.rows();
    std::vector<T> z(s, T(1));
    for (int i = 0; i + 1 < s; ++i) {
        if (!scalar_traits<T>::is_unit(C.at(i, i + 1)))
            throw BoundaryEntryZero(i + 1);
        z[i + 1] = z[i] * C.at(i, i + 1);
    }
    Mat<T> out = C;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            out.at(i, j) = C.at(i, j) * z[i] / z[j];
    return out;
}

// Trailing s x s block of the big-cell numerator at the block-tail
// representative, torus-normalized.
template <class T>
Mat<T> p_cr_raw(const Mat<T>& L, int n, int s, const Roots& S0) {
    Perm u0 = block_tail_rep(n, S0);
    auto nu = bruhat_w0_factor(refined_flag(u0, L)).Nu;
    return torus_normalize(nu.submatrix(n - s, n - s, s, s));
}

// Leading lead x lead block of the unit-upper factor of the k x k minor
// W[1..k, t+1..t+k] (1-based).
template <class T>
Mat<T> cst_frame_raw(const Mat<T>& W, int k, int t, int lead) {
    Mat<T> minor = W.submatrix(0, t, k, k);
    auto f = uld_factor(minor);
    return f.U.submatrix(0, 0, lead, lead);
}

}  // namespace detail

// The refinement datum at u: whole-block parameters of the Steinberg
// pieces carried by u.  At u = id these are the diagonal S0-blocks of L.
LeviClass p_ref_u(const HodgeParameter& P, const Perm& u);

// The crystalline class of P.
CrystClass p_cr(const HodgeParameter& P);

// Sub-side window frame: leading l_r x l_r block of the unit-upper factor
// of the t-shifted minor of the window of blocks r..q; 1 <= t <= l_q.
MatQ cst_window_parameter(const HodgeParameter& P, int r, int q, int t);

// Quotient-side frame, defined through the dual window with the block
// roles reversed; 1 <= tp <= l_r.  Returns an l_q x l_q matrix.
MatQ cst_window_parameter_dual(const HodgeParameter& P, int r, int q, int tp);

// Pair (two-block parameter of E_r^{r+1}, induced parameter inside E_r^q).
IotaPair iota_pair(const HodgeParameter& P, int r, int q);

ForwardBundle forward(const HodgeParameter& P);
ExtendedBundle forward_extended(const HodgeParameter& P);

// Torus-normalizes the iota items (the only bundle entries that move
// under z_action): cross-block entries of each pair are divided by the
// raw boundary entry of its two-block parameter.  All bundles in one
// class share this normal form.  Throws BoundaryEntryZero.
ForwardBundle class_normal_form(ForwardBundle b, const SemistableShape& sh);
ExtendedBundle class_normal_form(ExtendedBundle b,
                                 const SemistableShape& sh);

}  // namespace hodge
