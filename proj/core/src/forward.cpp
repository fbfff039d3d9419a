#include "hodge/forward.hpp"

#include <cassert>

#include "hodge/errors.hpp"

namespace hodge {

LeviClass p_ref_u(const HodgeParameter& P, const Perm& u) {
    return LeviClass{u, detail::levi_blocks_raw(u, P.L, P.shape.S0())};
}

CrystClass p_cr(const HodgeParameter& P) {
    return CrystClass{detail::p_cr_raw(P.L, P.shape.n(), P.shape.s(),
                                       P.shape.S0())};
}

MatQ cst_window_parameter(const HodgeParameter& P, int r, int q, int t) {
    assert(1 <= r && r < q && q <= P.shape.s());
    assert(1 <= t && t <= P.shape.lengths()[q - 1]);
    HodgeParameter win = principal_window(P, r, q);
    int k = win.shape.t(win.shape.s() - 1);  // all blocks but the last
    return detail::cst_frame_raw(win.L, k, t, P.shape.lengths()[r - 1]);
}

MatQ cst_window_parameter_dual(const HodgeParameter& P, int r, int q, int tp) {
    assert(1 <= r && r < q && q <= P.shape.s());
    assert(1 <= tp && tp <= P.shape.lengths()[r - 1]);
    HodgeParameter dwin = dual(principal_window(P, r, q));
    int sp = dwin.shape.s();
    int lr = P.shape.lengths()[r - 1];
    return cst_window_parameter(dwin, 1, sp, lr - tp + 1);
}

IotaPair iota_pair(const HodgeParameter& P, int r, int q) {
    assert(1 <= r && r < q && q <= P.shape.s());
    const auto& lens = P.shape.lengths();
    IotaPair out;
    out.two_block = principal_window(P, r, r + 1).L;
    HodgeParameter win = principal_window(P, r, q);
    int k = win.shape.t(win.shape.s() - 1);
    int lq = lens[q - 1];
    int lead = std::min(lens[r - 1] + lens[r], k);
    out.induced = detail::cst_frame_raw(win.L, k, lq, lead);
    return out;
}

ForwardBundle forward(const HodgeParameter& P) {
    ForwardBundle out;
    const int s = P.shape.s();
    for (const Perm& u :
         enumerate_min_coset_reps(P.shape.n(), P.shape.S0()))
        out.levi.push_back(p_ref_u(P, u));
    out.cryst = p_cr(P);
    for (int r = 1; r < s; ++r)
        for (int q = r + 1; q <= s; ++q) {
            for (int t = 1; t <= P.shape.lengths()[q - 1]; ++t)
                out.cst[CstKey{r, q, t, false}] =
                    cst_window_parameter(P, r, q, t);
            for (int tp = 1; tp <= P.shape.lengths()[r - 1]; ++tp)
                out.cst[CstKey{r, q, tp, true}] =
                    cst_window_parameter_dual(P, r, q, tp);
            out.iota[{r, q}] = iota_pair(P, r, q);
        }
    return out;
}

ExtendedBundle forward_extended(const HodgeParameter& P) {
    ExtendedBundle out;
    const int s = P.shape.s();
    for (int r = 1; r <= s; ++r)
        for (int q = r; q <= s; ++q)
            out.windows[{r, q}] = forward(principal_window(P, r, q));
    return out;
}

namespace {

// Divide the cross entries (rows < lr, columns >= lr) by the boundary
// entry at (lr-1, lr).
void pin_cross_block(MatQ& M, int lr, const Q& c) {
    for (int i = 0; i < lr && i < M.rows(); ++i)
        for (int j = lr; j < M.cols(); ++j) M.at(i, j) /= c;
}

}  // namespace

ForwardBundle class_normal_form(ForwardBundle b, const SemistableShape& sh) {
    for (auto& [key, pair] : b.iota) {
        int lr = sh.lengths()[key.first - 1];
        const Q c = pair.two_block.at(lr - 1, lr);  // copy: pin overwrites it
        if (c == Q(0)) throw BoundaryEntryZero(key.first);
        pin_cross_block(pair.induced, lr, c);
        pin_cross_block(pair.two_block, lr, c);
    }
    return b;
}

ExtendedBundle class_normal_form(ExtendedBundle b, const SemistableShape& sh) {
    for (auto& [key, wb] : b.windows)
        wb = class_normal_form(std::move(wb),
                               sh.window(key.first, key.second));
    return b;
}

}  // namespace hodge
