#include "hodge/jacobian.hpp"

#include <map>
#include <utility>
#include <vector>

#include "hodge/errors.hpp"
#include "hodge/factor.hpp"
#include "hodge/forward.hpp"
#include "hodge/weyl.hpp"

namespace hodge {

namespace {

std::vector<std::pair<int, int>> upper_directions(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

// Row r of the inverse of a unit lower-triangular matrix, by back
// substitution on the transpose.
std::vector<Q> unit_lower_inverse_row(const MatQ& Lo, int r) {
    const int n = Lo.rows();
    std::vector<Q> y(n, Q(0));
    y[r] = Q(1);
    for (int c = r - 1; c >= 0; --c) {
        Q acc(0);
        for (int j = c + 1; j <= r; ++j) acc += Lo.at(j, c) * y[j];
        y[c] = -acc;
    }
    return y;
}

// Column c of the inverse of an invertible upper-triangular matrix.
std::vector<Q> upper_inverse_col(const MatQ& Up, int c) {
    std::vector<Q> x(Up.rows(), Q(0));
    x[c] = Q(1) / Up.at(c, c);
    for (int i = c - 1; i >= 0; --i) {
        Q acc(0);
        for (int j = i + 1; j <= c; ++j) acc += Up.at(i, j) * x[j];
        x[i] = -acc / Up.at(i, i);
    }
    return x;
}

}  // namespace

MatQ forward_differential(const HodgeParameter& P) {
    const MatQ& L = P.L;
    const int n = P.shape.n();
    const int s = P.shape.s();
    const Roots& S0 = P.shape.S0();
    const auto dirs = upper_directions(n);
    const int D = static_cast<int>(dirs.size());

    std::vector<std::vector<Q>> rows;

    // Refinement data.  With R = Lam * Ups the LU of the row-reversed
    // refined flag, Nu = conj_w0(Lam) and
    //   dLam = Lam * low(Lam^-1 dR Ups^-1).
    // A coordinate direction hits a single entry of R, so the middle
    // factor is the outer product of a column of Lam^-1 and a row of
    // Ups^-1; only a band of Lam^-1 rows and one Ups^-1 column per datum
    // entry are ever read, so those are solved for directly.
    for (const Perm& u : enumerate_min_coset_reps(n, S0)) {
        auto cut = blocks_of(n, S0_of(u, S0));
        bool trivial = true;
        for (auto [a, b] : cut) trivial = trivial && a == b;
        if (trivial) continue;  // all blocks 1x1: constant datum

        auto lu = lu_unit_lower(refined_flag(u, L).reversed_rows());
        if (!lu.ok) throw NotInBigCell(lu.fail_k);
        const MatQ& Lam = lu.L;
        std::map<int, std::vector<Q>> lami_rows;
        std::map<int, std::vector<Q>> upsi_cols;
        Perm ui = u.inverse();
        std::vector<int> ar(n);
        for (int i = 0; i < n; ++i) ar[i] = n - 1 - (ui(i + 1) - 1);

        for (auto [a, b] : cut)
            for (int p = a - 1; p <= b - 2; ++p)
                for (int q = p + 1; q <= b - 1; ++q) {
                    const int i0 = n - 1 - p, j0 = n - 1 - q;
                    for (int k = j0 + 1; k <= i0; ++k)
                        if (!lami_rows.count(k))
                            lami_rows.emplace(
                                k, unit_lower_inverse_row(Lam, k));
                    auto [uc, fresh] = upsi_cols.try_emplace(j0);
                    if (fresh) uc->second = upper_inverse_col(lu.U, j0);

                    // acc(r) = sum_k Lam(i0,k) Lami(k,r) over the band.
                    std::vector<Q> acc(n, Q(0));
                    for (int k = j0 + 1; k <= i0; ++k) {
                        const std::vector<Q>& lr = lami_rows.at(k);
                        const Q& w = Lam.at(i0, k);
                        for (int r = 0; r <= k; ++r) acc[r] += w * lr[r];
                    }
                    std::vector<Q> row(D, Q(0));
                    for (int d = 0; d < D; ++d) {
                        auto [i, j] = dirs[d];
                        row[d] = acc[ar[i]] * uc->second[n - 1 - j];
                    }
                    rows.push_back(std::move(row));
                }
    }

    // Crystalline datum.  With M = Nu * w0 * B the big-cell factorization
    // at the block-tail representative,
    //   dNu = Nu * strict_upper(Nu^-1 dM B^-1 w0),
    // and dM is again a single entry, so every direction reads one column
    // of Nu^-1 and one reversed row of B^-1.  The torus normalization's
    // quotient rule is carried by hand on the trailing s x s block.
    {
        const Perm u0 = block_tail_rep(n, S0);
        const MatQ M = refined_flag(u0, L);
        const auto f = bruhat_w0_factor(M);
        const MatQ& Nu = f.Nu;
        const MatQ Nui = inverse(Nu);
        const MatQ Bi = inverse(f.B);
        const Perm u0i = u0.inverse();
        const int off = n - s;

        // C and z reproduce torus_normalize on the trailing block.
        MatQ C = Nu.submatrix(off, off, s, s);
        std::vector<Q> z(s, Q(1));
        for (int i = 0; i + 1 < s; ++i) {
            if (C.at(i, i + 1).is_zero()) throw BoundaryEntryZero(i + 1);
            z[i + 1] = z[i] * C.at(i, i + 1);
        }

        // G(p,q,r) = sum_{k=p}^{q-1} Nu(p,k) Nui(k,r), the Nu-side factor
        // of dNu(p,q) for a unit at row r of dM.
        std::vector<MatQ> G(static_cast<std::size_t>(s),
                            MatQ(s, n));
        for (int pi = 0; pi < s; ++pi)
            for (int qi = pi + 1; qi < s; ++qi)
                for (int r = 0; r < n; ++r) {
                    Q acc(0);
                    for (int k = off + pi; k < off + qi; ++k)
                        acc += Nu.at(off + pi, k) * Nui.at(k, r);
                    G[static_cast<std::size_t>(pi)].at(qi, r) = acc;
                }

        std::vector<MatQ> dn;
        dn.reserve(static_cast<std::size_t>(D));
        for (int d = 0; d < D; ++d) {
            auto [i, j] = dirs[d];
            const int r0 = u0i(i + 1) - 1;
            const int c0 = n - 1 - j;
            MatQ dC(s, s);
            for (int pi = 0; pi < s; ++pi)
                for (int qi = pi + 1; qi < s; ++qi)
                    dC.at(pi, qi) =
                        G[static_cast<std::size_t>(pi)].at(qi, r0) *
                        Bi.at(c0, n - 1 - (off + qi));
            std::vector<Q> dz(s, Q(0));
            for (int k = 0; k + 1 < s; ++k)
                dz[k + 1] = dz[k] * C.at(k, k + 1) + z[k] * dC.at(k, k + 1);
            MatQ dN(s, s);
            for (int pi = 0; pi < s; ++pi)
                for (int qi = pi + 1; qi < s; ++qi)
                    dN.at(pi, qi) =
                        dC.at(pi, qi) * z[pi] / z[qi] +
                        C.at(pi, qi) * (dz[pi] * z[qi] - z[pi] * dz[qi]) /
                            (z[qi] * z[qi]);
            dn.push_back(std::move(dN));
        }
        for (int pi = 0; pi < s; ++pi)
            for (int qi = pi + 1; qi < s; ++qi) {
                std::vector<Q> row(D, Q(0));
                for (int d = 0; d < D; ++d)
                    row[d] = dn[static_cast<std::size_t>(d)].at(pi, qi);
                rows.push_back(std::move(row));
            }
    }

    MatQ out(static_cast<int>(rows.size()), D);
    for (int i = 0; i < out.rows(); ++i)
        for (int d = 0; d < D; ++d) out.at(i, d) = rows[i][d];
    return out;
}

int jacobian_kernel_dim(const HodgeParameter& P) {
    MatQ Df = forward_differential(P);
    return Df.cols() - rank(Df);
}

}  // namespace hodge
