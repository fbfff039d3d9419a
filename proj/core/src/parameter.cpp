#include "hodge/parameter.hpp"

#include <cstdint>
#include <unordered_map>

#include "hodge/errors.hpp"

namespace hodge {

HodgeParameter::HodgeParameter(SemistableShape sh, MatQ l)
    : shape(std::move(sh)), L(std::move(l)) {
    if (L.rows() != shape.n() || !L.is_unit_upper())
        throw InvalidShape("parameter matrix must be unit upper-triangular "
                           "of size n");
}

NonCriticalReport check_non_critical(const HodgeParameter& P) {
    // The k-th corner minor of u^{-1} L w0 is det of the rows
    // {u(n-k+1..n)} against the last k columns of L, so it depends on u
    // only through that row set; distinct representatives share minors.
    NonCriticalReport rep;
    const int n = P.shape.n();
    const MatQ& L = P.L;
    std::unordered_map<std::uint64_t, bool> unit;
    for (const Perm& u : enumerate_min_coset_reps(n, P.shape.S0())) {
        std::uint64_t mask = 0;
        for (int k = 1; k <= n; ++k) {
            mask |= std::uint64_t{1} << (u(n - k + 1) - 1);
            auto [it, fresh] = unit.try_emplace(mask, false);
            if (fresh) {
                MatQ sub(k, k);
                int r = 0;
                for (int i = 0; i < n; ++i) {
                    if (!(mask >> i & 1u)) continue;
                    for (int j = 0; j < k; ++j)
                        sub.at(r, j) = L.at(i, n - k + j);
                    ++r;
                }
                it->second = !det(sub).is_zero();
            }
            if (!it->second) {
                rep.ok = false;
                rep.u = u;
                rep.k = k;
                return rep;
            }
        }
    }
    return rep;
}

HodgeParameter z_action(const std::vector<Q>& z, const HodgeParameter& P) {
    const int n = P.shape.n();
    if (static_cast<int>(z.size()) != P.shape.s())
        throw InvalidShape("need one scalar per block");
    for (const Q& zi : z)
        if (zi.is_zero()) throw InvalidShape("torus scalars must be nonzero");
    MatQ L = P.L;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            L.at(i - 1, j - 1) =
                P.L.at(i - 1, j - 1) * z[P.shape.block_of(i) - 1] /
                z[P.shape.block_of(j) - 1];
    return HodgeParameter(P.shape, L);
}

HodgeParameter normalize(const HodgeParameter& P) {
    const int s = P.shape.s();
    std::vector<Q> z(s, Q(1));
    for (int l = 1; l < s; ++l) {
        int t = P.shape.t(l);
        Q boundary = P.L.at(t - 1, t);
        if (boundary.is_zero()) throw BoundaryEntryZero(l);
        z[l] = z[l - 1] * boundary;
    }
    return z_action(z, P);
}

bool equivalent(const HodgeParameter& a, const HodgeParameter& b) {
    if (!(a.shape == b.shape)) return false;
    return normalize(a).L == normalize(b).L;
}

HodgeParameter dual(const HodgeParameter& P) {
    return HodgeParameter(P.shape.dual(),
                          inverse(P.L).transpose().conj_w0());
}

HodgeParameter principal_window(const HodgeParameter& P, int r, int q) {
    int a = P.shape.t(r - 1), b = P.shape.t(q);
    return HodgeParameter(P.shape.window(r, q),
                          P.L.submatrix(a, a, b - a, b - a));
}

HodgeParameter random_non_critical(const SemistableShape& shape, Rng& rng,
                                   long bound) {
    const int n = shape.n();
    for (;;) {
        MatQ L = MatQ::identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                L.at(i, j) = Q(rng.below(-bound, bound));
        HodgeParameter P(shape, L);
        bool boundary_ok = true;
        for (int l = 1; l < shape.s(); ++l)
            if (P.L.at(shape.t(l) - 1, shape.t(l)).is_zero())
                boundary_ok = false;
        if (!boundary_ok) continue;
        if (!check_non_critical(P).ok) continue;
        return normalize(P);
    }
}

}  // namespace hodge
