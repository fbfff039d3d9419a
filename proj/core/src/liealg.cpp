#include "hodge/liealg.hpp"

#include <cassert>
#include <cstddef>
#include <map>
#include <utility>

#include "hodge/errors.hpp"
#include "hodge/perm.hpp"

namespace hodge {

namespace {

// Unit matrix with a single 1 at (i, j), 1-based.
MatQ unit_mat(int n, int i, int j) {
    MatQ e(n, n);
    e.at(i - 1, j - 1) = Q(1);
    return e;
}

MatQ reshape(const MatQ& rows, int r, int n) {
    MatQ m(n, n);
    for (int c = 0; c < n * n; ++c) m.at(c / n, c % n) = rows.at(r, c);
    return m;
}

}  // namespace

MatSubspace MatSubspace::from_generators(int n, const std::vector<MatQ>& gens) {
    MatSubspace out(n);
    if (gens.empty()) return out;
    MatQ raw(static_cast<int>(gens.size()), n * n);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        assert(gens[k].rows() == n && gens[k].cols() == n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                raw.at(static_cast<int>(k), i * n + j) = gens[k].at(i, j);
    }
    std::vector<int> pivots;
    MatQ red = rref(std::move(raw), &pivots);
    const int d = static_cast<int>(pivots.size());
    MatQ basis(d, n * n);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < n * n; ++c) basis.at(r, c) = red.at(r, c);
    out.basis_ = std::move(basis);
    return out;
}

std::vector<MatQ> MatSubspace::basis() const {
    std::vector<MatQ> out;
    out.reserve(dim());
    for (int r = 0; r < dim(); ++r) out.push_back(reshape(basis_, r, n_));
    return out;
}

bool MatSubspace::contains(const MatQ& m) const {
    assert(m.rows() == n_ && m.cols() == n_);
    std::vector<Q> v(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) v[i * n_ + j] = m.at(i, j);
    // Reduced echelon basis: one subtraction per row clears its pivot.
    for (int r = 0; r < dim(); ++r) {
        int p = 0;
        while (basis_.at(r, p).is_zero()) ++p;
        if (v[p].is_zero()) continue;
        const Q f = v[p];
        for (int c = p; c < n_ * n_; ++c) v[c] -= f * basis_.at(r, c);
    }
    for (const Q& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool MatSubspace::contains(const MatSubspace& w) const {
    assert(w.n_ == n_);
    for (int r = 0; r < w.dim(); ++r)
        if (!contains(reshape(w.basis_, r, n_))) return false;
    return true;
}

MatSubspace meet(const MatSubspace& v, const MatSubspace& w) {
    assert(v.n() == w.n());
    const int n = v.n(), m = n * n;
    const int dv = v.dim(), dw = w.dim();
    if (dv == 0 || dw == 0) return MatSubspace(n);
    // Zassenhaus: rows [x | x] for x in V and [y | 0] for y in W.  Echelon
    // rows with pivot in the right half have zero left half and their right
    // halves span the intersection.
    MatQ z(dv + dw, 2 * m);
    for (int r = 0; r < dv; ++r)
        for (int c = 0; c < m; ++c) {
            z.at(r, c) = v.coords().at(r, c);
            z.at(r, m + c) = v.coords().at(r, c);
        }
    for (int r = 0; r < dw; ++r)
        for (int c = 0; c < m; ++c) z.at(dv + r, c) = w.coords().at(r, c);
    std::vector<int> pivots;
    MatQ red = rref(std::move(z), &pivots);
    std::vector<MatQ> gens;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] < m) continue;
        MatQ g(n, n);
        for (int c = 0; c < m; ++c)
            g.at(c / n, c % n) = red.at(static_cast<int>(r), m + c);
        gens.push_back(std::move(g));
    }
    return MatSubspace::from_generators(n, gens);
}

MatSubspace join(const MatSubspace& v, const MatSubspace& w) {
    assert(v.n() == w.n());
    std::vector<MatQ> gens = v.basis();
    for (MatQ& b : w.basis()) gens.push_back(std::move(b));
    return MatSubspace::from_generators(v.n(), gens);
}

MatSubspace ad(const MatQ& g, const MatSubspace& v) {
    const MatQ gi = inverse(g);  // throws SingularMatrix
    std::vector<MatQ> gens;
    gens.reserve(v.dim());
    for (const MatQ& x : v.basis()) gens.push_back(g * x * gi);
    return MatSubspace::from_generators(v.n(), gens);
}

StdSubalgebras std_subalgebras(int n, const Roots& I) {
    const auto blocks = blocks_of(n, I);
    std::vector<int> blk(n + 1, 0);  // 1-based element -> block index
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int i = blocks[b].first; i <= blocks[b].second; ++i)
            blk[i] = static_cast<int>(b);

    std::vector<MatQ> up, bup, bdiag, bstrict, scal;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i <= j) up.push_back(unit_mat(n, i, j));
            if (blk[i] <= blk[j]) bup.push_back(unit_mat(n, i, j));
            if (blk[i] == blk[j]) bdiag.push_back(unit_mat(n, i, j));
            if (blk[i] < blk[j]) bstrict.push_back(unit_mat(n, i, j));
        }
    for (const auto& [a, b] : blocks) {
        MatQ e(n, n);
        for (int i = a; i <= b; ++i) e.at(i - 1, i - 1) = Q(1);
        scal.push_back(std::move(e));
    }
    std::vector<MatQ> rad = scal;
    for (const MatQ& e : bstrict) rad.push_back(e);

    StdSubalgebras out;
    out.borel = MatSubspace::from_generators(n, up);
    out.parabolic = MatSubspace::from_generators(n, bup);
    out.levi = MatSubspace::from_generators(n, bdiag);
    out.nilradical = MatSubspace::from_generators(n, bstrict);
    out.center_levi = MatSubspace::from_generators(n, scal);
    out.tau = MatSubspace::from_generators(n, rad);
    return out;
}

MatSubspace borel_plus_roots(int n, const Roots& roots) {
    std::vector<MatQ> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) gens.push_back(unit_mat(n, i, j));
    for (int i : roots) gens.push_back(unit_mat(n, i + 1, i));
    return MatSubspace::from_generators(n, gens);
}

namespace {

// Shared per-parameter data for the summand sums at g = L * w0.
struct SummandContext {
    int n = 0;
    Roots S0;
    std::vector<Perm> reps;
    std::vector<Roots> rep_roots;  // linked roots carried by each rep
    std::vector<MatQ> rep_mats;
    MatQ g;
    MatSubspace borel;
    MatSubspace adg_borel;
};

SummandContext make_context(const HodgeParameter& P) {
    SummandContext ctx;
    ctx.n = P.shape.n();
    ctx.S0 = P.shape.S0();
    const Roots& S0 = ctx.S0;
    ctx.reps = enumerate_min_coset_reps(ctx.n, S0);
    ctx.rep_roots.reserve(ctx.reps.size());
    ctx.rep_mats.reserve(ctx.reps.size());
    for (const Perm& u : ctx.reps) {
        ctx.rep_roots.push_back(S0_of(u, S0));
        ctx.rep_mats.push_back(u.matrix<Q>());
    }
    ctx.g = P.L * Perm::longest(ctx.n).matrix<Q>();
    ctx.borel = std_subalgebras(ctx.n, Roots{}).borel;
    ctx.adg_borel = ad(ctx.g, ctx.borel);
    return ctx;
}

// Join of meet(Ad_u(pick(k)), Ad_g(borel)) over the reps; per-piece
// dimensions land in *dims when given.
template <class F>
MatSubspace sum_over_reps(const SummandContext& ctx, F pick,
                          std::vector<int>* dims = nullptr) {
    MatSubspace acc(ctx.n);
    for (std::size_t k = 0; k < ctx.reps.size(); ++k) {
        MatSubspace piece = meet(ad(ctx.rep_mats[k], pick(k)), ctx.adg_borel);
        if (dims) dims->push_back(piece.dim());
        acc = join(acc, piece);
    }
    return acc;
}

// One std_subalgebras evaluation per distinct root set.
class AlgebraCache {
public:
    explicit AlgebraCache(int n) : n_(n) {}
    const StdSubalgebras& of(const Roots& I) {
        auto it = memo_.find(I);
        if (it == memo_.end())
            it = memo_.emplace(I, std_subalgebras(n_, I)).first;
        return it->second;
    }

private:
    int n_;
    std::map<Roots, StdSubalgebras> memo_;
};

}  // namespace

FernReport fern_check(const HodgeParameter& P) {
    SummandContext ctx = make_context(P);
    AlgebraCache cache(ctx.n);
    FernReport rep;
    rep.n = ctx.n;
    rep.fil_dim = ctx.adg_borel.dim();
    MatSubspace psum = sum_over_reps(
        ctx, [&](std::size_t k) { return cache.of(ctx.rep_roots[k]).parabolic; },
        &rep.parabolic_piece_dims);
    MatSubspace bsum = sum_over_reps(
        ctx, [&](std::size_t) { return ctx.borel; }, &rep.borel_piece_dims);
    rep.parabolic_sum_dim = psum.dim();
    rep.borel_sum_dim = bsum.dim();
    if (psum != ctx.adg_borel)
        throw IdentityViolated("parabolic pieces span a proper subspace",
                               rep.parabolic_sum_dim);
    int in_block_pairs = 0;
    for (int l : block_lengths(ctx.n, ctx.S0)) in_block_pairs += l * (l - 1) / 2;
    if (rep.borel_sum_dim != ctx.n * (ctx.n + 1) / 2 - in_block_pairs)
        throw IdentityViolated("borel pieces miss their full dimension",
                               rep.borel_sum_dim);
    return rep;
}

HomFilDims hom_fil_chain(const HodgeParameter& P) {
    SummandContext ctx = make_context(P);
    AlgebraCache cache(ctx.n);
    MatSubspace flat = sum_over_reps(
        ctx, [&](std::size_t k) { return cache.of(ctx.rep_roots[k]).tau; });
    MatSubspace sharp =
        sum_over_reps(ctx, [&](std::size_t) { return ctx.borel; });
    std::map<Roots, MatSubspace> hulls;
    MatSubspace dia = sum_over_reps(ctx, [&](std::size_t k) {
        auto it = hulls.find(ctx.rep_roots[k]);
        if (it == hulls.end())
            it = hulls
                     .emplace(ctx.rep_roots[k],
                              borel_plus_roots(ctx.n, ctx.rep_roots[k]))
                     .first;
        return it->second;
    });
    if (!sharp.contains(flat))
        throw IdentityViolated("tau sum escapes the borel sum", flat.dim());
    if (!dia.contains(sharp))
        throw IdentityViolated("borel sum escapes the extended sum",
                               sharp.dim());
    if (!ctx.adg_borel.contains(dia))
        throw IdentityViolated("extended sum escapes Ad_g(borel)", dia.dim());
    return HomFilDims{flat.dim(), sharp.dim(), dia.dim(),
                      ctx.adg_borel.dim()};
}

MatSubspace diamond_sum(const HodgeParameter& P) {
    SummandContext ctx = make_context(P);
    std::map<Roots, MatSubspace> hulls;
    return sum_over_reps(ctx, [&](std::size_t k) {
        auto it = hulls.find(ctx.rep_roots[k]);
        if (it == hulls.end())
            it = hulls
                     .emplace(ctx.rep_roots[k],
                              borel_plus_roots(ctx.n, ctx.rep_roots[k]))
                     .first;
        return it->second;
    });
}

MatSubspace diamond_sum_alt(const HodgeParameter& P) {
    SummandContext ctx = make_context(P);
    AlgebraCache cache(ctx.n);
    MatSubspace acc(ctx.n);
    for (std::size_t k = 0; k < ctx.reps.size(); ++k)
        for (int i : ctx.rep_roots[k]) {
            const MatSubspace& li = cache.of(Roots{i}).levi;
            acc = join(acc, meet(ad(ctx.rep_mats[k], li), ctx.adg_borel));
        }
    return acc;
}

int kernel_g_circ(const HodgeParameter& P) {
    SummandContext ctx = make_context(P);
    AlgebraCache cache(ctx.n);
    std::vector<int> dims;
    MatSubspace span = sum_over_reps(
        ctx, [&](std::size_t k) { return cache.of(ctx.rep_roots[k]).tau; },
        &dims);
    int total = 0;
    for (int d : dims) total += d;
    return total - span.dim();
}

std::vector<MatSubspace> levi_data(const HodgeParameter& P) {
    SummandContext ctx = make_context(P);
    AlgebraCache cache(ctx.n);
    std::vector<MatSubspace> out;
    out.reserve(ctx.reps.size());
    for (std::size_t k = 0; k < ctx.reps.size(); ++k) {
        const MatQ m = ctx.rep_mats[k].transpose() * ctx.g;  // u^{-1} g
        out.push_back(
            meet(cache.of(ctx.rep_roots[k]).levi, ad(m, ctx.borel)));
    }
    return out;
}

}  // namespace hodge
