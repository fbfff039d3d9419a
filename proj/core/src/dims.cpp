#include "hodge/dims.hpp"

#include <string>

#include "hodge/errors.hpp"
#include "hodge/liealg.hpp"
#include "hodge/weyl.hpp"

namespace hodge {

namespace {

std::string num(long v) { return std::to_string(v); }

}  // namespace

int DimReport::at(const std::string& name) const {
    for (const auto& e : entries) {
        if (e.name == name) return e.value;
    }
    throw Error("unknown dimension name: " + name);
}

DimReport deformation_dims(const SemistableShape& shape, const Perm& u) {
    const int n = shape.n();
    const int s = shape.s();
    if (u.n() != n) throw Error("representative size does not match shape");
    const Roots I0 = shape.I0();
    const Roots S0 = shape.S0();
    int extra = 0;  // |I0 \ S0|
    for (int i : I0) {
        if (!S0.count(i)) ++extra;
    }
    const int rp = static_cast<int>(r_plus(u, I0).size());
    const int upper = n * (n + 1) / 2;
    const int strict = n * (n - 1) / 2;

    DimReport rep;
    rep.entries.push_back({"ext1_u", 1 + upper,
                           "1 + n(n+1)/2 = 1 + " + num(upper)});
    rep.entries.push_back({"hom_u", 2 * n - rp,
                           "2n - |R+_u| = " + num(2 * n) + " - " + num(rp)});
    rep.entries.push_back({"ext1_g", 1 + strict + extra,
                           "1 + n(n-1)/2 + |I0 \\ S0| = 1 + " + num(strict) +
                               " + " + num(extra)});
    rep.entries.push_back({"ext1_0", 1 + strict + extra - s,
                           "ext1_g - s = " + num(1 + strict + extra) + " - " +
                               num(s)});
    rep.entries.push_back({"im_nu", upper - extra,
                           "n(n+1)/2 - |I0 \\ S0| = " + num(upper) + " - " +
                               num(extra)});
    rep.entries.push_back({"hom_g_prime", s + 1, "s + 1 = " + num(s) + " + 1"});
    rep.entries.push_back({"hom_sm_1", s, "s = " + num(s)});
    return rep;
}

DimReport rep_side_dims(const SemistableShape& shape) {
    const int n = shape.n();
    if (n < 2) throw InvalidShape("rep_side_dims requires n >= 2");
    const int pow2 = 1 << n;

    DimReport rep;
    rep.entries.push_back({"lalg_ext", n + 1, "n + 1 = " + num(n) + " + 1"});
    rep.entries.push_back({"sharp_u_ext", 2 * n, "2n = 2 * " + num(n)});
    rep.entries.push_back({"sharp_ext", n + 1 + pow2 - 2,
                           "n + 1 + 2^n - 2 = " + num(n + 1) + " + " +
                               num(pow2 - 2)});
    return rep;
}

CrossCheckReport cross_check(const SemistableShape& shape, int trials,
                             Rng& rng) {
    const int n = shape.n();
    const Roots I0 = shape.I0();
    const Roots S0 = shape.S0();

    CrossCheckReport out;
    out.r_plus_id = static_cast<int>(r_plus(Perm(n), I0).size());
    if (out.r_plus_id != static_cast<int>(I0.size())) {
        throw IdentityViolated("pair count at the identity misses |I0|",
                               out.r_plus_id);
    }

    out.r_plus_block_rev = static_cast<int>(r_plus(w0_S0(n, S0), I0).size());
    if (out.r_plus_block_rev != static_cast<int>(S0.size())) {
        throw IdentityViolated("pair count at the block reversal misses |S0|",
                               out.r_plus_block_rev);
    }

    out.rep_count = static_cast<int>(enumerate_min_coset_reps(n, S0).size());
    long m = 1;
    for (int k = 2; k <= n; ++k) m *= k;
    for (int l : block_lengths(n, S0)) {
        for (int k = 2; k <= l; ++k) m /= k;
    }
    out.multinomial = m;
    if (out.rep_count != m) {
        throw IdentityViolated("coset count misses the multinomial",
                               out.rep_count);
    }

    // Tie the closed forms to the measured subspace sum: the borel pieces
    // reach im_nu + |I0 \ S0| minus the pairs lying inside linked blocks.
    int extra = 0;
    for (int i : I0) {
        if (!S0.count(i)) ++extra;
    }
    int in_block_pairs = 0;
    for (int l : block_lengths(n, S0)) in_block_pairs += l * (l - 1) / 2;
    const DimReport dd = deformation_dims(shape, Perm(n));
    const int target = dd.at("im_nu") + extra - in_block_pairs;
    for (int t = 0; t < trials; ++t) {
        const HodgeParameter p = random_non_critical(shape, rng);
        const FernReport fr = fern_check(p);
        out.borel_sum_dims.push_back(fr.borel_sum_dim);
        if (fr.borel_sum_dim != target) {
            throw IdentityViolated(
                "borel piece sum disagrees with the closed form",
                fr.borel_sum_dim);
        }
    }
    return out;
}

}  // namespace hodge
