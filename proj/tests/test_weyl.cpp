#include <doctest.h>

#include <hodge/perm.hpp>
#include <hodge/rng.hpp>
#include <hodge/weyl.hpp>

#include <algorithm>

using namespace hodge;

namespace {

// All subsets of {1..n-1}.
std::vector<Roots> all_root_subsets(int n) {
    std::vector<Roots> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        Roots s;
        for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1))) s.insert(i);
        out.push_back(s);
    }
    return out;
}

long multinomial(int n, const std::vector<int>& parts) {
    long result = 1;
    for (int k = 2; k <= n; ++k) result *= k;
    for (int p : parts)
        for (int k = 2; k <= p; ++k) result /= k;
    return result;
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("composition acts as u(v(x)) and matrices multiply the same way") {
    Perm s1 = Perm::transposition(3, 1);
    Perm s2 = Perm::transposition(3, 2);
    Perm s2s1 = s2 * s1;
    CHECK(s2s1.images() == std::vector<int>{3, 1, 2});
    CHECK(s2s1.inverse().images() == std::vector<int>{2, 3, 1});
    CHECK((s2s1 * s2s1.inverse()).is_identity());
    CHECK(s2s1.matrix<Q>() == s2.matrix<Q>() * s1.matrix<Q>());

    Rng rng(101);
    for (int t = 0; t < 20; ++t) {
        int n = static_cast<int>(rng.below(2, 6));
        auto perms = all_perms(n);
        const Perm& u = perms[rng.next() % perms.size()];
        const Perm& v = perms[rng.next() % perms.size()];
        CHECK((u * v).matrix<Q>() == u.matrix<Q>() * v.matrix<Q>());
        CHECK(u.inverse().matrix<Q>() == u.matrix<Q>().transpose());
    }
}

TEST_CASE("lengths and descents") {
    CHECK(Perm(4).length() == 0);
    CHECK(Perm::longest(4).length() == 6);
    CHECK(right_descents(Perm::longest(5)) == Roots{1, 2, 3, 4});
    CHECK(right_descents(Perm(5)).empty());
    CHECK(right_descents(Perm::from_images({1, 3, 2})) == Roots{2});
}

TEST_CASE("minimal coset representatives for n=3, S0={1}") {
    auto reps = enumerate_min_coset_reps(3, {1});
    REQUIRE(reps.size() == 3);
    CHECK(reps[0].images() == std::vector<int>{1, 2, 3});
    CHECK(reps[1].images() == std::vector<int>{1, 3, 2});
    CHECK(reps[2].images() == std::vector<int>{3, 1, 2});
    // Those are 1, s2, s2*s1.
    Perm s1 = Perm::transposition(3, 1), s2 = Perm::transposition(3, 2);
    CHECK(reps[1] == s2);
    CHECK(reps[2] == s2 * s1);
}

TEST_CASE("representative counts match the multinomial") {
    for (int n = 1; n <= 7; ++n)
        for (const Roots& S0 : all_root_subsets(n)) {
            auto reps = enumerate_min_coset_reps(n, S0);
            CHECK(static_cast<long>(reps.size()) ==
                  multinomial(n, block_lengths(n, S0)));
        }
}

TEST_CASE("each representative is the unique shortest in its coset") {
    for (int n = 2; n <= 5; ++n)
        for (const Roots& S0 : all_root_subsets(n)) {
            auto levi = levi_subgroup(n, S0);
            for (const Perm& u : enumerate_min_coset_reps(n, S0))
                for (const Perm& v : levi) {
                    if (v.is_identity()) continue;
                    CHECK((v * u).length() > u.length());
                }
        }
}

TEST_CASE("carried simple roots for the GL3 representatives") {
    Roots S0{1};
    Perm s1 = Perm::transposition(3, 1), s2 = Perm::transposition(3, 2);
    CHECK(S0_of(Perm(3), S0) == Roots{1});
    CHECK(S0_of(s2, S0) == Roots{});
    CHECK(S0_of(s2 * s1, S0) == Roots{2});
}

TEST_CASE("carried roots stay inside blocks of the same split") {
    for (int n = 2; n <= 6; ++n)
        for (const Roots& S0 : all_root_subsets(n))
            for (const Perm& u : enumerate_min_coset_reps(n, S0)) {
                Roots carried = S0_of(u, S0);
                // u maps the carried pair onto a linked pair inside S0.
                for (int i : carried) {
                    CHECK(S0.count(u(i)) == 1);
                    CHECK(u(i + 1) == u(i) + 1);
                }
                CHECK(carried.size() <= S0.size());
            }
    // At the identity everything is carried.
    for (int n = 2; n <= 6; ++n)
        for (const Roots& S0 : all_root_subsets(n))
            CHECK(S0_of(Perm(n), S0) == S0);
}

TEST_CASE("r_plus counts at the two distinguished representatives") {
    for (int n = 2; n <= 6; ++n)
        for (const Roots& I0 : all_root_subsets(n)) {
            CHECK(r_plus(Perm(n), I0).size() == I0.size());
            // With I0 = S0, the block-reversing representative carries
            // exactly |S0| pairs.
            CHECK(r_plus(w0_S0(n, I0), I0).size() == I0.size());
        }
}

TEST_CASE("block inflation satisfies its defining relation") {
    for (int n = 2; n <= 6; ++n)
        for (const Roots& S0 : all_root_subsets(n)) {
            auto blocks = blocks_of(n, S0);
            int s = static_cast<int>(blocks.size());
            std::vector<int> t(s + 1, 0);
            for (int r = 1; r <= s; ++r)
                t[r] = t[r - 1] + blocks[r - 1].second - blocks[r - 1].first + 1;
            for (const Perm& w : all_perms(s)) {
                Perm jw = j_S0(w, n, S0);
                Perm wi = w.inverse();
                // Slot ends after reordering the blocks by w.
                std::vector<int> tw(s + 1, 0);
                for (int m = 1; m <= s; ++m)
                    tw[m] = tw[m - 1] + (t[wi(m)] - t[wi(m) - 1]);
                for (int r = 1; r <= s; ++r)
                    for (int l = 1; l <= t[r] - t[r - 1]; ++l)
                        CHECK(jw(t[r - 1] + l) == tw[w(r) - 1] + l);
                // jw is increasing on every block, so its inverse is a
                // minimal coset representative.
                CHECK(is_min_coset_rep(jw.inverse(), S0));
            }
        }
}

TEST_CASE("longest Levi element reverses blocks") {
    Roots S0{1, 3};  // blocks {1,2}, {3}... no: 3 links 3,4
    Perm w = longest_levi(4, S0);
    CHECK(w.images() == std::vector<int>{2, 1, 4, 3});
    CHECK(longest_levi(4, Roots{}).is_identity());
    CHECK(longest_levi(4, Roots{1, 2, 3}) == Perm::longest(4));
    CHECK(w0_S0(3, Roots{1}).images() == std::vector<int>{2, 3, 1});
}

TEST_CASE("block tail representative") {
    CHECK(block_tail_rep(3, Roots{1}).is_identity());
    CHECK(block_tail_rep(3, Roots{2}).images() == std::vector<int>{2, 1, 3});
    for (int n = 2; n <= 6; ++n)
        for (const Roots& S0 : all_root_subsets(n)) {
            Perm u0 = block_tail_rep(n, S0);
            auto blocks = blocks_of(n, S0);
            int s = static_cast<int>(blocks.size());
            for (int i = 1; i <= s; ++i)
                CHECK(u0(n - s + i) == blocks[i - 1].second);
            CHECK(is_min_coset_rep(u0, S0));
        }
}

}  // TEST_SUITE
