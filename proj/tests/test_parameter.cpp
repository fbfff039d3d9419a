#include <doctest.h>

#include <hodge/errors.hpp>
#include <hodge/parameter.hpp>
#include <hodge/rng.hpp>
#include <hodge/shape.hpp>

using namespace hodge;

namespace {

// Two blocks (2,1) at p=2 with unlinked labels: S0 = I0 = {1}.
SemistableShape gl3_shape() {
    return SemistableShape::make(2, {2, 1}, {Q(1), Q(3)}, {2, 1, 0});
}

// L with entries (a, b) above the middle and boundary entry 1.
HodgeParameter gl3_param(const Q& a, const Q& b) {
    MatQ L = MatQ::identity(3);
    L.at(0, 1) = a;
    L.at(0, 2) = b;
    L.at(1, 2) = Q(1);
    return HodgeParameter(gl3_shape(), L);
}

SemistableShape cryst2() {
    return SemistableShape::make(2, {1, 1}, {Q(3), Q(5)}, {1, 0});
}

}  // namespace

TEST_SUITE("parameter") {

TEST_CASE("parameter construction validates the matrix") {
    MatQ bad = MatQ::identity(3);
    bad.at(1, 0) = Q(2);
    CHECK_THROWS_AS(HodgeParameter(gl3_shape(), bad), InvalidShape);
    CHECK_THROWS_AS(HodgeParameter(gl3_shape(), MatQ::identity(2)),
                    InvalidShape);
}

TEST_CASE("non-criticality for rank 2") {
    MatQ L = MatQ::identity(2);
    L.at(0, 1) = Q(1);
    CHECK(check_non_critical(HodgeParameter(cryst2(), L)).ok);

    MatQ L0 = MatQ::identity(2);
    auto rep = check_non_critical(HodgeParameter(cryst2(), L0));
    CHECK_FALSE(rep.ok);
    CHECK(rep.u == Perm::transposition(2, 1));
    CHECK(rep.k == 1);

    // Steinberg: only u = id, always fine.
    auto st = SemistableShape::make(2, {2}, {Q(1)}, {1, 0});
    CHECK(check_non_critical(HodgeParameter(st, L0)).ok);
    CHECK(check_non_critical(HodgeParameter(st, L)).ok);
}

TEST_CASE("non-criticality witness for the rank 3 anchor") {
    CHECK(check_non_critical(gl3_param(Q(2), Q(5))).ok);
    auto rep = check_non_critical(gl3_param(Q(3), Q(3)));
    CHECK_FALSE(rep.ok);
    // Fails at u = s2*s1 where the second corner minor is a - b.
    CHECK(rep.u == Perm::from_images({3, 1, 2}));
    CHECK(rep.k == 2);
}

TEST_CASE("torus action and normalization") {
    auto P = gl3_param(Q(2), Q(5));
    auto same = z_action({Q(1), Q(1)}, P);
    CHECK(same.L == P.L);

    auto moved = z_action({Q(3), Q(7)}, P);
    // Within-block entry untouched, cross-block entries scaled by 3/7.
    CHECK(moved.L.at(0, 1) == Q(2));
    CHECK(moved.L.at(0, 2) == Q(5) * Q(3, 7));
    CHECK(moved.L.at(1, 2) == Q(3, 7));

    CHECK(normalize(moved).L == P.L);  // P is already normalized
    CHECK(normalize(P).L == P.L);
    CHECK(equivalent(P, moved));
    CHECK_FALSE(equivalent(P, gl3_param(Q(2), Q(7))));

    CHECK_THROWS_AS(z_action({Q(0), Q(1)}, P), InvalidShape);

    MatQ L0 = MatQ::identity(3);
    L0.at(0, 1) = Q(4);
    try {
        normalize(HodgeParameter(gl3_shape(), L0));
        FAIL("expected BoundaryEntryZero");
    } catch (const BoundaryEntryZero& e) {
        CHECK(e.l == 1);  // boundary entry sits at (t_1, t_1 + 1)
    }

    // Crystalline rank 2: any nonzero entry normalizes to 1.
    MatQ L2 = MatQ::identity(2);
    L2.at(0, 1) = Q(-7, 3);
    CHECK(normalize(HodgeParameter(cryst2(), L2)).L.at(0, 1) == Q(1));
}

TEST_CASE("duality") {
    MatQ L = MatQ::identity(2);
    L.at(0, 1) = Q(7, 2);
    auto d = dual(HodgeParameter(cryst2(), L));
    CHECK(d.L.at(0, 1) == Q(-7, 2));

    auto dI = dual(HodgeParameter(cryst2(), MatQ::identity(2)));
    CHECK(dI.L.is_identity());

    Rng rng(9001);
    int done = 0;
    for (int n = 2; n <= 6 && done < 100; ++n)
        for (const auto& sh : all_shapes(n)) {
            if (done >= 100) break;
            auto P = random_non_critical(sh, rng);
            auto dd = dual(dual(P));
            CHECK(dd.shape == P.shape);
            CHECK(dd.L == P.L);
            CHECK(dual(P).L.is_unit_upper());
            ++done;
        }

    // Duality preserves non-criticality.
    Rng rng2(9002);
    for (int t = 0; t < 10; ++t) {
        auto P = random_non_critical(gl3_shape(), rng2);
        CHECK(check_non_critical(dual(P)).ok);
    }
}

TEST_CASE("principal windows") {
    auto P = gl3_param(Q(2), Q(5));
    CHECK(principal_window(P, 1, 2).L == P.L);
    auto w11 = principal_window(P, 1, 1);
    CHECK(w11.L.rows() == 2);
    CHECK(w11.L.at(0, 1) == Q(2));
    auto w22 = principal_window(P, 2, 2);
    CHECK(w22.L.is_identity());
    CHECK(w22.L.rows() == 1);
}

TEST_CASE("random parameters are normalized, non-critical, reproducible") {
    auto sh = shape_with_links(4, 2, {2, 2}, {});
    Rng a(42), b(42), c(43);
    auto Pa = random_non_critical(sh, a);
    auto Pb = random_non_critical(sh, b);
    auto Pc = random_non_critical(sh, c);
    CHECK(Pa.L == Pb.L);
    CHECK(Pa.L != Pc.L);
    CHECK(check_non_critical(Pa).ok);
    CHECK(normalize(Pa).L == Pa.L);
}

}  // TEST_SUITE
