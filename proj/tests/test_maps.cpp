#include <catch2/catch_amalgamated.hpp>

#include "cremona/maps.hpp"
#include "cremona/ratmap.hpp"

using namespace cremona;
using namespace cremona::geom;

namespace {

ProjPoint pt4(QuadExt a, QuadExt b, QuadExt c, QuadExt d) {
    return ProjPoint(std::vector<QuadExt>{std::move(a), std::move(b), std::move(c), std::move(d)});
}

}  // namespace

TEST_CASE("the cubic lift is the composition of the shift and the involution") {
    auto P = quad_field_for_ell(2);
    RationalMap lj = compose(linear_shift(P), cremona_involution());
    CHECK(lj == family_map_lift(P));
    CHECK(family_map_lift(P).degree() == 3);
}

TEST_CASE("involution and shift invert cleanly") {
    auto P = quad_field_for_ell(2);
    auto hints = threefold_hints(P);
    RationalMap jj = reduce_map(compose(cremona_involution(), cremona_involution()), hints);
    CHECK(jj.is_identity());
    RationalMap ll = reduce_map(compose(linear_shift(P), linear_shift_inverse(P)), hints);
    CHECK(ll.is_identity());
    RationalMap ll2 = reduce_map(compose(linear_shift_inverse(P), linear_shift(P)), hints);
    CHECK(ll2.is_identity());
}

TEST_CASE("the inverse family map inverts the family map") {
    auto P = quad_field_for_ell(2);
    auto hints = threefold_hints(P);
    RationalMap f = family_map_lift(P);
    RationalMap fi = family_map_inverse(P);
    CHECK(reduce_map(compose(f, fi), hints).is_identity());
    CHECK(reduce_map(compose(fi, f), hints).is_identity());
}

TEST_CASE("pointwise evaluation of the family map") {
    auto P = quad_field_for_ell(2);
    RationalMap f = family_map_lift(P);
    auto img = evaluate(f, pt4(1, 1, 1, 1));
    REQUIRE(img.has_value());
    CHECK(*img == pt4(QuadExt(1), QuadExt(1) + P.a, QuadExt(1), QuadExt(1) + P.c));

    // vertices of the coordinate tetrahedron are indeterminate for the lift
    CHECK(!evaluate(cremona_involution(), pt4(1, 0, 0, 0)).has_value());
    CHECK(!evaluate(f, pt4(0, 0, 1, 0)).has_value());

    // a generic point of the face {x0 = 0} contracts to the opposite vertex
    auto img2 = evaluate(cremona_involution(), pt4(0, 1, 2, 3));
    REQUIRE(img2.has_value());
    CHECK(*img2 == pt4(1, 0, 0, 0));

    // an edge point is indeterminate
    CHECK(!evaluate(cremona_involution(), pt4(0, 0, 2, 3)).has_value());
}

TEST_CASE("composition degree drops 9 -> 3 after reduction") {
    auto P = quad_field_for_ell(2);
    auto hints = threefold_hints(P);
    RationalMap f = family_map_lift(P);
    RationalMap f2_raw = compose(f, f);
    CHECK(f2_raw.degree() == 9);
    RationalMap f2 = reduce_map(f2_raw, hints);
    CHECK(f2.degree() == 3);
}

TEST_CASE("reduction is idempotent and preserves values") {
    auto P = quad_field_for_ell(2);
    auto hints = threefold_hints(P);
    RationalMap raw = compose(family_map_lift(P), family_map_lift(P));
    RationalMap red = reduce_map(raw, hints);
    RationalMap red2 = reduce_map(red, hints);
    CHECK(red == red2);

    Rng rng(42);
    int compared = 0;
    while (compared < 50) {
        std::vector<QuadExt> c(4);
        for (auto& v : c) v = QuadExt(rng.rat(50));
        ProjPoint p(c);
        auto a = evaluate(raw, p);
        auto b = evaluate(red, p);
        if (!a || !b) continue;
        CHECK(*a == *b);
        ++compared;
    }
}

TEST_CASE("certified-coprime coordinates also pass the recursive gcd") {
    auto P = quad_field_for_ell(2);
    auto hints = threefold_hints(P);
    RationalMap f2 = reduce_map(compose(family_map_lift(P), family_map_lift(P)), hints);
    MultiPoly g;
    for (const auto& c : f2.coords()) {
        g = g.is_zero() ? c : multi_gcd(g, c);
        if (!g.is_zero() && g.total_degree() == 0) break;
    }
    CHECK(g.total_degree() == 0);
}

TEST_CASE("jacobians of the lifts") {
    auto P = quad_field_for_ell(2);
    RationalMap j = cremona_involution();
    MultiPoly jac_j = jacobian_det(j);

    MultiPoly x0 = MultiPoly::variable(4, 0), x1 = MultiPoly::variable(4, 1),
              x2 = MultiPoly::variable(4, 2), x3 = MultiPoly::variable(4, 3);
    MultiPoly quartic = x0 * x1 * x2 * x3;
    CHECK(jac_j == QuadExt(-3) * (quartic * quartic));

    // chain rule: the family lift picks up det(L) = -1
    MultiPoly jac_f = jacobian_det(family_map_lift(P));
    CHECK(jac_f == QuadExt(3) * (quartic * quartic));

    // factored form: monomial part (x0 x1 x2 x3)^2, scalar 3, no residual
    std::vector<MultiPoly> faces{x0, x1, x2, x3};
    auto fac = factor_against_hints(jac_f, faces);
    REQUIRE(fac.factors.size() == 4);
    for (const auto& [h, m] : fac.factors) CHECK(m == 2);
    CHECK(fac.residual.is_zero());
    CHECK(fac.scalar == QuadExt(3));

    // identity lift has constant jacobian
    CHECK(jacobian_det(RationalMap::identity(4)).total_degree() == 0);
}

TEST_CASE("surface map and its inverse") {
    for (long ell : {2L, 3L}) {
        CAPTURE(ell);
        auto P = quad_field_for_ell(ell);
        auto hints = surface_hints(P);
        RationalMap g = surface_map(P);
        CHECK(g.degree() == 4);
        RationalMap gi = surface_map_inverse(P);
        CHECK(reduce_map(compose(g, gi), hints).is_identity());
        CHECK(reduce_map(compose(gi, g), hints).is_identity());
    }
}

TEST_CASE("restriction demands an invariant plane") {
    // a coordinate swap does not fix {x0 = 0}
    std::vector<MultiPoly> sw{MultiPoly::variable(4, 1), MultiPoly::variable(4, 0),
                              MultiPoly::variable(4, 2), MultiPoly::variable(4, 3)};
    CHECK_THROWS_AS(restrict_to_plane(RationalMap(std::move(sw)), 0), std::invalid_argument);
    RationalMap id = RationalMap::identity(4);
    RationalMap rid = restrict_to_plane(id, 0);
    CHECK(rid.is_identity());
}
