#include <catch2/catch_amalgamated.hpp>

#include "cremona/surface.hpp"

using namespace cremona;

TEST_CASE("exceptional curves and indeterminacy points of the plane map") {
    for (long ell : {2L, 3L}) {
        CAPTURE(ell);
        auto rep = g_exceptional_report(quad_field_for_ell(ell));
        CHECK(rep.line1_to_vertex1);
        CHECK(rep.line2_to_orbit_point);
        CHECK(rep.conic3_to_vertex3);
        CHECK(rep.conic4_to_vertex2);
        CHECK(rep.indeterminacy_set);
        CHECK(rep.generic_point_clear);
        CHECK(rep.jacobian_supported);
    }
}

TEST_CASE("exceptional-divisor chart dynamics at the first vertex") {
    for (long ell = 2; ell <= 6; ++ell) {
        CAPTURE(ell);
        auto rep = e1_chart_dynamics(quad_field_for_ell(ell));
        CHECK(rep.lift_formula);
        CHECK(rep.translation);
        CHECK(rep.unique_indeterminacy);
        CHECK(rep.line1_lands);
        CHECK(rep.orbit_avoids);
    }
}

TEST_CASE("fourth iterate restricts to the displayed quartic") {
    for (long ell : {2L, 3L}) {
        CAPTURE(ell);
        auto rep = surface_restriction_check(quad_field_for_ell(ell));
        CHECK(rep.plane_invariant);
        CHECK(rep.restricted_degree == 4);
        CHECK(rep.matches_surface_map);
    }
}
