#pragma once

// Exceptional/indeterminacy verification for the restricted plane map and the
// exceptional-divisor chart dynamics at [1:0:0].

#include <string>
#include <vector>

#include "cremona/degrees.hpp"
#include "cremona/maps.hpp"
#include "cremona/multipoly.hpp"
#include "cremona/quadext.hpp"
#include "cremona/ratmap.hpp"

namespace cremona {

struct RestrictionReport {
    bool plane_invariant = false;   // coordinate 0 of f^4 vanishes on {x0 = 0}
    bool matches_surface_map = false;  // restriction equals g up to one scalar
    long restricted_degree = -1;
    bool all() const { return plane_invariant && matches_surface_map && restricted_degree == 4; }
};

// reduce(f^4) restricted to the invariant plane {x0 = 0} must be the
// displayed quartic plane map, up to a global scalar
inline RestrictionReport surface_restriction_check(const FieldParams& P,
                                                   std::uint64_t seed = 1) {
    RestrictionReport rep;
    auto catalog = geom::pullback_closure(geom::threefold_hints(P), geom::family_map_lift(P), 3);
    auto iter = iterate_reduced(geom::family_map_lift(P), 4, catalog, seed);
    const RationalMap& f4 = iter.iterates.back();

    rep.plane_invariant = f4.coord(0).substitute_zero(0).is_zero();
    if (!rep.plane_invariant) return rep;

    std::vector<MultiPoly> c;
    for (std::size_t i = 1; i < f4.target_coords(); ++i)
        c.push_back(f4.coord(i).substitute_zero(0).drop_var(0));
    auto plane_catalog = geom::pullback_closure(geom::surface_hints(P), geom::surface_map(P), 2);
    RationalMap restricted = reduce_map(RationalMap(std::move(c)), plane_catalog, seed);
    rep.restricted_degree = restricted.degree();
    rep.matches_surface_map = restricted.proportional_to(geom::surface_map(P));
    return rep;
}

struct ExceptionalReport {
    bool line1_to_vertex1 = false;      // {x3 = 0} -> [1:0:0]
    bool line2_to_orbit_point = false;  // {c x2 + x3 = 0} -> [1 : 1/(a+c) : a/c]
    bool conic3_to_vertex3 = false;     // {Q = 0} -> [0:0:1]
    bool conic4_to_vertex2 = false;     // {Q + a x2 x3 = 0} -> [0:1:0]
    bool indeterminacy_set = false;     // lift vanishes exactly on the four listed points
    bool generic_point_clear = false;   // a sample off the curves maps off the targets
    bool jacobian_supported = false;    // Jac(g) is supported on the four curves
    bool all() const {
        return line1_to_vertex1 && line2_to_orbit_point && conic3_to_vertex3 &&
               conic4_to_vertex2 && indeterminacy_set && generic_point_clear &&
               jacobian_supported;
    }
};

inline ExceptionalReport g_exceptional_report(const FieldParams& P, std::uint64_t seed = 11) {
    ExceptionalReport rep;
    const QuadExt &a = P.a, &c = P.c;
    RationalMap g = geom::surface_map(P);
    Rng rng(seed);

    ProjPoint e1({QuadExt(1), QuadExt(0), QuadExt(0)});
    ProjPoint e2({QuadExt(0), QuadExt(1), QuadExt(0)});
    ProjPoint e3({QuadExt(0), QuadExt(0), QuadExt(1)});
    ProjPoint p3({QuadExt(1), QuadExt(1) / (a + c), a / c});
    ProjPoint p_last({c * (a + c), -a, a * (a + c)});

    auto all_map_to = [&](auto point_gen, const ProjPoint& target, int samples) {
        int seen = 0;
        while (seen < samples) {
            ProjPoint p = point_gen();
            auto img = evaluate(g, p);
            if (!img) continue;  // sampled an indeterminacy point; resample
            if (!(*img == target)) return false;
            ++seen;
        }
        return true;
    };

    rep.line1_to_vertex1 = all_map_to(
        [&] {
            return ProjPoint({QuadExt(rng.rat(50)), QuadExt(rng.rat(50)), QuadExt(0)});
        },
        e1, 5);

    rep.line2_to_orbit_point = all_map_to(
        [&] {
            QuadExt x1(rng.rat(50)), x2(rng.rat(50));
            return ProjPoint({x1, x2, -c * x2});
        },
        p3, 5);

    // rational section of the conic Q = 0: x3 = -c x1 x2/(x1 + c x2)
    rep.conic3_to_vertex3 = all_map_to(
        [&] {
            QuadExt x1(rng.rat(50)), x2(rng.rat(50));
            QuadExt den = x1 + c * x2;
            if (den.is_zero()) x1 += 1, den = x1 + c * x2;
            return ProjPoint({x1 * den, x2 * den, -c * x1 * x2});
        },
        e3, 5);

    rep.conic4_to_vertex2 = all_map_to(
        [&] {
            QuadExt x1(rng.rat(50)), x2(rng.rat(50));
            QuadExt den = x1 + (a + c) * x2;
            if (den.is_zero()) x1 += 1, den = x1 + (a + c) * x2;
            return ProjPoint({x1 * den, x2 * den, -c * x1 * x2});
        },
        e2, 5);

    // indeterminacy: all lift coordinates vanish at e1, e2, e3 and the last
    // orbit point before the vertex, and nowhere else along a sample sweep
    auto indeterminate_at = [&](const ProjPoint& p) { return !evaluate(g, p).has_value(); };
    rep.indeterminacy_set = indeterminate_at(e1) && indeterminate_at(e2) &&
                            indeterminate_at(e3) && indeterminate_at(p_last);

    bool clear = true;
    for (int i = 0; i < 5; ++i) {
        ProjPoint p({QuadExt(rng.rat(50)) + QuadExt(1), QuadExt(rng.rat(50)) + QuadExt(2),
                     QuadExt(rng.rat(50)) + QuadExt(3)});
        auto img = evaluate(g, p);
        if (!img) {
            clear = false;
            break;
        }
        clear = clear && !(*img == e1) && !(*img == e2) && !(*img == e3) && !(*img == p3);
    }
    rep.generic_point_clear = clear;

    // exceptional support: Jac(g) = scalar * x3^2 (c x2 + x3) Q (Q + a x2 x3)^2
    MultiPoly jac = jacobian_det(g);
    const int n = 3;
    MultiPoly y2 = MultiPoly::variable(n, 1), y3 = MultiPoly::variable(n, 2);
    std::vector<MultiPoly> curves{y3, c * y2 + y3, geom::surface_quadric(P),
                                  geom::surface_quadric(P) + a * (y2 * y3)};
    auto fac = factor_against_hints(jac, curves);
    bool all_curves_present = fac.factors.size() == 4;
    rep.jacobian_supported = all_curves_present && fac.residual.is_zero();
    return rep;
}

struct VertexChartReport {
    bool lift_formula = false;        // g(eps(u, v)) = u^2 * [B*C : u v B : u v A' C]
    bool translation = false;         // on u = 0 the second coordinate moves v by a + c
    bool unique_indeterminacy = false;  // only (0, -c) kills all three coordinates
    bool line1_lands = false;         // strict transform of {x3 = 0} -> (0, a + c)
    bool orbit_avoids = false;        // n a + (n+1) c != 0, n <= 1000 and structurally
    bool all() const {
        return lift_formula && translation && unique_indeterminacy && line1_lands &&
               orbit_avoids;
    }
};

// dynamics in the chart eps(u, v) = [1 : u : u v] at the blown-up vertex
inline VertexChartReport e1_chart_dynamics(const FieldParams& P, long orbit_cap = 1000) {
    VertexChartReport rep;
    const QuadExt &a = P.a, &c = P.c;
    RationalMap g = geom::surface_map(P);

    const int n = 2;
    MultiPoly one = MultiPoly::constant(n, QuadExt(1));
    MultiPoly u = MultiPoly::variable(n, 0), v = MultiPoly::variable(n, 1);
    std::vector<MultiPoly> subst{one, u, u * v};
    std::vector<MultiPoly> img;
    for (const auto& coord : g.coords()) img.push_back(coord.substitute(subst));

    // B = c + v + c u v, C = c + v + c u v + a u v, A' = v + a + c
    MultiPoly b = c * one + v + c * (u * v);
    MultiPoly cc = b + a * (u * v);
    MultiPoly ap = v + (a + c) * one;
    MultiPoly u2 = u * u;
    rep.lift_formula = img[0] == u2 * (b * cc) && img[1] == u2 * (u * v * b) &&
                       img[2] == u2 * (u * v * ap * cc);

    // chart coordinates of the image: u' = img1/img0 = u v / C and
    // v' = img2/img1 = A' C / B. On u = 0, C and B agree (their difference
    // carries a factor u), so v'(0, v) = A'(0, v) = v + (a + c).
    MultiPoly b0 = b.substitute_zero(0).drop_var(0);
    MultiPoly cc0 = cc.substitute_zero(0).drop_var(0);
    MultiPoly ap0 = ap.substitute_zero(0).drop_var(0);
    rep.translation =
        cc0 == b0 &&
        ap0 == MultiPoly::variable(1, 0) + (a + c) * MultiPoly::constant(1, QuadExt(1));

    // indeterminacy on u = 0: all three reduced coordinates vanish only at
    // v = -c, since the first reduced coordinate is B(0,v) C(0,v) = (c+v)^2
    MultiPoly first0 = (b * cc).substitute_zero(0).drop_var(0);
    MultiPoly vv = MultiPoly::variable(1, 0);
    MultiPoly linear = vv + c * MultiPoly::constant(1, QuadExt(1));
    rep.unique_indeterminacy = first0 == linear * linear;

    // strict transform of {x3 = 0} meets the divisor at v = 0 and maps to
    // (0, a+c): u' = u v / C vanishes at v = 0, and v' = A' C / B restricted
    // to v = 0 equals (a + c) because A'(u, 0) = a + c and C(u, 0) = B(u, 0)
    MultiPoly apcc_v0 = (ap * cc).substitute_zero(1).drop_var(1);
    MultiPoly b_v0 = b.substitute_zero(1).drop_var(1);
    rep.line1_lands = (u * v * b).substitute_zero(1).is_zero() && apcc_v0 == ((a + c) * b_v0);

    // forward orbit v_n = n (a + c) never hits -c: exactly n a + (n+1) c != 0,
    // guaranteed structurally because a/c is not real
    bool avoids = !(a / c).is_rational();
    for (long k = 1; k <= orbit_cap; ++k)
        avoids = avoids && !(Rat(k) * a + Rat(k + 1) * c).is_zero();
    rep.orbit_avoids = avoids;
    return rep;
}

}  // namespace cremona
