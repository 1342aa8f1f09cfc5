#pragma once

// Symbolic verification of the blow-up chart formulas the orbit tracker is
// built on. Everything here is an exact polynomial identity in chart
// coordinates; the common factor u^2 that comes out of the vertex charts is
// the multiplicity-2 coefficient in the hyperplane pullback.

#include <vector>

#include "cremona/maps.hpp"
#include "cremona/multipoly.hpp"
#include "cremona/orbit.hpp"
#include "cremona/quadext.hpp"

namespace cremona {

struct ChartReport {
    // f from the affine chart {x0 = 1}, as the tuple
    // [x1 x2 : x1 x2 (x3 + a) : x2 x3 : x1 (x3 + c x2)]
    bool affine_chart = false;
    // F(u, u v, u w, 1) = u^2 [u v w : v w + a u v w : w : v + c u v w]
    bool vertex3_chart = false;
    // at u = 0 the image is [0 : v w : w : v]
    bool vertex3_boundary = false;
    // F(u, 1, u v, u w) = u^2 [v : v w + a v : u v w : w + c v]
    bool vertex1_chart = false;
    // beta2(t) lands at (0, (a^2 + c t)/a, c/a)
    bool beta2_image = false;
    // [0 : (c t + a^2)/a : 1 : (c t + a^2)/c] lands at (0, a/c, t + (a^2+c^2)/c)
    bool beta0_image = false;
    bool all() const {
        return affine_chart && vertex3_chart && vertex3_boundary && vertex1_chart &&
               beta2_image && beta0_image;
    }
};

inline ChartReport verify_chart_transitions(const FieldParams& P) {
    ChartReport rep;
    const QuadExt &a = P.a, &c = P.c;
    RationalMap F = geom::family_map_lift(P);

    {
        // substitute x0 = 1 symbolically: work in 4 vars with x0 -> 1
        const int n = 3;
        MultiPoly one = MultiPoly::constant(n, QuadExt(1));
        MultiPoly y1 = MultiPoly::variable(n, 0), y2 = MultiPoly::variable(n, 1),
                  y3 = MultiPoly::variable(n, 2);
        std::vector<MultiPoly> subst{one, y1, y2, y3};
        std::vector<MultiPoly> img;
        for (const auto& coord : F.coords()) img.push_back(coord.substitute(subst));
        rep.affine_chart = img[0] == y1 * y2 && img[1] == y1 * y2 * (y3 + a * one) &&
                           img[2] == y2 * y3 && img[3] == y1 * (y3 + c * y2);
    }

    {
        // chart at the vertex [0:0:0:1]: pi(u, v, w) = [u : u v : u w : 1]
        const int n = 3;
        MultiPoly one = MultiPoly::constant(n, QuadExt(1));
        MultiPoly u = MultiPoly::variable(n, 0), v = MultiPoly::variable(n, 1),
                  w = MultiPoly::variable(n, 2);
        std::vector<MultiPoly> subst{u, u * v, u * w, one};
        std::vector<MultiPoly> img;
        for (const auto& coord : F.coords()) img.push_back(coord.substitute(subst));
        MultiPoly u2 = u * u;
        std::vector<MultiPoly> expect{u * v * w, v * w + a * (u * v * w), w,
                                      v + c * (u * v * w)};
        rep.vertex3_chart = true;
        for (int i = 0; i < 4; ++i)
            rep.vertex3_chart =
                rep.vertex3_chart && img[static_cast<std::size_t>(i)] ==
                                         u2 * expect[static_cast<std::size_t>(i)];
        // boundary u = 0
        bool boundary = true;
        std::vector<MultiPoly> at0{MultiPoly(n), v * w, w, v};
        for (int i = 0; i < 4; ++i)
            boundary = boundary && expect[static_cast<std::size_t>(i)].substitute_zero(0) ==
                                       at0[static_cast<std::size_t>(i)];
        rep.vertex3_boundary = boundary;
    }

    {
        // chart at the vertex [0:1:0:0]: pi(u, v, w) = [u : 1 : u v : u w]
        const int n = 3;
        MultiPoly one = MultiPoly::constant(n, QuadExt(1));
        MultiPoly u = MultiPoly::variable(n, 0), v = MultiPoly::variable(n, 1),
                  w = MultiPoly::variable(n, 2);
        std::vector<MultiPoly> subst{u, one, u * v, u * w};
        std::vector<MultiPoly> img;
        for (const auto& coord : F.coords()) img.push_back(coord.substitute(subst));
        MultiPoly u2 = u * u;
        std::vector<MultiPoly> expect{v, v * w + a * v, u * v * w, w + c * v};
        rep.vertex1_chart = true;
        for (int i = 0; i < 4; ++i)
            rep.vertex1_chart =
                rep.vertex1_chart && img[static_cast<std::size_t>(i)] ==
                                         u2 * expect[static_cast<std::size_t>(i)];
    }

    {
        // beta2(t) -> chart coordinates (u', v', w') = (x2/(x3 + c x2), x3 + a,
        // x3/x1) evaluated along [1 : t : 0 : c t/a]; exact in t
        auto con = [](const QuadExt& q) { return RatFunc::constant(q); };
        RatFunc t = RatFunc::variable();
        RatFunc x1 = t, x2 = con(QuadExt(0)), x3 = con(c / a) * t;
        RatFunc up = x2 / (x3 + con(c) * x2);
        RatFunc vp = x3 + con(a);
        RatFunc wp = x3 / x1;
        rep.beta2_image = up == con(QuadExt(0)) &&
                          vp == (con(a * a) + con(c) * t) / con(a) && wp == con(c / a);
    }

    {
        // the image curve [0 : (c t + a^2)/a : 1 : (c t + a^2)/c] in the chart
        // at [0:1:0:0]: (u, v, w) = (x0/(x3 + a x0), x3/x1, (x3 + c x2)/x2)
        auto con = [](const QuadExt& q) { return RatFunc::constant(q); };
        RatFunc t = RatFunc::variable();
        RatFunc x0 = con(QuadExt(0));
        RatFunc x1 = (con(c) * t + con(a * a)) / con(a);
        RatFunc x2 = con(QuadExt(1));
        RatFunc x3 = (con(c) * t + con(a * a)) / con(c);
        RatFunc u = x0 / (x3 + con(a) * x0);
        RatFunc v = x3 / x1;
        RatFunc w = (x3 + con(c) * x2) / x2;
        rep.beta0_image = u == con(QuadExt(0)) && v == con(a / c) &&
                          w == t + con((a * a + c * c) / c);
    }

    return rep;
}

}  // namespace cremona
