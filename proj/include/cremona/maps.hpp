#pragma once

// The specific birational maps of the construction, over the parameter field
// Q(sqrt(d)) fixed by quad_field_for_ell:
//
//   J       [x0:x1:x2:x3] -> [1/x0 : 1/x1 : 1/x2 : 1/x3]   (cubic lift)
//   L       [x0:x1:x2:x3] -> [x3 : x0 + a x3 : x1 : x2 + c x3]
//   L^-1    [x0:x1:x2:x3] -> [x1 - a x0 : x2 : x3 - c x0 : x0]
//   f = L o J, with the cubic lift
//   F = (x0 x1 x2, x1 x2 x3 + a x0 x1 x2, x0 x2 x3, x0 x1 x3 + c x0 x1 x2)
//   f^-1 = J o L^-1, reduced (never symbolic inversion)
//
// and on the invariant plane {x0 = 0}, coordinates [x1:x2:x3]:
//
//   g      [Q (Q + a x2 x3) : x2 x3 Q : x3 (x3 + (a+c) x2)(Q + a x2 x3)],
//          Q = c x1 x2 + x1 x3 + c x2 x3
//   g^-1   [x1 (x1 - (a+c) x2)(N - c x1 x2) : x1 x2 N : N (N - c x1 x2)],
//          N = x1 x3 - a x2 x3 - a x1 x2

#include <span>
#include <vector>

#include "cremona/multipoly.hpp"
#include "cremona/quadext.hpp"
#include "cremona/ratmap.hpp"

namespace cremona {

namespace geom {

inline MultiPoly var(int nvars, int i) { return MultiPoly::variable(nvars, i); }

inline RationalMap cremona_involution() {
    // lift [x1 x2 x3 : x0 x2 x3 : x0 x1 x3 : x0 x1 x2]
    const int n = 4;
    std::vector<MultiPoly> c;
    for (int i = 0; i < n; ++i) {
        MultiPoly t = MultiPoly::constant(n, QuadExt(1));
        for (int j = 0; j < n; ++j)
            if (j != i) t = t * var(n, j);
        c.push_back(t);
    }
    return RationalMap(std::move(c));
}

inline RationalMap linear_shift(const FieldParams& P) {
    const int n = 4;
    std::vector<MultiPoly> c;
    c.push_back(var(n, 3));
    c.push_back(var(n, 0) + MultiPoly::variable(n, 3, P.a));
    c.push_back(var(n, 1));
    c.push_back(var(n, 2) + MultiPoly::variable(n, 3, P.c));
    return RationalMap(std::move(c));
}

inline RationalMap linear_shift_inverse(const FieldParams& P) {
    const int n = 4;
    std::vector<MultiPoly> c;
    c.push_back(var(n, 1) - MultiPoly::variable(n, 0, P.a));
    c.push_back(var(n, 2));
    c.push_back(var(n, 3) - MultiPoly::variable(n, 0, P.c));
    c.push_back(var(n, 0));
    return RationalMap(std::move(c));
}

// the cubic lift of f = L o J, written out
inline RationalMap family_map_lift(const FieldParams& P) {
    const int n = 4;
    MultiPoly x0 = var(n, 0), x1 = var(n, 1), x2 = var(n, 2), x3 = var(n, 3);
    std::vector<MultiPoly> c;
    c.push_back(x0 * x1 * x2);
    c.push_back(x1 * x2 * x3 + P.a * (x0 * x1 * x2));
    c.push_back(x0 * x2 * x3);
    c.push_back(x0 * x1 * x3 + P.c * (x0 * x1 * x2));
    return RationalMap(std::move(c));
}

// Linear forms that can divide out of compositions with f or its inverse:
// the coordinate planes, the factors of the lift coordinates, the faces of
// the shifted tetrahedron, and the blow-up image planes.
inline std::vector<MultiPoly> threefold_hints(const FieldParams& P) {
    const int n = 4;
    MultiPoly x0 = var(n, 0), x1 = var(n, 1), x2 = var(n, 2), x3 = var(n, 3);
    std::vector<MultiPoly> h;
    h.push_back(x0);
    h.push_back(x1);
    h.push_back(x2);
    h.push_back(x3);
    h.push_back(x3 + P.a * x0);  // factor of the lift's second coordinate
    h.push_back(x3 + P.c * x2);  // factor of the lift's fourth coordinate
    h.push_back(x0 + P.a * x3);  // faces of the shifted tetrahedron
    h.push_back(x2 + P.c * x3);
    h.push_back(x1 - P.a * x0);  // blow-up images of the vertices
    h.push_back(x3 - P.c * x0);
    return h;
}

inline RationalMap family_map_inverse(const FieldParams& P, std::uint64_t seed = 1) {
    RationalMap ji = compose(cremona_involution(), linear_shift_inverse(P));
    return reduce_map(ji, threefold_hints(P), seed);
}

// quadric Q = c x1 x2 + x1 x3 + c x2 x3  (plane coordinates [x1:x2:x3])
inline MultiPoly surface_quadric(const FieldParams& P) {
    const int n = 3;
    MultiPoly y1 = var(n, 0), y2 = var(n, 1), y3 = var(n, 2);
    return P.c * (y1 * y2) + y1 * y3 + P.c * (y2 * y3);
}

// N = x1 x3 - a x2 x3 - a x1 x2
inline MultiPoly surface_quadric_inv(const FieldParams& P) {
    const int n = 3;
    MultiPoly y1 = var(n, 0), y2 = var(n, 1), y3 = var(n, 2);
    return y1 * y3 - P.a * (y2 * y3) - P.a * (y1 * y2);
}

inline RationalMap surface_map(const FieldParams& P) {
    const int n = 3;
    MultiPoly y1 = var(n, 0), y2 = var(n, 1), y3 = var(n, 2);
    MultiPoly q = surface_quadric(P);
    MultiPoly q_shift = q + P.a * (y2 * y3);
    std::vector<MultiPoly> c;
    c.push_back(q * q_shift);
    c.push_back(y2 * y3 * q);
    c.push_back(y3 * (y3 + (P.a + P.c) * y2) * q_shift);
    return RationalMap(std::move(c));
}

inline RationalMap surface_map_inverse(const FieldParams& P) {
    const int n = 3;
    MultiPoly y1 = var(n, 0), y2 = var(n, 1), y3 = var(n, 2);
    MultiPoly nn = surface_quadric_inv(P);
    MultiPoly n_shift = nn - P.c * (y1 * y2);
    std::vector<MultiPoly> c;
    c.push_back(y1 * (y1 - (P.a + P.c) * y2) * n_shift);
    c.push_back(y1 * y2 * nn);
    c.push_back(nn * n_shift);
    return RationalMap(std::move(c));
}

// Curve equations that appear as common factors when iterating g: the
// exceptional curves of g and of its inverse, and their first images.
inline std::vector<MultiPoly> surface_hints(const FieldParams& P) {
    const int n = 3;
    MultiPoly y1 = var(n, 0), y2 = var(n, 1), y3 = var(n, 2);
    std::vector<MultiPoly> h;
    h.push_back(y1);
    h.push_back(y2);
    h.push_back(y3);                                 // L1
    h.push_back(P.c * y2 + y3);                      // L2
    h.push_back(surface_quadric(P));                 // L3
    h.push_back(surface_quadric(P) + P.a * (y2 * y3));  // L4
    h.push_back(surface_quadric_inv(P));             // exceptional for g^-1
    h.push_back(surface_quadric_inv(P) - P.c * (y1 * y2));
    h.push_back(y1 - (P.a + P.c) * y2);
    h.push_back(y3 + (P.a + P.c) * y2);
    h.push_back(y1 - P.a * y2);                      // image of the F_l chain
    h.push_back((P.a + P.c) * (y1 * y2) - y1 * y3 + P.a * (y2 * y3));  // image of E2
    return h;
}

// Puts a new irreducible factor of `p` (anything the catalog cannot already
// divide out) into `hints`; used to grow the catalog along iterates.
inline void extend_hints(std::vector<MultiPoly>& hints, const MultiPoly& p, int degree_cap = 8) {
    MultiPoly residual = factor_against_hints(p, hints).residual;
    if (!residual.is_zero() && residual.total_degree() >= 1 &&
        residual.total_degree() <= degree_cap)
        hints.push_back(residual.normalized());
}

// Closes a curve catalog under pullback by `map`, `depth` times: the common
// factors of k-fold compositions are exactly the equations of curves whose
// forward orbit reaches the indeterminacy set, and those are the iterated
// strict preimages of the starting catalog. Pulling back an irreducible
// equation and stripping the known factors leaves the strict preimage, which
// is irreducible again, so the catalog stays a list of genuine curves.
inline std::vector<MultiPoly> pullback_closure(std::vector<MultiPoly> catalog,
                                               const RationalMap& map, int depth) {
    std::size_t scanned = 0;
    for (int round = 0; round < depth; ++round) {
        std::size_t end = catalog.size();
        for (std::size_t i = scanned; i < end; ++i) {
            MultiPoly pulled = catalog[i].substitute(map.coords());
            MultiPoly residual = factor_against_hints(pulled, catalog).residual;
            if (!residual.is_zero() && residual.total_degree() >= 1)
                catalog.push_back(residual.normalized());
        }
        scanned = 0;  // rescan: earlier entries may now strip further
        if (catalog.size() == end) break;
    }
    return catalog;
}

}  // namespace geom

}  // namespace cremona
