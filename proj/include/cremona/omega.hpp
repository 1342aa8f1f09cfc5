#pragma once

// Invariance of the rational volume form
//   Omega = d(1/x0) ^ dx1 ^ d(1/x2) = dx0 ^ dx1 ^ dx2 / (x0^2 x2^2)
// in the affine chart {x3 = 1}. Pulling back under an affine map y = m(x)
// multiplies the coefficient by det Dm, so each claim below is one exact
// polynomial identity after clearing denominators. The companion form
//   Omega' = dx0 ^ d(1/x1) ^ dx2 = -dx0 ^ dx1 ^ dx2 / x1^2
// is the common value of both intermediate pullbacks.

#include <array>
#include <vector>

#include "cremona/maps.hpp"
#include "cremona/multipoly.hpp"
#include "cremona/quadext.hpp"
#include "cremona/ratmap.hpp"

namespace cremona {

namespace omega_detail {

// determinant of the quotient-rule numerator matrix of the affine map
// (num_0/den, num_1/den, num_2/den): entries d_j(num_i) den - num_i d_j(den)
inline MultiPoly quotient_jacobian_numerator(const std::array<MultiPoly, 3>& num,
                                             const MultiPoly& den) {
    std::array<std::array<MultiPoly, 3>, 3> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                num[static_cast<std::size_t>(i)].derivative(j) * den -
                num[static_cast<std::size_t>(i)] * den.derivative(j);
    auto det2 = [&](int r1, int r2, int c1, int c2) {
        return m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] *
                   m[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)] -
               m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c2)] *
                   m[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c1)];
    };
    return m[0][0] * det2(1, 2, 1, 2) - m[0][1] * det2(1, 2, 0, 2) + m[0][2] * det2(1, 2, 0, 1);
}

}  // namespace omega_detail

struct OmegaReport {
    bool family_map_invariant = false;   // f* Omega = Omega
    bool shift_pullback = false;         // L* Omega = Omega'
    bool involution_pullback = false;    // J* Omega = Omega'
    bool identity_fixed = false;         // id* Omega = Omega
    bool all() const {
        return family_map_invariant && shift_pullback && involution_pullback && identity_fixed;
    }
};

inline OmegaReport omega_invariance(const FieldParams& P) {
    OmegaReport rep;
    const int n = 3;  // chart coordinates (x0, x1, x2), x3 = 1
    MultiPoly one = MultiPoly::constant(n, QuadExt(1));
    MultiPoly x0 = MultiPoly::variable(n, 0), x1 = MultiPoly::variable(n, 1),
              x2 = MultiPoly::variable(n, 2);

    using omega_detail::quotient_jacobian_numerator;

    {
        // f in the chart: num_i = F_i(x0, x1, x2, 1), den = F_3(x0, x1, x2, 1).
        // Invariance: det(N) x0^2 x2^2 = F0^2 F2^2 F3^2.
        RationalMap F = geom::family_map_lift(P);
        std::vector<MultiPoly> subst{x0, x1, x2, one};
        std::array<MultiPoly, 3> num{F.coord(0).substitute(subst), F.coord(1).substitute(subst),
                                     F.coord(2).substitute(subst)};
        MultiPoly den = F.coord(3).substitute(subst);
        MultiPoly lhs = quotient_jacobian_numerator(num, den) * (x0 * x0) * (x2 * x2);
        MultiPoly rhs = num[0] * num[0] * (num[2] * num[2]) * (den * den);
        rep.family_map_invariant = lhs == rhs;
    }

    {
        // L lands in the chart after normalizing by its last coordinate:
        // (1/(x2 + c), (x0 + a)/(x2 + c), x1/(x2 + c)).
        // Claim L* Omega = Omega', i.e. det(N_L) = -(x2 + c)^2.
        MultiPoly den = x2 + P.c * one;
        std::array<MultiPoly, 3> num{one, x0 + P.a * one, x1};
        MultiPoly det_n = quotient_jacobian_numerator(num, den);
        rep.shift_pullback = det_n == QuadExt(-1) * (den * den);
    }

    {
        // J in the chart: (x1 x2, x0 x2, x0 x1)/(x0 x1 x2).
        // Claim J* Omega = Omega', i.e. det(N_J) x0^2 x2^2 x1^2 = -(x0 x1 x2)^6,
        // equivalently det(N_J) = -x0^4 x1^4 x2^4.
        MultiPoly den = x0 * x1 * x2;
        std::array<MultiPoly, 3> num{x1 * x2, x0 * x2, x0 * x1};
        MultiPoly det_n = quotient_jacobian_numerator(num, den);
        MultiPoly q4 = (x0 * x1 * x2).pow(4);
        rep.involution_pullback = det_n == QuadExt(-1) * q4;
    }

    {
        std::array<MultiPoly, 3> num{x0, x1, x2};
        MultiPoly det_n = quotient_jacobian_numerator(num, one);
        rep.identity_fixed = det_n == one;
    }

    return rep;
}

}  // namespace cremona
