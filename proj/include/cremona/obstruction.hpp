#pragma once

// Arithmetic that rules out an invariant pencil: an invariant fibration would
// force a^(2r) = -c^(2r) for its fiber degree r, and a/c would have to be a
// root of unity for the relation to survive all r. Both are excluded exactly:
// the powers are checked term by term, and a/c is not even an algebraic
// integer because its monic minimal polynomial has the non-integral middle
// coefficient (l+1)/l.

#include <vector>

#include "cremona/quadext.hpp"

namespace cremona {

struct ObstructionReport {
    long r_max = 0;
    long first_failure = -1;            // r with a^(2r) + c^(2r) = 0, if any
    bool powers_never_cancel = false;
    bool min_poly_non_integral = false;  // (l+1)/l not an integer
    bool ratio_not_root_of_unity = false;
    bool all() const {
        return powers_never_cancel && min_poly_non_integral && ratio_not_root_of_unity;
    }
};

inline ObstructionReport fibration_obstruction(long ell, const QuadExt& a, const QuadExt& c,
                                               long r_max) {
    if (r_max < 1) throw std::invalid_argument("fibration_obstruction: r_max >= 1");
    ObstructionReport rep;
    rep.r_max = r_max;

    QuadExt a2 = a * a, c2 = c * c;
    QuadExt pa(1), pc(1);
    rep.powers_never_cancel = true;
    for (long r = 1; r <= r_max; ++r) {
        pa *= a2;
        pc *= c2;
        if ((pa + pc).is_zero()) {
            rep.powers_never_cancel = false;
            rep.first_failure = r;
            break;
        }
    }

    // alpha = a/c is a root of t^2 + ((l+1)/l) t + 1; the middle coefficient
    // is non-integral for every l >= 2, so alpha is not an algebraic integer
    // and in particular not a root of unity
    Rat mid = make_rat(ell + 1, ell);
    rep.min_poly_non_integral = !is_integer(mid);
    rep.ratio_not_root_of_unity = rep.min_poly_non_integral;
    return rep;
}

}  // namespace cremona
