#pragma once

// Reciprocal polynomials and the substitution s = t + 1/t. Unit-circle roots
// of a reciprocal polynomial correspond exactly to roots of its trace
// polynomial in [-2, 2]; this is the only path by which the library ever
// decides "|root| = 1".

#include <stdexcept>
#include <vector>

#include "cremona/numbers.hpp"
#include "cremona/sturm.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

template <class K>
bool is_reciprocal(const UniPoly<K>& p) {
    if (p.is_zero()) return false;
    UniPoly<K> r = p.reversed();
    return r == p || r == -p;
}

template <class K>
bool is_plus_reciprocal(const UniPoly<K>& p) {
    return !p.is_zero() && p.reversed() == p;
}

// For p reciprocal of even degree 2m with p = t^m q(t + 1/t), returns q.
// Uses the Chebyshev-like basis V_0 = 2, V_1 = s, V_{k+1} = s V_k - V_{k-1},
// for which t^k + t^{-k} = V_k(t + 1/t).
template <class K>
UniPoly<K> trace_poly(const UniPoly<K>& p) {
    long n = p.degree();
    if (n < 0 || n % 2 != 0 || !is_plus_reciprocal(p))
        throw std::invalid_argument("trace_poly: need a +reciprocal polynomial of even degree");
    long m = n / 2;
    UniPoly<K> s = UniPoly<K>::x();
    UniPoly<K> v_prev = UniPoly<K>::constant(K(2));  // V_0
    UniPoly<K> v_cur = s;                            // V_1
    UniPoly<K> q = UniPoly<K>::constant(p[static_cast<std::size_t>(m)]);
    for (long k = 1; k <= m; ++k) {
        q = q + p[static_cast<std::size_t>(m + k)] * v_cur;
        if (k < m) {
            UniPoly<K> v_next = s * v_cur - v_prev;
            v_prev = std::move(v_cur);
            v_cur = std::move(v_next);
        }
    }
    return q;
}

// Exact number of distinct roots of squarefree p on the unit circle.
// Route: roots at +-1 directly; the rest sit in gcd(p, reversed(p)), whose
// trace polynomial maps circle pairs into (-2, 2).
inline long unit_circle_count(const UniPoly<Rat>& p) {
    if (p.degree() <= 0) return 0;
    if (p[0] == 0) throw std::invalid_argument("unit_circle_count: needs p(0) != 0");
    long count = 0;
    UniPoly<Rat> r = poly_gcd(p, p.reversed());
    for (const Rat& root : {Rat(1), Rat(-1)}) {
        UniPoly<Rat> lin(std::vector<Rat>{-root, Rat(1)});
        if (divides_exactly(lin, r, &r)) ++count;
        // squarefree input: multiplicity one at most
    }
    if (r.degree() <= 0) return count;
    if (!is_plus_reciprocal(make_monic(r)))
        throw std::logic_error("unit_circle_count: self-inversive part not reciprocal");
    UniPoly<Rat> q = squarefree_part(trace_poly(make_monic(r)));
    if (q.degree() <= 0) return count;
    if (q.eval(Rat(-2)) == 0 || q.eval(Rat(2)) == 0)
        throw std::logic_error("unit_circle_count: trace root at +-2 after stripping +-1");
    count += 2 * sturm_count(q, Rat(-2), Rat(2));
    return count;
}

inline long unit_circle_count(const UniPoly<Int>& p) {
    return unit_circle_count(to_rational(p));
}

}  // namespace cremona
