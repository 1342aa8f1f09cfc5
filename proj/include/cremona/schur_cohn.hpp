#pragma once

// Exact count of polynomial roots inside the open unit disk (with
// multiplicity) by the Schur-Cohn reduction. Monic integer polynomials with
// unit constant term degenerate at the first step (|a_0| = |a_n|), so a
// degenerate chain is retried after a disk-preserving rational Moebius
// substitution z -> (z + t)/(1 + t z), |t| < 1. Roots on the circle are
// detected beforehand through the trace-polynomial route and reported to the
// caller, never guessed numerically.

#include <optional>
#include <stdexcept>
#include <vector>

#include "cremona/numbers.hpp"
#include "cremona/tracepoly.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

namespace detail {

// (1 + t w)^n p((w + t)/(1 + t w))
inline UniPoly<Rat> disk_moebius(const UniPoly<Rat>& p, const Rat& t) {
    long n = p.degree();
    UniPoly<Rat> num(std::vector<Rat>{t, Rat(1)});    // w + t
    UniPoly<Rat> den(std::vector<Rat>{Rat(1), t});    // 1 + t w
    // precompute powers
    std::vector<UniPoly<Rat>> num_pow(static_cast<std::size_t>(n) + 1),
        den_pow(static_cast<std::size_t>(n) + 1);
    num_pow[0] = den_pow[0] = UniPoly<Rat>::constant(Rat(1));
    for (long i = 1; i <= n; ++i) {
        num_pow[static_cast<std::size_t>(i)] = num_pow[static_cast<std::size_t>(i - 1)] * num;
        den_pow[static_cast<std::size_t>(i)] = den_pow[static_cast<std::size_t>(i - 1)] * den;
    }
    UniPoly<Rat> q;
    for (long i = 0; i <= n; ++i) {
        const Rat& a = p[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        q = q + a * (num_pow[static_cast<std::size_t>(i)] *
                     den_pow[static_cast<std::size_t>(n - i)]);
    }
    return q;
}

// One regular Schur-Cohn pass. Returns the inside count, or nullopt if the
// chain degenerates (gamma = 0 or degree drop != 1).
inline std::optional<long> schur_cohn_chain(const UniPoly<Rat>& p) {
    long n = p.degree();
    UniPoly<Rat> f = p;
    long negatives = 0;
    int product_sign = 1;
    for (long k = 1; k <= n; ++k) {
        const Rat a0 = f[0];
        const Rat an = f.leading();
        UniPoly<Rat> next = a0 * f - an * f.reversed();
        if (next.degree() != f.degree() - 1) return std::nullopt;
        const Rat gamma = next[0];
        if (gamma == 0) return std::nullopt;
        product_sign *= sign(gamma);
        if (product_sign < 0) ++negatives;
        f = std::move(next);
    }
    return negatives;
}

}  // namespace detail

// Count of roots of p with |z| < 1, counted with multiplicity.
// Preconditions: p(0) != 0. Returns nullopt when p has a root on the unit
// circle (detected exactly); callers then route through the trace-polynomial
// path instead.
//
// The self-inversive part r = gcd(p, reversed p) is split off first: its
// roots come in pairs {z, 1/z}, so with no circle roots exactly half of them
// lie inside. The reduction chain then runs on the pair-free cofactor, where
// a Moebius restart always finds a regular chain.
inline std::optional<long> schur_cohn_inside(const UniPoly<Rat>& p) {
    if (p.degree() < 0) throw std::invalid_argument("schur_cohn_inside: zero polynomial");
    if (p[0] == 0) throw std::invalid_argument("schur_cohn_inside: needs p(0) != 0");
    if (p.degree() == 0) return 0;
    if (unit_circle_count(squarefree_part(p)) > 0) return std::nullopt;

    UniPoly<Rat> r = poly_gcd(p, p.reversed());
    UniPoly<Rat> s = make_monic(p);
    long paired_inside = 0;
    if (r.degree() > 0) {
        paired_inside = r.degree() / 2;  // no circle roots, so pairs split evenly
        auto [q, rem] = divrem(s, r);
        if (!rem.is_zero()) throw std::logic_error("schur_cohn_inside: inexact split");
        s = make_monic(q);
    }
    if (s.degree() == 0) return paired_inside;

    static const long kNums[] = {0, 1, -1, 2, -2, 3, -3, 1, -1, 5, -5, 4, -4, 7,
                                 -7, 2, -2, 5, -5, 8, -8, 9, -9, 11, -11};
    static const long kDens[] = {1, 2, 3, 5, 5, 7, 7, 4, 4, 8, 8, 9, 9, 12,
                                 12, 9, 9, 13, 13, 13, 13, 16, 16, 17, 17};
    for (std::size_t i = 0; i < sizeof(kNums) / sizeof(kNums[0]); ++i) {
        Rat t = make_rat(kNums[i], kDens[i]);
        UniPoly<Rat> q = (t == 0) ? s : detail::disk_moebius(s, t);
        if (q.degree() != s.degree() || q[0] == 0) continue;  // t hit a root or pole
        if (auto count = detail::schur_cohn_chain(q)) return paired_inside + *count;
    }
    throw std::logic_error("schur_cohn_inside: no regular chain found; unexpected degeneracy");
}

inline std::optional<long> schur_cohn_inside(const UniPoly<Int>& p) {
    return schur_cohn_inside(to_rational(p));
}

}  // namespace cremona
