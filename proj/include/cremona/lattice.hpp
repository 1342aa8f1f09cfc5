#pragma once

// Integer Picard-lattice actions for the blown-up threefold (dimension
// 4l + 5, basis H, E1^, E2, E3^, P_1..P_{4l+1}) and for the blown-up
// invariant plane (dimension l + 4, basis L, E1, E2, E3, F_1..F_l with
// intersection form diag(+1, -1, ..., -1)).
//
// The matrices are transcriptions of the displayed pullback actions; their
// validation is the inverse-pair identity, the characteristic-polynomial
// closed forms, and the symbolic degree cross-check, which would all fail if
// the transcription were wrong.

#include <stdexcept>
#include <string>
#include <vector>

#include "cremona/intmatrix.hpp"
#include "cremona/numbers.hpp"
#include "cremona/quadext.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

enum class BasisKind { ThreefoldPicard, SurfacePicard };

struct Basis {
    BasisKind kind;
    long ell;

    std::size_t dim() const {
        return kind == BasisKind::ThreefoldPicard ? static_cast<std::size_t>(4 * ell + 5)
                                                  : static_cast<std::size_t>(ell + 4);
    }

    std::string label(std::size_t i) const {
        static const char* head3[] = {"H", "E1^", "E2", "E3^"};
        static const char* head2[] = {"L", "E1", "E2", "E3"};
        if (i < 4) return kind == BasisKind::ThreefoldPicard ? head3[i] : head2[i];
        return (kind == BasisKind::ThreefoldPicard ? "P" : "F") + std::to_string(i - 3);
    }
};

struct DivisorClass {
    Basis basis;
    std::vector<Int> coeffs;
};

struct LatticeAction {
    Basis basis;
    IntMatrix matrix;  // column j = image of basis element j
};

namespace lattice_detail {

inline void set_column(IntMatrix& m, std::size_t col,
                       std::initializer_list<std::pair<std::size_t, long>> entries) {
    for (const auto& [row, v] : entries) m(row, col) += v;
}

}  // namespace lattice_detail

// forward pullback: H -> 3H - 2E1^ - 2E2 - 2E3^ - 2P_{4l+1}, P_j -> P_{j-1}, ...
inline LatticeAction build_fx_star(long ell) {
    if (ell < 2) throw std::invalid_argument("build_fx_star: ell >= 2");
    Basis basis{BasisKind::ThreefoldPicard, ell};
    std::size_t n = basis.dim();
    auto P = [](long j) { return static_cast<std::size_t>(3 + j); };
    IntMatrix m(n, n);
    using lattice_detail::set_column;
    set_column(m, 0, {{0, 3}, {1, -2}, {2, -2}, {3, -2}, {P(4 * ell + 1), -2}});
    set_column(m, 1, {{0, 1}, {1, -1}, {2, -1}, {3, -1}});
    set_column(m, 2, {{0, 1}, {2, -1}, {3, -1}, {P(4 * ell + 1), -1}});
    set_column(m, 3, {{0, 1}, {1, -1}, {3, -1}, {P(4 * ell + 1), -1}});
    for (long j = 2; j <= 4 * ell + 1; ++j) m(P(j - 1), P(j)) = 1;
    set_column(m, P(1), {{0, 1}, {1, -1}, {2, -1}, {P(4 * ell + 1), -1}});
    return LatticeAction{basis, std::move(m)};
}

inline LatticeAction build_fx_inv_star(long ell) {
    if (ell < 2) throw std::invalid_argument("build_fx_inv_star: ell >= 2");
    Basis basis{BasisKind::ThreefoldPicard, ell};
    std::size_t n = basis.dim();
    auto P = [](long j) { return static_cast<std::size_t>(3 + j); };
    IntMatrix m(n, n);
    using lattice_detail::set_column;
    set_column(m, 0, {{0, 3}, {1, -2}, {2, -2}, {3, -2}, {P(1), -2}});
    set_column(m, 1, {{0, 1}, {1, -1}, {3, -1}, {P(1), -1}});
    set_column(m, 2, {{0, 1}, {1, -1}, {2, -1}, {P(1), -1}});
    set_column(m, 3, {{0, 1}, {1, -1}, {2, -1}, {3, -1}});
    for (long j = 1; j <= 4 * ell; ++j) m(P(j + 1), P(j)) = 1;
    set_column(m, P(4 * ell + 1), {{0, 1}, {2, -1}, {3, -1}, {P(1), -1}});
    return LatticeAction{basis, std::move(m)};
}

// chi_l(x) = x^(4l+1) (x^4 - x^2 - x - 1) + x^4 + x^3 + x^2 - 1
inline UniPoly<Int> chi_ell(long ell) {
    if (ell < 2) throw std::invalid_argument("chi_ell: ell >= 2");
    std::size_t n = static_cast<std::size_t>(4 * ell + 5);
    std::vector<Int> c(n + 1, Int(0));
    auto add = [&](long k, long v) { c[static_cast<std::size_t>(k)] += v; };
    add(4 * ell + 5, 1);
    add(4 * ell + 3, -1);
    add(4 * ell + 2, -1);
    add(4 * ell + 1, -1);
    add(4, 1);
    add(3, 1);
    add(2, 1);
    add(0, -1);
    return UniPoly<Int>(std::move(c));
}

// the class 2H - E1^ - E2 - E3^ - sum P_j
inline DivisorClass gamma_class(long ell) {
    Basis basis{BasisKind::ThreefoldPicard, ell};
    std::vector<Int> c(basis.dim(), Int(-1));
    c[0] = 2;
    return DivisorClass{basis, std::move(c)};
}

struct CharpolyReport {
    bool forward_matches = false;
    bool inverse_matches = false;
    bool quartic_divides = false;      // (x^4 - 1) | chi_l
    bool one_is_simple_root = false;   // chi_l(1) = 0, chi_l'(1) != 0
    bool cubic_factor_identity = false;  // chi_l / (x+1) = x^(4l+1) T(x) - x^3 T(1/x)
    UniPoly<Int> chi;
    bool all() const {
        return forward_matches && inverse_matches && quartic_divides && one_is_simple_root &&
               cubic_factor_identity;
    }
};

inline CharpolyReport verify_charpoly(long ell) {
    CharpolyReport rep;
    rep.chi = chi_ell(ell);
    rep.forward_matches = charpoly(build_fx_star(ell).matrix) == rep.chi;
    rep.inverse_matches = charpoly(build_fx_inv_star(ell).matrix) == rep.chi;

    UniPoly<Rat> chi_q = to_rational(rep.chi);
    UniPoly<Rat> x4m1(std::vector<Rat>{Rat(-1), Rat(0), Rat(0), Rat(0), Rat(1)});
    auto [q, r] = divrem(chi_q, x4m1);
    rep.quartic_divides = r.is_zero();
    rep.one_is_simple_root =
        chi_q.eval(Rat(1)) == 0 && chi_q.derivative().eval(Rat(1)) != 0;

    UniPoly<Rat> xp1(std::vector<Rat>{Rat(1), Rat(1)});
    auto [half, r2] = divrem(chi_q, xp1);
    // T(x) = x^3 - x^2 - 1 and x^3 T(1/x) = 1 - x - x^3
    UniPoly<Rat> t(std::vector<Rat>{Rat(-1), Rat(0), Rat(-1), Rat(1)});
    UniPoly<Rat> t_rev(std::vector<Rat>{Rat(1), Rat(-1), Rat(0), Rat(-1)});
    UniPoly<Rat> rhs = UniPoly<Rat>::monomial(Rat(1), static_cast<std::size_t>(4 * ell + 1)) * t
                       - t_rev;
    rep.cubic_factor_identity = r2.is_zero() && half == rhs;
    return rep;
}

struct GammaReport {
    bool fixed = false;
    bool eigenspace_rank_one = false;
    bool random_nonmultiple_moved = false;
    bool all() const { return fixed && eigenspace_rank_one && random_nonmultiple_moved; }
};

inline GammaReport gamma_fixed(long ell, std::uint64_t seed = 7) {
    GammaReport rep;
    LatticeAction fx = build_fx_star(ell);
    DivisorClass g = gamma_class(ell);
    rep.fixed = fx.matrix.apply(g.coeffs) == g.coeffs;

    std::size_t n = fx.basis.dim();
    IntMatrix shifted = fx.matrix - IntMatrix::identity(n);
    rep.eigenspace_rank_one = shifted.rank() == n - 1;

    Rng rng(seed);
    std::vector<Int> v(n);
    for (auto& x : v) x = rng.range(-5, 5);
    // make sure v is not a multiple of gamma
    if (v[0] == -2 * v[1]) v[0] += 1;
    bool moved = fx.matrix.apply(v) != v;
    rep.random_nonmultiple_moved = moved;
    return rep;
}

// surface action: L -> 4L - 2E1 - 2E2 - E3 - F_l, F_j -> F_{j-1}, ...
inline LatticeAction build_gw_star(long ell) {
    if (ell < 2) throw std::invalid_argument("build_gw_star: ell >= 2");
    Basis basis{BasisKind::SurfacePicard, ell};
    std::size_t n = basis.dim();
    auto F = [](long j) { return static_cast<std::size_t>(3 + j); };
    IntMatrix m(n, n);
    using lattice_detail::set_column;
    set_column(m, 0, {{0, 4}, {1, -2}, {2, -2}, {3, -1}, {F(ell), -1}});
    set_column(m, 1, {{0, 1}, {2, -1}});
    set_column(m, 2, {{0, 2}, {1, -1}, {2, -1}, {3, -1}});
    set_column(m, 3, {{0, 2}, {1, -1}, {2, -1}, {F(ell), -1}});
    for (long j = 2; j <= ell; ++j) m(F(j - 1), F(j)) = 1;
    set_column(m, F(1), {{0, 1}, {1, -1}});
    return LatticeAction{basis, std::move(m)};
}

// diag(+1, -1, ..., -1) pairing on the surface basis
inline Int surface_pairing(const DivisorClass& a, const DivisorClass& b) {
    if (a.basis.kind != BasisKind::SurfacePicard || b.basis.kind != BasisKind::SurfacePicard ||
        a.basis.ell != b.basis.ell)
        throw std::invalid_argument("surface_pairing: basis mismatch");
    Int acc = a.coeffs[0] * b.coeffs[0];
    for (std::size_t i = 1; i < a.coeffs.size(); ++i) acc -= a.coeffs[i] * b.coeffs[i];
    return acc;
}

// [L] - [E1] - [E3]
inline DivisorClass sigma02_class(long ell) {
    Basis basis{BasisKind::SurfacePicard, ell};
    std::vector<Int> c(basis.dim(), Int(0));
    c[0] = 1;
    c[1] = -1;
    c[3] = -1;
    return DivisorClass{basis, std::move(c)};
}

// [L] - [E2] - sum_j [F_j]
inline DivisorClass beta0_class(long ell) {
    Basis basis{BasisKind::SurfacePicard, ell};
    std::vector<Int> c(basis.dim(), Int(0));
    c[0] = 1;
    c[2] = -1;
    for (std::size_t i = 4; i < c.size(); ++i) c[i] = -1;
    return DivisorClass{basis, std::move(c)};
}

struct SurfaceLatticeReport {
    bool charpoly_matches = false;  // x^2 (x-1)^2 (x^l - x^(l-1) - ... - 1)
    bool sigma_fixed = false;
    bool beta_fixed = false;
    bool self_intersections = false;  // S.S = -1, S.b = 1, b.b = -l
    bool pairing_identities = false;  // C.S = m2 - m1, C.b = m1 - l m2
    bool all() const {
        return charpoly_matches && sigma_fixed && beta_fixed && self_intersections &&
               pairing_identities;
    }
};

inline SurfaceLatticeReport verify_gw(long ell) {
    SurfaceLatticeReport rep;
    LatticeAction gw = build_gw_star(ell);

    UniPoly<Int> x2(std::vector<Int>{Int(0), Int(0), Int(1)});
    UniPoly<Int> xm1sq(std::vector<Int>{Int(1), Int(-2), Int(1)});
    rep.charpoly_matches = charpoly(gw.matrix) == x2 * xm1sq * pisot_family_poly(ell);

    DivisorClass s = sigma02_class(ell), b = beta0_class(ell);
    rep.sigma_fixed = gw.matrix.apply(s.coeffs) == s.coeffs;
    rep.beta_fixed = gw.matrix.apply(b.coeffs) == b.coeffs;

    rep.self_intersections = surface_pairing(s, s) == -1 && surface_pairing(s, b) == 1 &&
                             surface_pairing(b, b) == -ell;

    rep.pairing_identities = true;
    for (long m1 = -3; m1 <= 3; ++m1)
        for (long m2 = -3; m2 <= 3; ++m2) {
            DivisorClass c{s.basis, {}};
            c.coeffs.resize(s.basis.dim());
            for (std::size_t i = 0; i < c.coeffs.size(); ++i)
                c.coeffs[i] = m1 * s.coeffs[i] + m2 * b.coeffs[i];
            rep.pairing_identities = rep.pairing_identities &&
                                     surface_pairing(c, s) == Int(m2 - m1) &&
                                     surface_pairing(c, b) == Int(m1 - ell * m2);
        }
    return rep;
}

struct EigenvectorReport {
    QuadExt self_intersection;   // expected sqrt(5)
    bool positive = false;
    bool is_eigenvector = false;  // g_W^* u = (1+sqrt 5)/2 u
    bool all() const { return positive && is_eigenvector; }
};

// the golden-mean eigenvector on the l = 2 surface lattice, over Q(sqrt 5)
inline EigenvectorReport u_self_intersection() {
    const long ell = 2;
    const long d = 5;
    auto elem = [&](long re_num, long re_den, long im_num, long im_den) {
        return QuadExt(make_rat(re_num, re_den), make_rat(im_num, im_den), d);
    };
    // u = (2 + s5) L - (3/2 + s5/2) E1 - (1/2 + s5/2)(E2 + E3 + F2) - F1
    std::vector<QuadExt> u{elem(2, 1, 1, 1),  elem(-3, 2, -1, 2), elem(-1, 2, -1, 2),
                           elem(-1, 2, -1, 2), elem(-1, 1, 0, 1),  elem(-1, 2, -1, 2)};
    EigenvectorReport rep;
    QuadExt acc = u[0] * u[0];
    for (std::size_t i = 1; i < u.size(); ++i) acc -= u[i] * u[i];
    rep.self_intersection = acc;
    // positivity in the real embedding with sqrt(5) > 0
    rep.positive = acc.im() > 0 && acc.re() >= 0;

    LatticeAction gw = build_gw_star(ell);
    std::vector<QuadExt> img = gw.matrix.apply(u);
    QuadExt lambda = elem(1, 2, 1, 2);  // (1 + sqrt 5)/2
    rep.is_eigenvector = true;
    for (std::size_t i = 0; i < u.size(); ++i)
        rep.is_eigenvector = rep.is_eigenvector && img[i] == lambda * u[i];
    return rep;
}

// first-basis-vector coefficients of M^k applied to the hyperplane class,
// k = 1..n: the predicted degrees of the reduced iterates
inline std::vector<Int> degree_sequence(const LatticeAction& action, long n) {
    if (n < 1) throw std::invalid_argument("degree_sequence: n >= 1");
    std::vector<Int> v(action.basis.dim(), Int(0));
    v[0] = 1;
    std::vector<Int> out;
    for (long k = 1; k <= n; ++k) {
        v = action.matrix.apply(v);
        out.push_back(v[0]);
    }
    return out;
}

// check that `seq` satisfies the linear recurrence of the monic polynomial
// `p` wherever a full window fits
inline bool satisfies_recurrence(const std::vector<Int>& seq, const UniPoly<Int>& p) {
    long d = p.degree();
    if (p.leading() != 1) throw std::invalid_argument("satisfies_recurrence: monic expected");
    bool ok = true;
    for (std::size_t k = 0; k + static_cast<std::size_t>(d) < seq.size(); ++k) {
        Int acc(0);
        for (long i = 0; i <= d; ++i)
            acc += p[static_cast<std::size_t>(i)] * seq[k + static_cast<std::size_t>(i)];
        ok = ok && acc == 0;
    }
    return ok;
}

}  // namespace cremona
