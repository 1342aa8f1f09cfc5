#pragma once

// Symbolic iteration of the family maps with reduction after every step, and
// the cross-check of the observed degrees against the lattice prediction.
//
// Compositions are handled in factored form: each map coordinate is a product
// of catalog atoms (coordinate forms, tetrahedron faces, exceptional-curve
// equations), the atoms are substituted separately, and every image is
// factored back against the catalog, which grows by whatever residual is left
// over. The common factor of the composed coordinates is then the
// min-exponent part of their factor lists; a random-line certificate guards
// the result, with the recursive multivariate gcd as the total fallback.

#include <cstdint>
#include <map>
#include <vector>

#include "cremona/lattice.hpp"
#include "cremona/maps.hpp"
#include "cremona/ratmap.hpp"

namespace cremona {

namespace degree_detail {

struct FactorList {
    QuadExt scalar{1};
    std::vector<std::pair<std::size_t, unsigned>> powers;  // (catalog index, exponent)
};

// factor p against the catalog, appending the residual as a new atom
inline FactorList factor_into_catalog(const MultiPoly& p, std::vector<MultiPoly>& catalog) {
    FactorList out;
    MultiPoly residual = p;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        unsigned mult = 0;
        while (true) {
            auto q = residual.divide_exact(catalog[i]);
            if (!q) break;
            residual = std::move(*q);
            ++mult;
        }
        if (mult) out.powers.emplace_back(i, mult);
        if (residual.total_degree() == 0) break;
    }
    if (residual.total_degree() == 0) {
        out.scalar = residual.is_zero() ? QuadExt(0) : residual.leading_coeff();
    } else {
        MultiPoly atom = residual.normalized();
        auto q = residual.divide_exact(atom);
        if (!q || q->total_degree() != 0)
            throw std::logic_error("factor_into_catalog: residual normalization failed");
        out.scalar = q->leading_coeff();
        catalog.push_back(atom);
        out.powers.emplace_back(catalog.size() - 1, 1);
    }
    return out;
}

inline MultiPoly expand(const FactorList& fl, const std::vector<MultiPoly>& catalog, int nvars) {
    MultiPoly acc = MultiPoly::constant(nvars, fl.scalar);
    for (const auto& [idx, e] : fl.powers) acc = acc * catalog[idx].pow(e);
    return acc;
}

}  // namespace degree_detail

struct IterationResult {
    std::vector<RationalMap> iterates;  // f^1 .. f^n, each reduced
    std::vector<Int> degrees;
};

inline IterationResult iterate_reduced(const RationalMap& f, long n,
                                       std::vector<MultiPoly> catalog, std::uint64_t seed = 1) {
    using degree_detail::FactorList;
    using degree_detail::factor_into_catalog;
    const int nv = f.source_vars();

    // base map in factored form
    std::vector<FactorList> base(f.target_coords());
    for (std::size_t i = 0; i < f.target_coords(); ++i)
        base[i] = factor_into_catalog(f.coord(i), catalog);

    IterationResult out;
    RationalMap cur = f;
    out.iterates.push_back(cur);
    out.degrees.emplace_back(cur.degree());

    for (long k = 2; k <= n; ++k) {
        // substitute every atom used by the base map
        std::map<std::size_t, FactorList> atom_img;
        for (const auto& fl : base)
            for (const auto& [idx, e] : fl.powers)
                if (!atom_img.count(idx))
                    atom_img.emplace(idx, factor_into_catalog(
                                              catalog[idx].substitute(cur.coords()), catalog));

        // accumulate factor lists per coordinate
        std::vector<std::map<std::size_t, unsigned>> coord_pow(base.size());
        std::vector<QuadExt> coord_scalar(base.size(), QuadExt(1));
        for (std::size_t i = 0; i < base.size(); ++i) {
            coord_scalar[i] = base[i].scalar;
            for (const auto& [idx, e] : base[i].powers) {
                const FactorList& img = atom_img.at(idx);
                for (unsigned rep = 0; rep < e; ++rep) {
                    coord_scalar[i] *= img.scalar;
                    for (const auto& [j, e2] : img.powers) coord_pow[i][j] += e2;
                }
            }
        }

        // strip the common part
        std::map<std::size_t, unsigned> common = coord_pow[0];
        for (std::size_t i = 1; i < base.size(); ++i) {
            for (auto it = common.begin(); it != common.end();) {
                auto jt = coord_pow[i].find(it->first);
                if (jt == coord_pow[i].end() || jt->second == 0) it = common.erase(it);
                else {
                    it->second = std::min(it->second, jt->second);
                    ++it;
                }
            }
        }
        std::vector<MultiPoly> coords(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            FactorList fl;
            fl.scalar = coord_scalar[i];
            for (const auto& [idx, e] : coord_pow[i]) {
                unsigned drop = common.count(idx) ? common.at(idx) : 0;
                if (e > drop) fl.powers.emplace_back(idx, e - drop);
            }
            coords[i] = degree_detail::expand(fl, catalog, nv);
        }
        cur = reduce_map(RationalMap(std::move(coords)), catalog,
                         seed + static_cast<std::uint64_t>(k));
        out.iterates.push_back(cur);
        out.degrees.emplace_back(cur.degree());
    }
    return out;
}

struct DegreeCrossCheck {
    std::vector<Int> symbolic;
    std::vector<Int> predicted;
    bool match = false;
    bool recurrence_holds = false;  // long matrix sequence against the charpoly
};

inline DegreeCrossCheck degree_cross_check_threefold(long ell, long depth,
                                                     std::uint64_t seed = 1) {
    auto P = quad_field_for_ell(ell);
    DegreeCrossCheck out;
    auto catalog = geom::pullback_closure(geom::threefold_hints(P), geom::family_map_lift(P),
                                          static_cast<int>(depth) - 1);
    out.symbolic = iterate_reduced(geom::family_map_lift(P), depth, catalog, seed).degrees;
    LatticeAction fx = build_fx_star(ell);
    out.predicted = degree_sequence(fx, depth);
    out.match = out.symbolic == out.predicted;
    out.recurrence_holds =
        satisfies_recurrence(degree_sequence(fx, 4 * ell + 5 + 20), chi_ell(ell));
    return out;
}

inline DegreeCrossCheck degree_cross_check_surface(long ell, long depth,
                                                   std::uint64_t seed = 1) {
    auto P = quad_field_for_ell(ell);
    DegreeCrossCheck out;
    auto catalog = geom::pullback_closure(geom::surface_hints(P), geom::surface_map(P),
                                          static_cast<int>(depth) - 1);
    out.symbolic = iterate_reduced(geom::surface_map(P), depth, catalog, seed).degrees;
    LatticeAction gw = build_gw_star(ell);
    out.predicted = degree_sequence(gw, depth);
    out.match = out.symbolic == out.predicted;
    UniPoly<Int> x2(std::vector<Int>{Int(0), Int(0), Int(1)});
    UniPoly<Int> xm1sq(std::vector<Int>{Int(1), Int(-2), Int(1)});
    out.recurrence_holds = satisfies_recurrence(degree_sequence(gw, ell + 4 + 20),
                                                x2 * xm1sq * pisot_family_poly(ell));
    return out;
}

}  // namespace cremona
