#pragma once

// Classification of integer polynomials by the location of their roots
// relative to the unit circle: cyclotomic products, Pisot, Salem, quadratic
// units. Verdicts are backed by exact region counts (Sturm + Schur-Cohn +
// trace polynomial); floating point never enters a decision.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/numbers.hpp"
#include "cremona/polyfactor.hpp"
#include "cremona/schur_cohn.hpp"
#include "cremona/sturm.hpp"
#include "cremona/tracepoly.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

enum class NumberClass { CyclotomicProduct, Pisot, Salem, QuadraticUnit, Other };

inline const char* to_string(NumberClass v) {
    switch (v) {
        case NumberClass::CyclotomicProduct: return "cyclotomic-product";
        case NumberClass::Pisot: return "pisot";
        case NumberClass::Salem: return "salem";
        case NumberClass::QuadraticUnit: return "quadratic-unit";
        case NumberClass::Other: return "other";
    }
    return "?";
}

struct RegionCounts {
    long inside = 0;
    long on_circle = 0;
    long outside = 0;
    long total() const { return inside + on_circle + outside; }
};

// Exact root counts (with multiplicity) relative to the unit circle.
// Requires p(0) != 0.
inline RegionCounts region_counts(const UniPoly<Rat>& p) {
    if (p.degree() < 0 || p[0] == 0)
        throw std::invalid_argument("region_counts: need nonzero p with p(0) != 0");
    RegionCounts rc;
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        long m = static_cast<long>(mult);
        long on = unit_circle_count(part);
        // self-inversive split: circle roots and reciprocal pairs live in r
        UniPoly<Rat> r = poly_gcd(part, part.reversed());
        auto [s, rem] = divrem(part, r);
        if (!rem.is_zero()) throw std::logic_error("region_counts: inexact split");
        long pair_inside = (r.degree() - on) / 2;
        long s_inside = 0;
        if (s.degree() > 0) {
            auto cnt = schur_cohn_inside(s);
            if (!cnt) throw std::logic_error("region_counts: circle root escaped the split");
            s_inside = *cnt;
        }
        rc.inside += m * (pair_inside + s_inside);
        rc.on_circle += m * on;
        rc.outside += m * (part.degree() - on - pair_inside - s_inside);
    }
    return rc;
}

struct ClassifiedNumber {
    UniPoly<Int> poly;   // primitive normalized input
    UniPoly<Int> core;   // after removing x^k and all cyclotomic factors
    NumberClass verdict = NumberClass::Other;
    RegionCounts counts;              // of the core
    std::optional<Interval> dominant_root;  // isolating interval, when certified
    long zero_roots = 0;
    std::vector<std::pair<unsigned long, UniPoly<Int>>> removed_cyclotomic;
    std::string diagnostic;
};

// Isolating interval of width < eps around the largest real root of p,
// which must exceed `floor`. The interval endpoints are never roots.
inline Interval isolate_largest_real_root(const UniPoly<Rat>& p_in, const Rat& eps,
                                          const Rat& floor = Rat(0)) {
    UniPoly<Rat> p = squarefree_part(make_monic(p_in));
    Rat bound = cauchy_root_bound(p) + 1;
    Rat lo = floor, hi = bound;
    auto safe_eval_nonroot = [&](Rat& v, const Rat& lo_ref, const Rat& hi_ref) {
        Rat step = (hi_ref - lo_ref) / 65537;
        while (p.eval(v) == 0) v += step;  // rational roots get nudged
    };
    safe_eval_nonroot(lo, lo, hi);
    if (sturm_count(p, lo, hi) < 1)
        throw std::invalid_argument("isolate_largest_real_root: no real root above floor");
    while (sturm_count(p, lo, hi) > 1) {
        Rat mid = (lo + hi) / 2;
        safe_eval_nonroot(mid, lo, hi);
        if (sturm_count(p, mid, hi) >= 1) lo = mid;
        else hi = mid;
    }
    return sturm_bisect(p, lo, hi, eps);
}

// Salem certificate for a squarefree +reciprocal core of even degree >= 4:
// the trace polynomial must have all real roots, exactly one above 2 and the
// remaining m-1 inside (-2, 2).
inline bool salem_certificate(const UniPoly<Rat>& core) {
    long n = core.degree();
    if (n < 4 || n % 2 != 0 || !is_plus_reciprocal(make_monic(core))) return false;
    if (squarefree_part(core).degree() != n) return false;
    UniPoly<Rat> q = trace_poly(make_monic(core));
    long m = n / 2;
    if (q.eval(Rat(2)) == 0 || q.eval(Rat(-2)) == 0) return false;
    return sturm_count_real(q) == m && sturm_count(q, Rat(-2), Rat(2)) == m - 1 &&
           sturm_count_above(q, Rat(2)) == 1;
}

inline ClassifiedNumber classify(const UniPoly<Int>& input, const Rat& eps = make_rat(1, 1000000)) {
    if (input.is_zero()) throw std::invalid_argument("classify: zero polynomial");
    ClassifiedNumber out;
    out.poly = primitive_integer(to_rational(input));

    // strip roots at zero
    std::vector<Int> c = out.poly.coeffs();
    while (!c.empty() && c.front() == 0) {
        c.erase(c.begin());
        ++out.zero_roots;
    }
    UniPoly<Rat> work = to_rational(UniPoly<Int>(c));

    auto strip = strip_cyclotomic(work);
    for (const auto& [k, f] : strip.removed)
        out.removed_cyclotomic.emplace_back(k, primitive_integer(f));
    out.core = primitive_integer(strip.core);
    UniPoly<Rat> core = to_rational(out.core);

    if (core.degree() <= 0) {
        if (!out.removed_cyclotomic.empty() && out.poly.leading() != 1 &&
            out.poly.leading() != -1) {
            out.verdict = NumberClass::Other;
            out.diagnostic = "unit-circle roots but non-monic input";
        } else if (!out.removed_cyclotomic.empty()) {
            out.verdict = NumberClass::CyclotomicProduct;
        } else {
            out.verdict = NumberClass::Other;
            out.diagnostic = "constant after normalization";
        }
        return out;
    }

    out.counts = region_counts(core);
    if (out.counts.total() != core.degree()) {
        out.verdict = NumberClass::Other;
        out.diagnostic = "region counts inconsistent with degree";
        return out;
    }

    const bool squarefree = squarefree_part(core).degree() == core.degree();

    if (core.degree() == 2 && is_reciprocal(make_monic(core)) && out.counts.outside == 1 &&
        out.counts.inside == 1 && sturm_count_above(core, Rat(1)) == 1) {
        out.verdict = NumberClass::QuadraticUnit;
        out.dominant_root = isolate_largest_real_root(core, eps, Rat(1));
        return out;
    }

    if (squarefree && salem_certificate(core)) {
        out.verdict = NumberClass::Salem;
        out.dominant_root = isolate_largest_real_root(core, eps, Rat(1));
        return out;
    }

    // Pisot: one real root above 1, everything else strictly inside.
    if (out.counts.on_circle == 0 && out.counts.outside == 1 &&
        out.counts.inside == core.degree() - 1 &&
        sturm_count_above(squarefree_part(core), Rat(1)) == 1) {
        out.verdict = NumberClass::Pisot;
        out.dominant_root = isolate_largest_real_root(core, eps, Rat(1));
        return out;
    }

    out.verdict = NumberClass::Other;
    out.diagnostic = "no certificate matched";
    return out;
}

// Certified enclosure of 2 (a+1)/(a-1) where a is the unique real root > 1 of
// x^3 - x^2 - 1. The map is decreasing there, so interval endpoints swap.
struct ThresholdReport {
    Interval alpha;      // root enclosure
    Interval threshold;  // image enclosure
    bool in_spec_window = false;   // threshold inside (10.6, 10.8)
    bool below_13 = false;         // 4*3+1 exceeds it
    bool above_9 = false;          // 4*2+1 does not
};

inline ThresholdReport salem_threshold_check() {
    UniPoly<Rat> t(std::vector<Rat>{Rat(-1), Rat(0), Rat(-1), Rat(1)});
    ThresholdReport rep;
    Rat eps = make_rat(1, 100000);
    rep.alpha = sturm_bisect(t, Rat(1), Rat(2), eps);
    auto f = [](const Rat& a) -> Rat { return 2 * (a + 1) / (a - 1); };
    rep.threshold = Interval{f(rep.alpha.hi), f(rep.alpha.lo)};
    rep.in_spec_window =
        rep.threshold.lo > make_rat(106, 10) && rep.threshold.hi < make_rat(108, 10);
    rep.below_13 = rep.threshold.hi < 13;
    rep.above_9 = rep.threshold.lo > 9;
    return rep;
}

}  // namespace cremona
