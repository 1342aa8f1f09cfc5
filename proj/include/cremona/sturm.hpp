#pragma once

// Exact real-root counting and isolation via Sturm sequences over Q.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cremona/numbers.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

struct SturmChain {
    std::vector<UniPoly<Rat>> seq;

    explicit SturmChain(const UniPoly<Rat>& p) {
        if (p.degree() < 1) throw std::invalid_argument("SturmChain: need degree >= 1");
        seq.push_back(p);
        seq.push_back(p.derivative());
        while (seq.back().degree() > 0) {
            auto [q, r] = divrem(seq[seq.size() - 2], seq.back());
            if (r.is_zero()) break;  // input was not squarefree; chain still usable below
            seq.push_back(-r);
        }
    }

    int sign_changes_at(const Rat& x) const {
        int changes = 0, prev = 0;
        for (const auto& f : seq) {
            int s = sign(f.eval(x));
            if (s != 0) {
                if (prev != 0 && s != prev) ++changes;
                prev = s;
            }
        }
        return changes;
    }

    // Signs at +inf/-inf come from leading coefficients.
    int sign_changes_at_infinity(bool positive) const {
        int changes = 0, prev = 0;
        for (const auto& f : seq) {
            if (f.is_zero()) continue;
            int s = sign(f.leading());
            if (!positive && f.degree() % 2 == 1) s = -s;
            if (s != 0) {
                if (prev != 0 && s != prev) ++changes;
                prev = s;
            }
        }
        return changes;
    }
};

// Number of distinct real roots of squarefree p in the open interval (lo, hi).
// Signals if an endpoint is a root; callers perturb by an exact rational.
inline long sturm_count(const UniPoly<Rat>& p, const Rat& lo, const Rat& hi) {
    if (p.degree() < 0) throw std::invalid_argument("sturm_count: zero polynomial");
    if (p.degree() == 0) return 0;
    if (!(lo < hi)) throw std::invalid_argument("sturm_count: need lo < hi");
    if (p.eval(lo) == 0 || p.eval(hi) == 0)
        throw std::domain_error("sturm_count: endpoint is a root; perturb it");
    SturmChain chain(p);
    return chain.sign_changes_at(lo) - chain.sign_changes_at(hi);
}

inline long sturm_count(const UniPoly<Int>& p, const Rat& lo, const Rat& hi) {
    return sturm_count(to_rational(p), lo, hi);
}

// Count over (lo, +inf); lo must not be a root.
inline long sturm_count_above(const UniPoly<Rat>& p, const Rat& lo) {
    if (p.degree() <= 0) return 0;
    if (p.eval(lo) == 0) throw std::domain_error("sturm_count_above: endpoint is a root");
    SturmChain chain(p);
    return chain.sign_changes_at(lo) - chain.sign_changes_at_infinity(true);
}

inline long sturm_count_real(const UniPoly<Rat>& p) {
    if (p.degree() <= 0) return 0;
    SturmChain chain(p);
    return chain.sign_changes_at_infinity(false) - chain.sign_changes_at_infinity(true);
}

// 1 + max |a_i / a_n|; every complex root has modulus below this.
inline Rat cauchy_root_bound(const UniPoly<Rat>& p) {
    if (p.degree() < 0) throw std::invalid_argument("cauchy_root_bound: zero polynomial");
    Rat m(0);
    const Rat lead = p.leading();
    for (long i = 0; i < p.degree(); ++i) {
        Rat v = abs(p[static_cast<std::size_t>(i)] / lead);
        if (v > m) m = v;
    }
    return m + 1;
}

inline Rat cauchy_root_bound(const UniPoly<Int>& p) { return cauchy_root_bound(to_rational(p)); }

struct Interval {
    Rat lo, hi;
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
};

// Shrinks (lo, hi), which must contain exactly one root of squarefree p,
// until its width drops below eps. Endpoints stay non-roots.
inline Interval sturm_bisect(const UniPoly<Rat>& p, Rat lo, Rat hi, const Rat& eps) {
    SturmChain chain(p);
    auto count = [&](const Rat& a, const Rat& b) {
        return chain.sign_changes_at(a) - chain.sign_changes_at(b);
    };
    if (count(lo, hi) != 1)
        throw std::invalid_argument("sturm_bisect: interval does not isolate one root");
    while (hi - lo >= eps) {
        Rat mid = (lo + hi) / 2;
        if (p.eval(mid) == 0) {
            // exact rational root: nudge the window around it
            Rat h = (hi - lo) / 4;
            while (h >= eps / 4) h /= 2;
            lo = mid - h;
            hi = mid + h;
            break;
        }
        if (count(lo, mid) == 1) hi = mid;
        else lo = mid;
    }
    return Interval{lo, hi};
}

}  // namespace cremona
