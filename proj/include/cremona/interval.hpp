#pragma once

// Rational interval arithmetic: endpoints are exact rationals, so the only
// "rounding" is the explicit widening in sqrt. Used for certified enclosures
// of the torus eigenvalues.

#include <stdexcept>
#include <string>

#include "cremona/numbers.hpp"
#include "cremona/sturm.hpp"

namespace cremona {

struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
    }
    static RatInterval point(const Rat& v) { return RatInterval(v, v); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool strictly_positive() const { return lo > 0; }

    friend RatInterval operator+(const RatInterval& x, const RatInterval& y) {
        return RatInterval(x.lo + y.lo, x.hi + y.hi);
    }
    friend RatInterval operator-(const RatInterval& x) { return RatInterval(-x.hi, -x.lo); }
    friend RatInterval operator-(const RatInterval& x, const RatInterval& y) {
        return x + (-y);
    }
    friend RatInterval operator*(const RatInterval& x, const RatInterval& y) {
        Rat a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
        Rat lo = a, hi = a;
        for (const Rat& v : {b, c, d}) {
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
        return RatInterval(lo, hi);
    }
    RatInterval inv() const {
        if (lo <= 0 && hi >= 0) throw std::domain_error("RatInterval: inverse across zero");
        return RatInterval(Rat(1) / hi, Rat(1) / lo);
    }
    friend RatInterval operator/(const RatInterval& x, const RatInterval& y) {
        return x * y.inv();
    }

    std::string str() const {
        return "[" + lo.get_str() + ", " + hi.get_str() + "]";
    }
};

// certified enclosure of sqrt(v) for v >= 0, width below eps
inline RatInterval rat_sqrt(const Rat& v, const Rat& eps) {
    if (v < 0) throw std::domain_error("rat_sqrt: negative input");
    if (v == 0) return RatInterval::point(Rat(0));
    Rat lo(0), hi = v < 1 ? Rat(1) : v;
    while (hi - lo >= eps) {
        Rat m = (lo + hi) / 2;
        if (m * m <= v) lo = m;
        else hi = m;
    }
    return RatInterval(lo, hi);
}

inline RatInterval interval_sqrt(const RatInterval& x, const Rat& eps) {
    if (x.lo < 0) throw std::domain_error("interval_sqrt: negative interval");
    return RatInterval(rat_sqrt(x.lo, eps).lo, rat_sqrt(x.hi, eps).hi);
}

}  // namespace cremona
