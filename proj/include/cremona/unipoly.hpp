#pragma once

// Dense univariate polynomials, lowest-degree coefficient first.
// The zero polynomial has an empty coefficient vector and degree -1.

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cremona/numbers.hpp"
#include "cremona/quadext.hpp"

namespace cremona {

template <class K>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(K v) { return UniPoly(std::vector<K>{std::move(v)}); }
    static UniPoly x() { return UniPoly(std::vector<K>{K(0), K(1)}); }

    // x^n with coefficient v
    static UniPoly monomial(K v, std::size_t n) {
        std::vector<K> c(n + 1, K(0));
        c[n] = std::move(v);
        return UniPoly(std::move(c));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const K& operator[](std::size_t i) const {
        static const K kZero = K(0);
        return i < c_.size() ? c_[i] : kZero;
    }
    const std::vector<K>& coeffs() const { return c_; }

    const K& leading() const {
        if (c_.empty()) throw std::domain_error("UniPoly: leading of zero");
        return c_.back();
    }

    K eval(const K& v) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<K> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(static_cast<long>(i));
        return UniPoly(std::move(d));
    }

    // x^deg * p(1/x)
    UniPoly reversed() const {
        std::vector<K> r(c_.rbegin(), c_.rend());
        return UniPoly(std::move(r));
    }

    friend UniPoly operator-(const UniPoly& p) {
        std::vector<K> r(p.c_.size());
        for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] = -p.c_[i];
        return UniPoly(std::move(r));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == K(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }

    friend UniPoly operator*(const UniPoly& a, const K& s) {
        std::vector<K> r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] * s;
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const K& s, const UniPoly& a) { return a * s; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly pow(unsigned long e) const {
        UniPoly acc = constant(K(1)), b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    // p(q(x)) by Horner on the coefficient list
    UniPoly compose(const UniPoly& q) const {
        UniPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
        return acc;
    }

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
std::string UniPoly<K>::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        const K& a = (*this)[static_cast<std::size_t>(i)];
        if (a == K(0)) continue;
        std::string coef;
        if constexpr (std::is_same_v<K, QuadExt>) coef = a.str();
        else if constexpr (std::is_same_v<K, Rat>) coef = a.get_str();
        else coef = a.get_str();
        bool neg = !coef.empty() && coef[0] == '-';
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (neg) coef = coef.substr(1);
        bool unit = (coef == "1");
        if (i == 0) out += coef;
        else {
            if (!unit) out += coef + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

template <class K>
std::ostream& operator<<(std::ostream& os, const UniPoly<K>& p) { return os << p.str(); }

// ---- division, gcd (field coefficients) ----

template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divrem(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    std::vector<K> r(a.coeffs());
    long db = b.degree();
    long da = static_cast<long>(r.size()) - 1;
    if (da < db) return {UniPoly<K>::zero(), a};
    std::vector<K> q(static_cast<std::size_t>(da - db + 1), K(0));
    const K inv_lead = K(1) / b.leading();
    for (long i = da; i >= db; --i) {
        K f = r[static_cast<std::size_t>(i)] * inv_lead;
        if (f == K(0)) continue;
        q[static_cast<std::size_t>(i - db)] = f;
        for (long j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i - db + j)] =
                r[static_cast<std::size_t>(i - db + j)] - f * b[static_cast<std::size_t>(j)];
    }
    return {UniPoly<K>(std::move(q)), UniPoly<K>(std::move(r))};
}

template <class K>
bool divides_exactly(const UniPoly<K>& d, const UniPoly<K>& p, UniPoly<K>* quotient = nullptr) {
    auto [q, r] = divrem(p, d);
    if (!r.is_zero()) return false;
    if (quotient) *quotient = q;
    return true;
}

template <class K>
UniPoly<K> make_monic(const UniPoly<K>& p) {
    if (p.is_zero()) return p;
    return p * (K(1) / p.leading());
}

// monic gcd over a field; remainders are renormalized each round to keep
// coefficient heights in check
template <class K>
UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        b = make_monic(b);
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return make_monic(a);
}

template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& p) {
    if (p.degree() <= 0) return p;
    UniPoly<K> g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    auto [q, r] = divrem(p, g);
    if (!r.is_zero()) throw std::logic_error("squarefree_part: inexact division");
    return q;
}

// Resultant over a field via the remainder sequence.
template <class K>
K resultant(UniPoly<K> a, UniPoly<K> b) {
    if (a.is_zero() || b.is_zero()) return K(0);
    K acc(1);
    bool flip = false;
    while (b.degree() > 0) {
        auto [q, r] = divrem(a, b);
        long da = a.degree(), db = b.degree();
        if (r.is_zero()) return K(0);
        long dr = r.degree();
        // res(a,b) = (-1)^(da*db) lc(b)^(da - dr) res(b, r)
        if ((da * db) % 2 == 1) flip = !flip;
        K lb = b.leading();
        K scale(1);
        for (long i = 0; i < da - dr; ++i) scale = scale * lb;
        acc = acc * scale;
        a = std::move(b);
        b = std::move(r);
    }
    // b now constant: res(a, const c) = c^deg a
    K cb = b[0];
    K tail(1);
    for (long i = 0; i < a.degree(); ++i) tail = tail * cb;
    acc = acc * tail;
    return flip ? -acc : acc;
}

// ---- integer <-> rational coefficient conversions ----

inline UniPoly<Rat> to_rational(const UniPoly<Int>& p) {
    std::vector<Rat> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rat(p.coeffs()[i]);
    return UniPoly<Rat>(std::move(c));
}

// Clears denominators and divides by integer content; sign fixed so the
// leading coefficient is positive.
inline UniPoly<Int> primitive_integer(const UniPoly<Rat>& p) {
    if (p.is_zero()) return UniPoly<Int>();
    Int lcm_den(1);
    for (const Rat& q : p.coeffs()) {
        Int d = q.get_den();
        lcm_den = lcm_den / int_gcd(lcm_den, d) * d;
    }
    std::vector<Int> c(p.coeffs().size());
    Int content(0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rat v = p.coeffs()[i] * Rat(lcm_den);
        c[i] = v.get_num();
        content = int_gcd(content, c[i]);
    }
    if (content == 0) content = 1;
    if (c.back() < 0) content = -content;
    for (auto& v : c) v /= content;
    return UniPoly<Int>(std::move(c));
}

inline UniPoly<Int> poly_gcd_int(const UniPoly<Int>& a, const UniPoly<Int>& b) {
    return primitive_integer(poly_gcd(to_rational(a), to_rational(b)));
}

// x^ell - x^(ell-1) - ... - x - 1
inline UniPoly<Int> pisot_family_poly(long ell) {
    std::vector<Int> c(static_cast<std::size_t>(ell) + 1, Int(-1));
    c[static_cast<std::size_t>(ell)] = 1;
    return UniPoly<Int>(std::move(c));
}

}  // namespace cremona
