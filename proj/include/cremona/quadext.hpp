#pragma once

// Elements re + im*sqrt(disc) of a quadratic extension of Q, with exact
// rational parts. disc is the squarefree integer fixed by the field context;
// elements of different fields never mix (checked at every binary op).

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "cremona/numbers.hpp"

namespace cremona {

class QuadExt {
public:
    QuadExt() : re_(0), im_(0), disc_(0) {}
    QuadExt(Rat re, Rat im, long disc) : re_(std::move(re)), im_(std::move(im)), disc_(disc) {
        if (im_ == 0) disc_ = 0;  // rationals are field-agnostic
    }
    QuadExt(const Rat& r) : re_(r), im_(0), disc_(0) {}  // NOLINT: implicit by design
    QuadExt(long n) : re_(n), im_(0), disc_(0) {}        // NOLINT

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }
    long disc() const { return disc_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }

    QuadExt conj() const { return QuadExt(re_, -im_, disc_); }

    // re^2 - disc*im^2, always a rational
    Rat norm() const { return re_ * re_ - Rat(disc_) * im_ * im_; }

    friend QuadExt operator-(const QuadExt& a) { return QuadExt(-a.re_, -a.im_, a.disc_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        long d = joint_disc(a, b);
        return QuadExt(a.re_ + b.re_, a.im_ + b.im_, d);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }

    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        long d = joint_disc(a, b);
        return QuadExt(a.re_ * b.re_ + Rat(d) * a.im_ * b.im_,
                       a.re_ * b.im_ + a.im_ * b.re_, d);
    }

    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
        if (b.is_zero()) throw std::domain_error("QuadExt: division by zero");
        Rat n = b.norm();
        QuadExt c = a * b.conj();
        return QuadExt(c.re_ / n, c.im_ / n, c.disc_);
    }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        if (a.re_ != b.re_) return false;
        if (a.im_ == 0 && b.im_ == 0) return true;
        return a.im_ == b.im_ && joint_disc(a, b) != 0;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    QuadExt pow(long e) const {
        if (e < 0) return (QuadExt(1) / *this).pow(-e);
        QuadExt acc(1), b = *this;
        while (e > 0) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

    QuadExt inv() const { return QuadExt(1) / *this; }

    // Canonical text form; "w" stands for sqrt(disc).
    std::string str() const {
        if (im_ == 0) return re_.get_str();
        std::string s;
        if (re_ != 0) s += re_.get_str();
        if (im_ > 0 && !s.empty()) s += "+";
        if (im_ == -1) s += "-";
        else if (im_ != 1) s += im_.get_str() + "*";
        s += "w";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

    // Strict ordering usable as a map key (not a numeric order).
    friend bool key_less(const QuadExt& a, const QuadExt& b) {
        if (int c = cmp(a.re_, b.re_); c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

private:
    static long joint_disc(const QuadExt& a, const QuadExt& b) {
        if (a.disc_ == 0) return b.disc_;
        if (b.disc_ == 0 || a.disc_ == b.disc_) return a.disc_;
        throw std::invalid_argument("QuadExt: mixing distinct field discriminants");
    }

    Rat re_, im_;
    long disc_;
};

inline QuadExt operator*(const Rat& r, const QuadExt& q) { return QuadExt(r) * q; }
inline QuadExt operator*(const QuadExt& q, const Rat& r) { return q * QuadExt(r); }

// Parameters of the quadratic family: c = 1 and a the + branch root of
// ell*a^2 + (ell+1)*a + ell = 0, living in Q(sqrt(d)) with d the squarefree
// part of delta = -3*ell^2 + 2*ell + 1. Rejects ell <= 1 where delta >= 0
// and the extension stops being imaginary quadratic.
struct FieldParams {
    QuadExt a;
    QuadExt c;
    long disc;
    long ell;
};

inline FieldParams quad_field_for_ell(long ell) {
    if (ell <= 1)
        throw std::invalid_argument("quad_field_for_ell: need ell >= 2 (delta_ell >= 0 otherwise)");
    Int delta = -3 * Int(ell) * ell + 2 * Int(ell) + 1;
    Int d_core = squarefree_part(delta);
    Int sq;
    if (!int_sqrt_exact(delta / d_core, sq))
        throw std::logic_error("quad_field_for_ell: internal squarefree split failed");
    long d = static_cast<long>(d_core.get_si());
    // a = (-(ell+1) + s*sqrt(d)) / (2*ell), delta = s^2 * d
    QuadExt a(make_rat(Int(-(ell + 1)), Int(2 * ell)), make_rat(sq, Int(2 * ell)), d);
    return FieldParams{a, QuadExt(1), d, ell};
}

// ell*a^2 + (ell+1)*a*c + ell*c^2, the defining relation of the family.
inline QuadExt ell_condition_value(long ell, const QuadExt& a, const QuadExt& c) {
    return Rat(ell) * a * a + Rat(ell + 1) * a * c + Rat(ell) * c * c;
}

}  // namespace cremona
