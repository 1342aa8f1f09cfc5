#pragma once

// Arbitrary-precision integers and rationals, backed by GMP.
// Rationals are always stored canonically (reduced, positive denominator).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& n) { return sgn(n); }

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0^negative");
        return rat_pow(Rat(1) / base, -e);
    }
    Rat acc(1), b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

// Height of a rational: max(|num|, den). Used for random-point generation caps.
inline Int rat_height(const Rat& q) {
    Int n = abs(q.get_num()), d = q.get_den();
    return n > d ? n : d;
}

inline Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    return make_rat(int_gcd(a.get_num() * b.get_den(), b.get_num() * a.get_den()),
                    a.get_den() * b.get_den());
}

// Trial-division factorization; fine for the small integers we feed it
// (discriminants, cyclotomic orders, modular primes).
inline std::vector<std::pair<Int, unsigned>> factor_int(Int n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Int, unsigned>> out;
    if (n <= 1) return out;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// Largest squarefree divisor carrying the sign of n.
inline Int squarefree_part(const Int& n) {
    if (n == 0) return 0;
    Int core = n < 0 ? Int(-1) : Int(1);
    for (const auto& [p, e] : factor_int(n))
        if (e % 2 == 1) core *= p;
    return core;
}

// sqrt of a perfect square; returns false if n is not a square.
inline bool int_sqrt_exact(const Int& n, Int& root) {
    if (n < 0) return false;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r != n) return false;
    root = r;
    return true;
}

// Deterministic 64-bit splitmix; seeds all randomized steps so runs reproduce.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // nonzero rational of height <= h
    Rat rat(long h) {
        long n = range(-h, h);
        long d = range(1, h);
        if (n == 0) n = 1;
        return make_rat(n, d);
    }

private:
    std::uint64_t state_;
};

}  // namespace cremona
