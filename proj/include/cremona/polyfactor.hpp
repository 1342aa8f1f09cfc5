#pragma once

// Integer-polynomial toolbox: squarefree decomposition, rational roots,
// cyclotomic-factor stripping, irreducibility over Q, and full factorization
// by the classical route (factor mod p, Hensel lift past the Mignotte bound,
// recombine). Irreducibility first tries a degree-pattern sieve over primes
// below 100, which settles most inputs without lifting anything.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cremona/numbers.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

// ---------- arithmetic in F_p[x], p an odd word-size prime ----------

namespace modp {

using Poly = std::vector<long>;  // lowest-degree first, entries in [0, p)

inline long mulmod(long a, long b, long p) {
    return static_cast<long>((static_cast<__int128>(a) * b) % p);
}

inline long powmod_scalar(long a, long e, long p) {
    long r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline long invmod(long a, long p) { return powmod_scalar(((a % p) + p) % p, p - 2, p); }

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }

inline Poly from_int_poly(const UniPoly<Int>& f, long p) {
    Poly r(f.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        Int m = f.coeffs()[i] % p;
        if (m < 0) m += p;
        r[i] = static_cast<long>(m.get_si());
    }
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

inline Poly scale(const Poly& a, long s, long p) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], s, p);
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b, long p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % p + p) % p;
    trim(r);
    return r;
}

inline void divrem(const Poly& a, const Poly& b, long p, Poly& q, Poly& r) {
    if (b.empty()) throw std::domain_error("modp::divrem: division by zero");
    r = a;
    trim(r);
    long db = degree(b);
    q.assign(r.size() > b.size() - 1 ? r.size() - b.size() + 1 : 0, 0);
    long inv_lead = invmod(b.back(), p);
    while (degree(r) >= db) {
        long k = degree(r) - db;
        long f = mulmod(r.back(), inv_lead, p);
        q[static_cast<std::size_t>(k)] = f;
        for (long j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(k + j);
            r[idx] = ((r[idx] - mulmod(f, b[static_cast<std::size_t>(j)], p)) % p + p) % p;
        }
        trim(r);
    }
    trim(q);
}

inline Poly rem(const Poly& a, const Poly& b, long p) {
    Poly q, r;
    divrem(a, b, p, q, r);
    return r;
}

inline Poly monic(const Poly& f, long p) {
    if (f.empty()) return f;
    return scale(f, invmod(f.back(), p), p);
}

inline Poly gcd(Poly a, Poly b, long p) {
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

inline Poly derivative(const Poly& f, long p) {
    if (f.size() <= 1) return {};
    Poly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mulmod(f[i], static_cast<long>(i % p), p);
    trim(d);
    return d;
}

inline Poly powmod(Poly base, Int e, const Poly& mod, long p) {
    Poly r{1};
    base = rem(base, mod, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base, p), mod, p);
        base = rem(mul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

// Distinct-degree split of squarefree monic f: list of (degree d, product of
// all irreducible factors of degree d).
inline std::vector<std::pair<long, Poly>> distinct_degree(Poly f, long p) {
    std::vector<std::pair<long, Poly>> out;
    Poly x{0, 1};
    Poly h = x;  // x^(p^d) mod f, running
    long d = 0;
    while (degree(f) > 0) {
        ++d;
        if (2 * d > degree(f)) {
            out.emplace_back(degree(f), f);
            break;
        }
        h = powmod(h, Int(p), f, p);
        Poly g = gcd(sub(h, x, p), f, p);
        if (degree(g) > 0) {
            out.emplace_back(d, g);
            Poly q, r;
            divrem(f, g, p, q, r);
            f = monic(q, p);
            h = rem(h, f, p);
        }
    }
    return out;
}

// Cantor-Zassenhaus equal-degree splitting of a product of degree-d factors.
inline void equal_degree_split(const Poly& f, long d, long p, Rng& rng, std::vector<Poly>& out) {
    if (degree(f) == d) {
        out.push_back(monic(f, p));
        return;
    }
    Poly factor;
    while (true) {
        Poly h(static_cast<std::size_t>(degree(f)), 0);
        for (auto& c : h) c = rng.range(0, p - 1);
        trim(h);
        if (degree(h) < 1) continue;
        Int e = (int_pow(Int(p), static_cast<unsigned long>(d)) - 1) / 2;
        Poly g = powmod(h, e, f, p);
        if (g.empty()) continue;
        g[0] = (g[0] + p - 1) % p;  // g - 1
        trim(g);
        Poly candidate = gcd(g, f, p);
        if (degree(candidate) > 0 && degree(candidate) < degree(f)) {
            factor = candidate;
            break;
        }
    }
    Poly q, r;
    divrem(f, factor, p, q, r);
    equal_degree_split(factor, d, p, rng, out);
    equal_degree_split(monic(q, p), d, p, rng, out);
}

inline std::vector<Poly> factor_squarefree(const Poly& f, long p, Rng& rng) {
    std::vector<Poly> out;
    for (const auto& [d, block] : distinct_degree(monic(f, p), p))
        equal_degree_split(block, d, p, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace modp

// ---------- squarefree decomposition over Q (Yun) ----------

// p = prod parts[i].first ^ parts[i].second with squarefree pairwise-coprime parts.
inline std::vector<std::pair<UniPoly<Rat>, unsigned>> squarefree_decomposition(
    const UniPoly<Rat>& p) {
    std::vector<std::pair<UniPoly<Rat>, unsigned>> out;
    if (p.degree() <= 0) return out;
    UniPoly<Rat> f = make_monic(p);
    UniPoly<Rat> g = poly_gcd(f, f.derivative());
    auto [w, r0] = divrem(f, g);
    unsigned i = 1;
    while (w.degree() > 0) {
        UniPoly<Rat> y = poly_gcd(w, g);
        auto [z, r1] = divrem(w, y);
        if (z.degree() > 0) out.emplace_back(z, i);
        auto [g2, r2] = divrem(g, y);
        g = g2;
        w = std::move(y);
        ++i;
    }
    return out;
}

// ---------- rational root test ----------

inline std::vector<Rat> rational_roots(const UniPoly<Int>& p) {
    std::vector<Rat> roots;
    if (p.degree() < 1) return roots;
    UniPoly<Int> f = p;
    std::size_t low = 0;
    while (low < f.coeffs().size() && f.coeffs()[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    std::vector<Int> shifted(f.coeffs().begin() + static_cast<long>(low), f.coeffs().end());
    f = UniPoly<Int>(shifted);
    if (f.degree() < 1) return roots;
    auto divisors = [](const Int& n) {
        std::vector<Int> ds{1};
        for (const auto& [q, e] : factor_int(n)) {
            std::size_t sz = ds.size();
            Int pk(1);
            for (unsigned k = 1; k <= e; ++k) {
                pk *= q;
                for (std::size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
            }
        }
        return ds;
    };
    UniPoly<Rat> fq = to_rational(f);
    for (const Int& nu : divisors(f[0] < 0 ? Int(-f[0]) : f[0]))
        for (const Int& de : divisors(abs(f.leading())))
            for (int s : {1, -1}) {
                Rat cand = make_rat(s * nu, de);
                if (fq.eval(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    return roots;
}

// ---------- cyclotomic factor stripping ----------

inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (const auto& [p, e] : factor_int(Int(static_cast<long>(n))))
        result -= result / p.get_ui();
    return result;
}

struct CyclotomicStrip {
    UniPoly<Rat> core;                    // p with all roots of unity removed
    std::vector<std::pair<unsigned long, UniPoly<Rat>>> removed;  // (order k, factor)
};

// Removes every factor whose roots are roots of unity by repeated gcd with
// x^k - 1. Any root of unity appearing in a degree-n polynomial has
// phi(order) <= n, which bounds the orders to scan.
inline CyclotomicStrip strip_cyclotomic(const UniPoly<Rat>& p) {
    CyclotomicStrip out;
    out.core = make_monic(p);
    if (p.degree() <= 0) return out;
    long n = p.degree();
    for (unsigned long k = 1; k <= static_cast<unsigned long>(2 * n * n); ++k) {
        if (euler_phi(k) > static_cast<unsigned long>(out.core.degree())) continue;
        UniPoly<Rat> xk1 = UniPoly<Rat>::monomial(Rat(1), k) - UniPoly<Rat>::constant(Rat(1));
        while (true) {
            UniPoly<Rat> g = poly_gcd(out.core, xk1);
            if (g.degree() <= 0) break;
            auto [q, r] = divrem(out.core, g);
            out.core = make_monic(q);
            out.removed.emplace_back(k, g);
        }
        if (out.core.degree() <= 0) break;
    }
    return out;
}

// ---------- Hensel lifting ----------

namespace hensel {

// coefficients of f reduced into the symmetric range mod m
inline UniPoly<Int> symmetric_mod(const UniPoly<Int>& f, const Int& m) {
    std::vector<Int> c(f.coeffs());
    for (auto& v : c) {
        v %= m;
        if (v < 0) v += m;
        if (2 * v > m) v -= m;
    }
    return UniPoly<Int>(std::move(c));
}

struct LiftPair {
    UniPoly<Int> g, h, s, t;  // f = g h (mod m), s g + t h = 1 (mod m)
};

// One quadratic step: from mod m to mod m^2.
inline void lift_step(const UniPoly<Int>& f, LiftPair& P, const Int& m) {
    Int m2 = m * m;
    auto mod2 = [&](const UniPoly<Int>& a) { return symmetric_mod(a, m2); };
    UniPoly<Int> e = mod2(f - P.g * P.h);
    // q, r with s*e = q*h + r  (division over Q is exact enough mod m^2
    // because h is monic)
    auto division = [&](const UniPoly<Int>& a, const UniPoly<Int>& b) {
        // b monic; divide with integer arithmetic
        std::vector<Int> r(a.coeffs());
        long db = b.degree();
        std::vector<Int> q(r.size() > static_cast<std::size_t>(db)
                               ? r.size() - static_cast<std::size_t>(db)
                               : 0,
                           Int(0));
        for (long i = static_cast<long>(r.size()) - 1; i >= db; --i) {
            Int f2 = r[static_cast<std::size_t>(i)];
            if (f2 == 0) continue;
            q[static_cast<std::size_t>(i - db)] = f2;
            for (long j = 0; j <= db; ++j)
                r[static_cast<std::size_t>(i - db + j)] -= f2 * b[static_cast<std::size_t>(j)];
        }
        return std::make_pair(UniPoly<Int>(std::move(q)), UniPoly<Int>(std::move(r)));
    };
    auto [q, r] = division(mod2(P.s * e), P.h);
    UniPoly<Int> g1 = mod2(P.g + P.t * e + q * P.g);
    UniPoly<Int> h1 = mod2(P.h + r);
    UniPoly<Int> b = mod2(P.s * g1 + P.t * h1 - UniPoly<Int>::constant(Int(1)));
    auto [c, d] = division(mod2(P.s * b), h1);
    UniPoly<Int> s1 = mod2(P.s - d);
    UniPoly<Int> t1 = mod2(P.t - P.t * b - c * g1);
    P = LiftPair{g1, h1, s1, t1};
}

}  // namespace hensel

// ---------- factorization over Z ----------

namespace detail_factor {

inline Int mignotte_bound(const UniPoly<Int>& f) {
    Int sum(0);
    for (const Int& c : f.coeffs()) sum += c * c;
    Int norm;
    mpz_sqrt(norm.get_mpz_t(), sum.get_mpz_t());
    norm += 1;
    return (norm * abs(f.leading())) << static_cast<unsigned long>(f.degree() + 1);
}

// extended gcd in F_p[x]: s a + t b = 1 for coprime a, b
inline void xgcd_modp(const modp::Poly& a, const modp::Poly& b, long p, modp::Poly& s,
                      modp::Poly& t) {
    modp::Poly r0 = a, r1 = b;
    modp::Poly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        modp::Poly q, r;
        modp::divrem(r0, r1, p, q, r);
        modp::Poly s2 = modp::sub(s0, modp::mul(q, s1, p), p);
        modp::Poly t2 = modp::sub(t0, modp::mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (modp::degree(r0) != 0)
        throw std::logic_error("xgcd_modp: inputs not coprime");
    long inv = modp::invmod(r0[0], p);
    s = modp::scale(s0, inv, p);
    t = modp::scale(t0, inv, p);
}

inline UniPoly<Int> lift_poly(const modp::Poly& f) {
    std::vector<Int> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = f[i];
    return UniPoly<Int>(std::move(c));
}

// Lift the full modular factor list of monic f from mod p to mod >= bound by
// a binary tree of two-factor Hensel lifts.
inline std::vector<UniPoly<Int>> lift_tree(const UniPoly<Int>& f,
                                           const std::vector<modp::Poly>& parts, long p,
                                           const Int& bound, Int& modulus_out) {
    Int modulus(p);
    while (modulus < bound) modulus *= modulus;
    if (parts.size() == 1) {
        modulus_out = modulus;
        return {hensel::symmetric_mod(f, modulus)};
    }
    std::size_t half = parts.size() / 2;
    modp::Poly g_p{1}, h_p{1};
    for (std::size_t i = 0; i < half; ++i) g_p = modp::mul(g_p, parts[i], p);
    for (std::size_t i = half; i < parts.size(); ++i) h_p = modp::mul(h_p, parts[i], p);
    modp::Poly s_p, t_p;
    xgcd_modp(g_p, h_p, p, s_p, t_p);
    hensel::LiftPair P{hensel::symmetric_mod(lift_poly(g_p), Int(p)),
                       hensel::symmetric_mod(lift_poly(h_p), Int(p)),
                       hensel::symmetric_mod(lift_poly(s_p), Int(p)),
                       hensel::symmetric_mod(lift_poly(t_p), Int(p))};
    Int m(p);
    while (m < bound) {
        hensel::lift_step(f, P, m);
        m *= m;
    }
    modulus_out = m;
    // recurse into both halves mod p, then re-lift against g/h
    std::vector<modp::Poly> left(parts.begin(), parts.begin() + static_cast<long>(half));
    std::vector<modp::Poly> right(parts.begin() + static_cast<long>(half), parts.end());
    Int mg, mh;
    auto gs = lift_tree(P.g, left, p, bound, mg);
    auto hs = lift_tree(P.h, right, p, bound, mh);
    gs.insert(gs.end(), hs.begin(), hs.end());
    modulus_out = m;
    return gs;
}

}  // namespace detail_factor

// Factor a squarefree primitive integer polynomial into irreducible integer
// factors (content/sign not tracked; result factors are primitive with
// positive leading coefficient, product equal to +-f up to content).
inline std::vector<UniPoly<Int>> factor_squarefree_over_z(const UniPoly<Int>& f_in) {
    UniPoly<Int> f = f_in;
    if (f.degree() <= 0) return {};
    if (f.degree() == 1) return {f};

    // Non-monic inputs go through the monic substitution y = lead * x:
    // F(y) = lead^(n-1) f(y/lead) is monic, and factors map back via
    // g(y) -> pp(g(lead x)). Nearly everything this library factors is
    // already monic, so the growth is a non-issue.
    if (f.leading() != 1 && f.leading() != -1) {
        const Int l = f.leading();
        long n = f.degree();
        std::vector<Int> c(f.coeffs());
        c[static_cast<std::size_t>(n)] = 1;  // lead * l^(n-1-n) = 1
        for (long i = 0; i < n; ++i)
            c[static_cast<std::size_t>(i)] *= int_pow(l, static_cast<unsigned long>(n - 1 - i));
        UniPoly<Int> F(std::move(c));
        std::vector<UniPoly<Int>> out;
        for (const auto& g : factor_squarefree_over_z(F)) {
            std::vector<Rat> back(g.coeffs().size());
            Rat pw(1);
            for (std::size_t i = 0; i < back.size(); ++i) {
                back[i] = Rat(g.coeffs()[i]) * pw;
                pw *= Rat(l);
            }
            out.push_back(primitive_integer(UniPoly<Rat>(std::move(back))));
        }
        return out;
    }
    if (f.leading() == -1) f = -f;

    // choose a prime keeping f squarefree
    static const long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                   47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103,
                                   107, 109, 113, 127, 131, 137, 139, 149, 151, 157};
    long p = 0;
    modp::Poly fp;
    for (long cand : kPrimes) {
        fp = modp::from_int_poly(f, cand);
        if (modp::degree(modp::gcd(fp, modp::derivative(fp, cand), cand)) == 0) {
            p = cand;
            break;
        }
    }
    if (p == 0) throw std::logic_error("factor_squarefree_over_z: no good prime found");

    Rng rng(0x5eedULL + static_cast<std::uint64_t>(p));
    std::vector<modp::Poly> modular = modp::factor_squarefree(fp, p, rng);
    if (modular.size() == 1) return {f};

    Int bound = 2 * detail_factor::mignotte_bound(f) + 1;
    Int lift_modulus(p);
    while (lift_modulus < bound) lift_modulus *= lift_modulus;
    Int modulus;
    auto lifted = detail_factor::lift_tree(hensel::symmetric_mod(f, lift_modulus), modular, p,
                                           bound, modulus);

    // recombination: all lifted parts are monic, so candidates are too
    std::vector<UniPoly<Int>> result;
    std::vector<int> alive(lifted.size(), 1);
    UniPoly<Int> rem_f = f;
    auto try_subset = [&](const std::vector<std::size_t>& subset) -> bool {
        UniPoly<Int> cand = UniPoly<Int>::constant(Int(1));
        for (std::size_t i : subset) cand = hensel::symmetric_mod(cand * lifted[i], modulus);
        UniPoly<Rat> q;
        if (cand.degree() >= 1 && divides_exactly(to_rational(cand), to_rational(rem_f), &q)) {
            result.push_back(cand);
            rem_f = primitive_integer(q);
            for (std::size_t i : subset) alive[i] = 0;
            return true;
        }
        return false;
    };
    std::size_t r = lifted.size();
    for (std::size_t card = 1; card <= r && rem_f.degree() > 0; ++card) {
        std::vector<std::size_t> live;
        for (std::size_t i = 0; i < r; ++i)
            if (alive[i]) live.push_back(i);
        if (card > live.size()) break;
        std::vector<std::size_t> idx(card);
        std::iota(idx.begin(), idx.end(), 0);
        bool advanced = true;
        while (advanced) {
            std::vector<std::size_t> subset(card);
            for (std::size_t i = 0; i < card; ++i) subset[i] = live[idx[i]];
            if (try_subset(subset)) {
                live.clear();
                for (std::size_t i = 0; i < r; ++i)
                    if (alive[i]) live.push_back(i);
                if (card > live.size() || rem_f.degree() == 0) break;
                std::iota(idx.begin(), idx.end(), 0);
                continue;
            }
            // next combination
            advanced = false;
            for (long i = static_cast<long>(card) - 1; i >= 0; --i) {
                if (idx[static_cast<std::size_t>(i)] <
                    live.size() - (card - static_cast<std::size_t>(i))) {
                    ++idx[static_cast<std::size_t>(i)];
                    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < card; ++j)
                        idx[j] = idx[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
        }
    }
    if (rem_f.degree() > 0) result.push_back(rem_f);
    std::sort(result.begin(), result.end(), [](const UniPoly<Int>& a, const UniPoly<Int>& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (long i = a.degree(); i >= 0; --i)
            if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)])
                return a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)];
        return false;
    });
    return result;
}

// Full factorization over Q: returns primitive irreducible integer factors
// with multiplicities (content dropped).
inline std::vector<std::pair<UniPoly<Int>, unsigned>> factor_over_q(const UniPoly<Rat>& p) {
    std::vector<std::pair<UniPoly<Int>, unsigned>> out;
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        for (const auto& irr : factor_squarefree_over_z(primitive_integer(part)))
            out.emplace_back(irr, mult);
    }
    return out;
}

inline std::vector<std::pair<UniPoly<Int>, unsigned>> factor_over_q(const UniPoly<Int>& p) {
    return factor_over_q(to_rational(p));
}

// ---------- irreducibility over Q ----------

inline constexpr long kIrreducibilityDegreeCap = 13;

// Degree-pattern sieve over primes < 100, Zassenhaus fallback. The cap is the
// largest degree the contract guarantees; larger inputs are still handled by
// the fallback path (used by the composed-product factor selection).
inline bool is_irreducible_q(const UniPoly<Int>& f, bool enforce_cap = true) {
    long n = f.degree();
    if (n < 1) return false;
    if (enforce_cap && n > kIrreducibilityDegreeCap)
        throw std::invalid_argument("is_irreducible_q: degree above supported cap");
    if (n == 1) return true;
    if (f[0] == 0) return false;  // x divides
    UniPoly<Rat> fq = to_rational(f);
    if (squarefree_part(fq).degree() != n) return false;

    static const long kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
                                   41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                                   83, 89, 97};
    std::set<long> possible;  // possible proper factor degrees, intersected
    for (long d = 1; d < n; ++d) possible.insert(d);
    int usable = 0;
    for (long p : kPrimes) {
        if (f.leading() % p == 0) continue;
        modp::Poly fp = modp::from_int_poly(f, p);
        if (modp::degree(fp) != n) continue;
        if (modp::degree(modp::gcd(fp, modp::derivative(fp, p), p)) != 0) continue;
        ++usable;
        auto blocks = modp::distinct_degree(fp, p);
        std::vector<long> degs;
        for (const auto& [d, block] : blocks)
            for (long i = 0; i < modp::degree(block) / d; ++i) degs.push_back(d);
        if (degs.size() == 1) return true;  // irreducible mod p
        // subset sums
        std::set<long> sums{0};
        for (long d : degs) {
            std::set<long> next = sums;
            for (long s : sums) next.insert(s + d);
            sums = std::move(next);
        }
        for (auto it = possible.begin(); it != possible.end();)
            if (!sums.count(*it)) it = possible.erase(it);
            else ++it;
        if (possible.empty()) return true;
        if (usable >= 8) break;
    }
    // bounded factor search fallback (Mignotte-bounded via Hensel recombination)
    return factor_squarefree_over_z(primitive_integer(fq)).size() == 1;
}

}  // namespace cremona
