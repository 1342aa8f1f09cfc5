#pragma once

// Sparse multivariate polynomials over a quadratic extension field, in up to
// four variables. Terms are kept in graded-lexicographic order; degrees at
// desk scale stay well below the 255 cap of the packed exponents.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cremona/numbers.hpp"
#include "cremona/quadext.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

constexpr int kMaxVars = 4;

struct Monomial {
    std::array<unsigned char, kMaxVars> e{};

    int total() const {
        int t = 0;
        for (auto v : e) t += v;
        return t;
    }

    bool divides(const Monomial& other) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[static_cast<std::size_t>(i)] > other.e[static_cast<std::size_t>(i)])
                return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e[static_cast<std::size_t>(i)] =
                static_cast<unsigned char>(e[static_cast<std::size_t>(i)] +
                                           o.e[static_cast<std::size_t>(i)]);
        return r;
    }

    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e[static_cast<std::size_t>(i)] =
                static_cast<unsigned char>(e[static_cast<std::size_t>(i)] -
                                           o.e[static_cast<std::size_t>(i)]);
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
};

// graded lex, highest first when iterating maps in reverse
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int ta = a.total(), tb = b.total();
        if (ta != tb) return ta < tb;
        return a.e < b.e;
    }
};

class MultiPoly {
public:
    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) { check_vars(nvars); }

    static MultiPoly constant(int nvars, const QuadExt& c) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_[Monomial{}] = c;
        return p;
    }

    static MultiPoly variable(int nvars, int var, const QuadExt& coef = QuadExt(1)) {
        MultiPoly p(nvars);
        if (var < 0 || var >= nvars) throw std::invalid_argument("MultiPoly: bad variable");
        if (!coef.is_zero()) {
            Monomial m;
            m.e[static_cast<std::size_t>(var)] = 1;
            p.terms_[m] = coef;
        }
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, QuadExt, GradedLexLess>& terms() const { return terms_; }

    void add_term(const Monomial& m, const QuadExt& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int total_degree() const {
        if (terms_.empty()) return -1;
        return terms_.rbegin()->first.total();
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.total();
        return terms_.rbegin()->first.total() == d;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::domain_error("MultiPoly: leading of zero");
        return terms_.rbegin()->first;
    }
    const QuadExt& leading_coeff() const {
        if (terms_.empty()) throw std::domain_error("MultiPoly: leading of zero");
        return terms_.rbegin()->second;
    }

    friend MultiPoly operator-(const MultiPoly& p) {
        MultiPoly r(p.nvars_);
        for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        check_pair(a, b);
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        check_pair(a, b);
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_pair(a, b);
        MultiPoly r(std::max(a.nvars_, b.nvars_));
        if (a.is_zero() || b.is_zero()) return r;
        std::vector<std::pair<Monomial, QuadExt>> prods;
        prods.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) prods.emplace_back(ma * mb, ca * cb);
        std::sort(prods.begin(), prods.end(),
                  [](const auto& x, const auto& y) { return GradedLexLess{}(x.first, y.first); });
        for (std::size_t i = 0; i < prods.size();) {
            Monomial m = prods[i].first;
            QuadExt acc = prods[i].second;
            std::size_t j = i + 1;
            while (j < prods.size() && prods[j].first == m) {
                acc += prods[j].second;
                ++j;
            }
            if (!acc.is_zero()) r.terms_.emplace_hint(r.terms_.end(), m, acc);
            i = j;
        }
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const QuadExt& s) {
        MultiPoly r(a.nvars_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
        return r;
    }
    friend MultiPoly operator*(const QuadExt& s, const MultiPoly& a) { return a * s; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned e) const {
        MultiPoly acc = constant(nvars_, QuadExt(1)), b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    MultiPoly derivative(int var) const {
        MultiPoly r(nvars_);
        for (const auto& [m, c] : terms_) {
            unsigned char e = m.e[static_cast<std::size_t>(var)];
            if (e == 0) continue;
            Monomial d = m;
            d.e[static_cast<std::size_t>(var)] = static_cast<unsigned char>(e - 1);
            r.add_term(d, c * QuadExt(static_cast<long>(e)));
        }
        return r;
    }

    MultiPoly substitute_zero(int var) const {
        MultiPoly r(nvars_);
        for (const auto& [m, c] : terms_)
            if (m.e[static_cast<std::size_t>(var)] == 0) r.terms_.emplace(m, c);
        return r;
    }

    // remove an unused variable slot, renumbering the ones above it
    MultiPoly drop_var(int var) const {
        MultiPoly r(nvars_ - 1);
        for (const auto& [m, c] : terms_) {
            if (m.e[static_cast<std::size_t>(var)] != 0)
                throw std::invalid_argument("drop_var: variable still present");
            Monomial d;
            int k = 0;
            for (int i = 0; i < nvars_; ++i) {
                if (i == var) continue;
                d.e[static_cast<std::size_t>(k++)] = m.e[static_cast<std::size_t>(i)];
            }
            r.terms_.emplace(d, c);
        }
        return r;
    }

    QuadExt eval(std::span<const QuadExt> point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("MultiPoly::eval: arity mismatch");
        // cache powers per variable
        std::array<std::vector<QuadExt>, kMaxVars> pows;
        for (int v = 0; v < nvars_; ++v) pows[static_cast<std::size_t>(v)] = {QuadExt(1)};
        auto power = [&](int v, unsigned char e) -> const QuadExt& {
            auto& vec = pows[static_cast<std::size_t>(v)];
            while (vec.size() <= e) vec.push_back(vec.back() * point[static_cast<std::size_t>(v)]);
            return vec[e];
        };
        QuadExt acc(0);
        for (const auto& [m, c] : terms_) {
            QuadExt t = c;
            for (int v = 0; v < nvars_; ++v) {
                unsigned char e = m.e[static_cast<std::size_t>(v)];
                if (e) t *= power(v, e);
            }
            acc += t;
        }
        return acc;
    }

    // substitute x_i -> polys[i]
    MultiPoly substitute(std::span<const MultiPoly> polys) const {
        if (static_cast<int>(polys.size()) != nvars_)
            throw std::invalid_argument("MultiPoly::substitute: arity mismatch");
        int target_vars = polys.empty() ? 0 : polys[0].nvars();
        std::array<std::vector<MultiPoly>, kMaxVars> pows;
        for (int v = 0; v < nvars_; ++v)
            pows[static_cast<std::size_t>(v)] = {constant(target_vars, QuadExt(1))};
        auto power = [&](int v, unsigned char e) -> const MultiPoly& {
            auto& vec = pows[static_cast<std::size_t>(v)];
            while (vec.size() <= e) vec.push_back(vec.back() * polys[static_cast<std::size_t>(v)]);
            return vec[e];
        };
        MultiPoly acc(target_vars);
        for (const auto& [m, c] : terms_) {
            MultiPoly t = constant(target_vars, c);
            for (int v = 0; v < nvars_; ++v) {
                unsigned char e = m.e[static_cast<std::size_t>(v)];
                if (e) t = t * power(v, e);
            }
            acc = acc + t;
        }
        return acc;
    }

    // restriction to the line p + t q, as a univariate polynomial in t
    UniPoly<QuadExt> restrict_line(std::span<const QuadExt> p, std::span<const QuadExt> q) const {
        using UP = UniPoly<QuadExt>;
        std::array<std::vector<UP>, kMaxVars> pows;
        for (int v = 0; v < nvars_; ++v)
            pows[static_cast<std::size_t>(v)] = {UP::constant(QuadExt(1))};
        auto power = [&](int v, unsigned char e) -> const UP& {
            auto& vec = pows[static_cast<std::size_t>(v)];
            UP line(std::vector<QuadExt>{p[static_cast<std::size_t>(v)],
                                         q[static_cast<std::size_t>(v)]});
            while (vec.size() <= e) vec.push_back(vec.back() * line);
            return vec[e];
        };
        UP acc;
        for (const auto& [m, c] : terms_) {
            UP t = UP::constant(c);
            for (int v = 0; v < nvars_; ++v) {
                unsigned char e = m.e[static_cast<std::size_t>(v)];
                if (e) t = t * power(v, e);
            }
            acc = acc + t;
        }
        return acc;
    }

    // single-divisor exact division; nullopt when not divisible
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const {
        if (d.is_zero()) throw std::domain_error("MultiPoly: division by zero");
        MultiPoly q(nvars_), r = *this;
        const Monomial& dm = d.leading_monomial();
        const QuadExt& dc = d.leading_coeff();
        while (!r.is_zero()) {
            const Monomial& rm = r.leading_monomial();
            if (!dm.divides(rm)) return std::nullopt;
            Monomial qm = rm / dm;
            QuadExt qc = r.leading_coeff() / dc;
            q.add_term(qm, qc);
            // r -= (qc * qm) * d
            for (const auto& [m, c] : d.terms_) r.add_term(qm * m, -(qc * c));
        }
        return q;
    }

    // positive rational c such that (1/c) * this has coprime integer
    // coefficient data; 1 for the zero polynomial
    Rat content() const {
        Int g(0);
        Int lcm_den(1);
        auto absorb = [&](const Rat& v) {
            if (v == 0) return;
            g = int_gcd(g, v.get_num());
            Int d = v.get_den();
            lcm_den = lcm_den / int_gcd(lcm_den, d) * d;
        };
        for (const auto& [m, c] : terms_) {
            absorb(c.re());
            absorb(c.im());
        }
        if (g == 0) return Rat(1);
        return make_rat(abs(g), lcm_den);
    }

    MultiPoly normalized() const {
        if (is_zero()) return *this;
        Rat c = content();
        MultiPoly r = *this * QuadExt(Rat(1) / c);
        // fix sign of the leading coefficient's first nonzero part
        const QuadExt& lead = r.leading_coeff();
        Rat probe = lead.re() != 0 ? lead.re() : lead.im();
        if (probe < 0) r = -r;
        return r;
    }

    std::string str(std::span<const std::string> names = {}) const;

private:
    static void check_vars(int n) {
        if (n < 1 || n > kMaxVars) throw std::invalid_argument("MultiPoly: 1..4 variables");
    }
    static void check_pair(const MultiPoly& a, const MultiPoly& b) {
        if (a.nvars_ != b.nvars_ && !a.is_zero() && !b.is_zero())
            throw std::invalid_argument("MultiPoly: arity mismatch");
    }

    int nvars_;
    std::map<Monomial, QuadExt, GradedLexLess> terms_;
};

inline std::string MultiPoly::str(std::span<const std::string> names) const {
    if (is_zero()) return "0";
    static const std::string kDefault[] = {"x0", "x1", "x2", "x3"};
    auto name = [&](int v) -> const std::string& {
        if (static_cast<std::size_t>(v) < names.size()) return names[static_cast<std::size_t>(v)];
        return kDefault[v];
    };
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string coef = it->second.str();
        bool neg = !coef.empty() && coef[0] == '-' &&
                   coef.find_first_of("+-", 1) == std::string::npos;
        std::string body;
        for (int v = 0; v < nvars_; ++v) {
            unsigned char e = it->first.e[static_cast<std::size_t>(v)];
            if (!e) continue;
            if (!body.empty()) body += "*";
            body += name(v);
            if (e > 1) body += "^" + std::to_string(static_cast<int>(e));
        }
        bool wrapped = coef.find_first_of("+-", 1) != std::string::npos && !body.empty();
        std::string piece;
        if (body.empty()) piece = wrapped ? "(" + coef + ")" : coef;
        else if (!wrapped && coef == "1") piece = body;
        else if (!wrapped && coef == "-1") piece = "-" + body;
        else piece = (wrapped ? "(" + coef + ")" : coef) + "*" + body;
        if (out.empty()) {
            out = piece;
        } else if (!piece.empty() && piece[0] == '-' && !wrapped) {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
        (void)neg;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

// ---- full multivariate gcd via primitive subresultant remainder sequences ----

namespace mgcd_detail {

// dense view in one main variable, coefficients multivariate in the rest
inline std::vector<MultiPoly> split_by_var(const MultiPoly& p, int var) {
    std::vector<MultiPoly> out;
    for (const auto& [m, c] : p.terms()) {
        unsigned char e = m.e[static_cast<std::size_t>(var)];
        if (out.size() <= e) out.resize(e + 1, MultiPoly(p.nvars()));
        Monomial rest = m;
        rest.e[static_cast<std::size_t>(var)] = 0;
        out[e].add_term(rest, c);
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

inline MultiPoly join_by_var(const std::vector<MultiPoly>& coeffs, int var, int nvars) {
    MultiPoly r(nvars);
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        for (const auto& [m, c] : coeffs[e].terms()) {
            Monomial full = m;
            full.e[static_cast<std::size_t>(var)] = static_cast<unsigned char>(e);
            r.add_term(full, c);
        }
    return r;
}

}  // namespace mgcd_detail

MultiPoly multi_gcd(const MultiPoly& a, const MultiPoly& b);

namespace mgcd_detail {

inline MultiPoly list_gcd(const std::vector<MultiPoly>& list) {
    MultiPoly g;
    bool first = true;
    for (const auto& p : list) {
        if (p.is_zero()) continue;
        g = first ? p : multi_gcd(g, p);
        first = false;
        if (!g.is_zero() && g.total_degree() == 0) break;
    }
    if (first) return MultiPoly();
    return g;
}

}  // namespace mgcd_detail

// Total recursive gcd (primitive PRS). Slow but exact; the map-reduction
// pipeline only reaches it when both the hint pass and the random-line
// certificate fail.
inline MultiPoly multi_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    int nv = a.nvars();

    // choose a main variable present in either operand
    int var = -1;
    long best = -1;
    for (int v = 0; v < nv; ++v) {
        long da = 0, db = 0;
        for (const auto& [m, c] : a.terms()) da = std::max<long>(da, m.e[static_cast<std::size_t>(v)]);
        for (const auto& [m, c] : b.terms()) db = std::max<long>(db, m.e[static_cast<std::size_t>(v)]);
        if (da == 0 && db == 0) continue;
        if (da == 0 || db == 0) continue;  // variable missing from one side: gcd can't use it
        long score = std::max(da, db);
        if (best < 0 || score < best) {
            best = score;
            var = v;
        }
    }
    if (var < 0) {
        // no shared variable: the gcd is the gcd of coefficient contents only
        // (a constant), times any common monomial structure, which is none.
        return MultiPoly::constant(nv, QuadExt(1));
    }

    using mgcd_detail::join_by_var;
    using mgcd_detail::list_gcd;
    using mgcd_detail::split_by_var;

    std::vector<MultiPoly> A = split_by_var(a, var), B = split_by_var(b, var);
    if (A.size() < B.size()) std::swap(A, B);

    MultiPoly contA = list_gcd(A), contB = list_gcd(B);
    auto divide_list = [](std::vector<MultiPoly>& L, const MultiPoly& d) {
        for (auto& c : L)
            if (!c.is_zero()) {
                auto q = c.divide_exact(d);
                if (!q) throw std::logic_error("multi_gcd: content division failed");
                c = *q;
            }
    };
    divide_list(A, contA);
    divide_list(B, contB);
    MultiPoly cont_gcd = multi_gcd(contA, contB);

    // primitive PRS in the main variable
    auto prem = [&](const std::vector<MultiPoly>& U, const std::vector<MultiPoly>& V) {
        std::vector<MultiPoly> R = U;
        const MultiPoly& lv = V.back();
        long du = static_cast<long>(U.size()) - 1, dv = static_cast<long>(V.size()) - 1;
        for (long k = du; k >= dv; --k) {
            if (R.empty() || static_cast<long>(R.size()) - 1 < k) continue;
            // R = lv * R - lead(R) x^(k-dv) * V
            MultiPoly lead = R[static_cast<std::size_t>(k)];
            if (lead.is_zero()) continue;
            for (auto& c : R) c = c * lv;
            for (long j = 0; j <= dv; ++j) {
                auto idx = static_cast<std::size_t>(k - dv + j);
                R[idx] = R[idx] - lead * V[static_cast<std::size_t>(j)];
            }
            while (!R.empty() && R.back().is_zero()) R.pop_back();
        }
        return R;
    };

    while (true) {
        if (B.empty()) {
            MultiPoly result = join_by_var(A, var, nv);
            MultiPoly cont = list_gcd(A);
            auto pp = result.divide_exact(cont);
            if (!pp) throw std::logic_error("multi_gcd: primitive part failed");
            return (cont_gcd * *pp).normalized();
        }
        if (B.size() == 1) {
            // gcd of primitive parts is 1 in the main variable
            return cont_gcd.normalized();
        }
        std::vector<MultiPoly> R = prem(A, B);
        // keep the sequence primitive to control growth
        if (!R.empty()) {
            MultiPoly c = list_gcd(R);
            if (!c.is_zero() && !(c.total_degree() == 0 && c.term_count() == 1)) {
                divide_list(R, c);
            } else if (!c.is_zero()) {
                divide_list(R, c);  // scalar content still worth removing
            }
        }
        A = std::move(B);
        B = std::move(R);
    }
}

}  // namespace cremona
