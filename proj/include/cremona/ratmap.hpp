#pragma once

// Rational maps of projective space: tuples of homogeneous polynomials with
// composition, common-factor reduction, point evaluation, plane restriction,
// and jacobian determinants.
//
// Reduction strategy, in order of increasing cost:
//   1. repeated trial division by hint factors (coordinate forms, tetrahedron
//      faces, caller-supplied curve equations),
//   2. a certificate: restrict all coordinates to random rational lines and
//      check that the univariate gcd is constant,
//   3. the full recursive multivariate gcd.
// Step 3 is total, only slow; the certificate decides whether it is needed.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cremona/multipoly.hpp"
#include "cremona/numbers.hpp"
#include "cremona/quadext.hpp"

namespace cremona {

class ProjPoint {
public:
    ProjPoint() = default;
    explicit ProjPoint(std::vector<QuadExt> coords) : c_(std::move(coords)) {
        bool nonzero = false;
        for (const auto& v : c_) nonzero = nonzero || !v.is_zero();
        if (!nonzero) throw std::invalid_argument("ProjPoint: all coordinates zero");
    }

    std::size_t dim() const { return c_.size(); }
    const QuadExt& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<QuadExt>& coords() const { return c_; }

    // equality up to a global scalar, by pairwise cross-multiplication
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = i + 1; j < a.c_.size(); ++j)
                if (a.c_[i] * b.c_[j] != a.c_[j] * b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) out += " : ";
            out += c_[i].str();
        }
        return out + "]";
    }

private:
    std::vector<QuadExt> c_;
};

class RationalMap {
public:
    RationalMap() = default;
    explicit RationalMap(std::vector<MultiPoly> coords) : c_(std::move(coords)) {
        if (c_.empty()) throw std::invalid_argument("RationalMap: no coordinates");
        int deg = -1;
        bool any = false;
        for (const auto& p : c_) {
            if (p.is_zero()) continue;
            any = true;
            if (!p.is_homogeneous())
                throw std::invalid_argument("RationalMap: non-homogeneous coordinate");
            if (deg < 0) deg = p.total_degree();
            else if (deg != p.total_degree())
                throw std::invalid_argument("RationalMap: mixed coordinate degrees");
        }
        if (!any) throw std::invalid_argument("RationalMap: zero map");
    }

    int source_vars() const { return c_.front().nvars(); }
    std::size_t target_coords() const { return c_.size(); }
    int degree() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return p.total_degree();
        return -1;
    }

    const MultiPoly& coord(std::size_t i) const { return c_[i]; }
    const std::vector<MultiPoly>& coords() const { return c_; }

    friend bool operator==(const RationalMap& a, const RationalMap& b) { return a.c_ == b.c_; }

    // equality up to one global scalar
    bool proportional_to(const RationalMap& o) const {
        if (c_.size() != o.c_.size()) return false;
        // find reference pair
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero() != o.c_[i].is_zero()) return false;
        }
        const MultiPoly *ra = nullptr, *rb = nullptr;
        std::size_t ref = 0;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) {
                ra = &c_[i];
                rb = &o.c_[i];
                ref = i;
                break;
            }
        if (!ra) return true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i == ref || c_[i].is_zero()) continue;
            if (c_[i] * *rb != o.c_[i] * *ra) return false;
        }
        return true;
    }

    bool is_identity() const {
        if (c_.size() != static_cast<std::size_t>(source_vars())) return false;
        RationalMap id = identity(source_vars());
        return proportional_to(id);
    }

    static RationalMap identity(int nvars) {
        std::vector<MultiPoly> c;
        for (int i = 0; i < nvars; ++i) c.push_back(MultiPoly::variable(nvars, i));
        return RationalMap(std::move(c));
    }

    std::string str(std::span<const std::string> names = {}) const {
        std::string out = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) out += " : ";
            out += c_[i].str(names);
        }
        return out + "]";
    }

private:
    std::vector<MultiPoly> c_;
};

// coordinate-wise substitution; NOT reduced
inline RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
    if (static_cast<std::size_t>(outer.source_vars()) != inner.target_coords())
        throw std::invalid_argument("compose: dimension mismatch");
    std::vector<MultiPoly> c;
    c.reserve(outer.target_coords());
    for (std::size_t i = 0; i < outer.target_coords(); ++i)
        c.push_back(outer.coord(i).substitute(inner.coords()));
    return RationalMap(std::move(c));
}

namespace reduce_detail {

inline bool divide_all(std::vector<MultiPoly>& coords, const MultiPoly& d) {
    std::vector<MultiPoly> q(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) {
            q[i] = coords[i];
            continue;
        }
        auto r = coords[i].divide_exact(d);
        if (!r) return false;
        q[i] = std::move(*r);
    }
    coords = std::move(q);
    return true;
}

// gcd of the restrictions to a random rational line; constant means the
// coordinates are certified coprime
inline bool line_certificate(const std::vector<MultiPoly>& coords, Rng& rng, int tries) {
    int nv = coords.front().nvars();
    for (int t = 0; t < tries; ++t) {
        std::vector<QuadExt> p(static_cast<std::size_t>(nv)), q(static_cast<std::size_t>(nv));
        for (int v = 0; v < nv; ++v) {
            p[static_cast<std::size_t>(v)] = QuadExt(rng.rat(1000));
            q[static_cast<std::size_t>(v)] = QuadExt(rng.rat(1000));
        }
        UniPoly<QuadExt> g;
        bool degenerate = false;
        for (const auto& c : coords) {
            if (c.is_zero()) continue;
            UniPoly<QuadExt> r = c.restrict_line(p, q);
            if (r.degree() != c.total_degree()) {
                degenerate = true;  // line lost degree; resample
                break;
            }
            g = g.is_zero() ? r : poly_gcd(g, r);
            if (g.degree() == 0) break;
        }
        if (degenerate) continue;
        if (g.degree() == 0) return true;
    }
    return false;
}

}  // namespace reduce_detail

// Divides the coordinates by their full common polynomial factor.
inline RationalMap reduce_map(const RationalMap& m, std::span<const MultiPoly> hints,
                              std::uint64_t seed = 1) {
    std::vector<MultiPoly> coords = m.coords();

    // drop the common rational content first; smaller numbers everywhere after
    {
        Rat content(0);
        for (const auto& c : coords) {
            if (c.is_zero()) continue;
            content = rat_gcd(content, c.content());
        }
        if (content != 0 && content != 1) {
            QuadExt inv(Rat(1) / content);
            for (auto& c : coords) c = c * inv;
        }
    }

    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& h : hints) {
            if (h.is_zero() || h.total_degree() < 1) continue;
            while (reduce_detail::divide_all(coords, h)) progress = true;
        }
    }

    Rng rng(seed);
    if (!reduce_detail::line_certificate(coords, rng, 3)) {
        // fall back to the full gcd
        MultiPoly g;
        for (const auto& c : coords) {
            if (c.is_zero()) continue;
            g = g.is_zero() ? c : multi_gcd(g, c);
            if (!g.is_zero() && g.total_degree() == 0) break;
        }
        if (!g.is_zero() && g.total_degree() > 0) {
            if (!reduce_detail::divide_all(coords, g))
                throw std::logic_error("reduce_map: gcd does not divide");
        }
    }

    // scale away the common rational content
    Rat content(0);
    for (const auto& c : coords) {
        if (c.is_zero()) continue;
        content = rat_gcd(content, c.content());
    }
    if (content != 0 && content != 1) {
        QuadExt inv(Rat(1) / content);
        for (auto& c : coords) c = c * inv;
    }
    return RationalMap(std::move(coords));
}

// image point, or nullopt (indeterminate) when all coordinates vanish
inline std::optional<ProjPoint> evaluate(const RationalMap& m, const ProjPoint& p) {
    if (p.dim() != static_cast<std::size_t>(m.source_vars()))
        throw std::invalid_argument("evaluate: dimension mismatch");
    std::vector<QuadExt> img;
    img.reserve(m.target_coords());
    bool nonzero = false;
    for (std::size_t i = 0; i < m.target_coords(); ++i) {
        img.push_back(m.coord(i).eval(p.coords()));
        nonzero = nonzero || !img.back().is_zero();
    }
    if (!nonzero) return std::nullopt;
    return ProjPoint(std::move(img));
}

// The induced map on the invariant plane {x_var = 0}, reduced.
inline RationalMap restrict_to_plane(const RationalMap& m, int var,
                                     std::span<const MultiPoly> hints = {},
                                     std::uint64_t seed = 1) {
    if (m.target_coords() != static_cast<std::size_t>(m.source_vars()))
        throw std::invalid_argument("restrict_to_plane: need a self-map");
    if (!m.coord(static_cast<std::size_t>(var)).substitute_zero(var).is_zero())
        throw std::invalid_argument("restrict_to_plane: plane is not invariant");
    std::vector<MultiPoly> c;
    for (std::size_t i = 0; i < m.target_coords(); ++i) {
        if (static_cast<int>(i) == var) continue;
        c.push_back(m.coord(i).substitute_zero(var).drop_var(var));
    }
    std::vector<MultiPoly> restricted_hints;
    for (const auto& h : hints) {
        MultiPoly r = h.substitute_zero(var);
        if (!r.is_zero()) restricted_hints.push_back(r.drop_var(var));
    }
    return reduce_map(RationalMap(std::move(c)), restricted_hints, seed);
}

// determinant of the matrix of partial derivatives of the lift
inline MultiPoly jacobian_det(const RationalMap& m) {
    std::size_t n = m.target_coords();
    if (n != static_cast<std::size_t>(m.source_vars()))
        throw std::invalid_argument("jacobian_det: need a self-map lift");
    std::vector<std::vector<MultiPoly>> jac(n, std::vector<MultiPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            jac[i][j] = m.coord(i).derivative(static_cast<int>(j));
    // Laplace expansion along rows
    struct Expander {
        const std::vector<std::vector<MultiPoly>>& a;
        MultiPoly det(std::vector<int> cols, std::size_t row) const {
            if (cols.size() == 1)
                return a[row][static_cast<std::size_t>(cols[0])];
            MultiPoly acc(a[0][0].nvars());
            int sgn = 1;
            for (std::size_t k = 0; k < cols.size(); ++k) {
                std::vector<int> rest;
                for (std::size_t j = 0; j < cols.size(); ++j)
                    if (j != k) rest.push_back(cols[j]);
                const MultiPoly& pivot = a[row][static_cast<std::size_t>(cols[k])];
                if (!pivot.is_zero()) {
                    MultiPoly sub = det(rest, row + 1);
                    acc = (sgn > 0) ? acc + pivot * sub : acc - pivot * sub;
                }
                sgn = -sgn;
            }
            return acc;
        }
    };
    std::vector<int> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = static_cast<int>(i);
    return Expander{jac}.det(cols, 0);
}

// monomial part x^a * faces^b * residual factorization against a hint list
struct FactoredPoly {
    std::vector<std::pair<MultiPoly, unsigned>> factors;
    MultiPoly residual;
    QuadExt scalar{1};
};

inline FactoredPoly factor_against_hints(const MultiPoly& p, std::span<const MultiPoly> hints) {
    FactoredPoly out;
    out.residual = p;
    for (const auto& h : hints) {
        if (h.is_zero() || h.total_degree() < 1) continue;
        unsigned mult = 0;
        while (true) {
            auto q = out.residual.divide_exact(h);
            if (!q) break;
            out.residual = std::move(*q);
            ++mult;
        }
        if (mult > 0) out.factors.emplace_back(h, mult);
    }
    if (!out.residual.is_zero() && out.residual.total_degree() == 0) {
        out.scalar = out.residual.leading_coeff();
        out.residual = MultiPoly(out.residual.nvars());
    }
    return out;
}

}  // namespace cremona
