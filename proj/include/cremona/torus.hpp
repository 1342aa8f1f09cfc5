#pragma once

// Spectra of integer 6x6 torus actions through their reciprocal
// characteristic sextics t^6 + a t^5 + b t^4 + c t^3 + b t^2 + a t + 1.
//
// A sextic is admissible when it is irreducible and its trace cubic
// theta(s) = s^3 + a s^2 + (b-3) s + (c - 2a) has exactly one real root,
// located in (-2, 2): the corresponding eigenvalue pair sits on the unit
// circle while the remaining quadruple stays off it and off the reals. The
// first dynamical degree is |alpha|^2 for the largest eigenvalue alpha; it
// equals the second dynamical degree exactly when the circle pair exists,
// and the map preserves a fibration exactly when that degree is quadratic
// or a Salem number.

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cremona/interval.hpp"
#include "cremona/intmatrix.hpp"
#include "cremona/numclass.hpp"
#include "cremona/polyfactor.hpp"
#include "cremona/sturm.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

struct ReciprocalSextic {
    long a = 0, b = 0, c = 0;

    UniPoly<Int> poly() const {
        return UniPoly<Int>(std::vector<Int>{Int(1), Int(a), Int(b), Int(c), Int(b), Int(a),
                                             Int(1)});
    }
    // chi(t)/t^3 under s = t + 1/t
    UniPoly<Int> theta() const {
        return UniPoly<Int>(std::vector<Int>{Int(c - 2 * a), Int(b - 3), Int(a), Int(1)});
    }
    friend bool operator==(const ReciprocalSextic& x, const ReciprocalSextic& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
};

struct AdmissibleCertificate {
    bool irreducible = false;
    bool trace_has_single_real_root = false;
    bool trace_root_in_window = false;  // inside (-2, 2)
    bool admissible() const {
        return irreducible && trace_has_single_real_root && trace_root_in_window;
    }
};

inline AdmissibleCertificate admissible(const ReciprocalSextic& s) {
    AdmissibleCertificate cert;
    cert.irreducible = is_irreducible_q(s.poly());
    if (!cert.irreducible) return cert;  // reducible inputs never reach the Sturm step
    UniPoly<Rat> theta = to_rational(s.theta());
    // irreducibility of chi rules out roots of theta at +-2 (t = +-1)
    cert.trace_has_single_real_root = sturm_count_real(theta) == 1;
    cert.trace_root_in_window = sturm_count(theta, Rat(-2), Rat(2)) == 1;
    return cert;
}

// all admissible sextics with |a|, |b|, |c| <= bound, in lexicographic order
inline std::vector<ReciprocalSextic> torus_search(long bound) {
    if (bound < 0) throw std::invalid_argument("torus_search: bound >= 0");
    std::vector<ReciprocalSextic> out;
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
            for (long c = -bound; c <= bound; ++c) {
                ReciprocalSextic s{a, b, c};
                if (admissible(s).admissible()) out.push_back(s);
            }
    return out;
}

struct ComplexBox {
    RatInterval re, im;

    RatInterval norm() const { return re * re + im * im; }  // |z|^2
    ComplexBox conj() const { return ComplexBox{re, -im}; }

    friend ComplexBox operator+(const ComplexBox& x, const ComplexBox& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend ComplexBox operator*(const ComplexBox& x, const ComplexBox& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    std::string str() const { return re.str() + " + i " + im.str(); }
};

namespace torus_detail {

// complex interval sqrt with the principal branch widened outward
inline ComplexBox box_sqrt(const ComplexBox& z, const Rat& eps) {
    RatInterval mod2 = z.norm();
    RatInterval mod = interval_sqrt(mod2, eps);
    // u = sqrt((|z| + re)/2), v = sign(im) sqrt((|z| - re)/2)
    RatInterval half(make_rat(1, 2), make_rat(1, 2));
    RatInterval u2 = (mod + z.re) * half;
    RatInterval v2 = (mod - z.re) * half;
    if (u2.lo < 0) u2.lo = 0;
    if (v2.lo < 0) v2.lo = 0;
    RatInterval u = interval_sqrt(u2, eps);
    RatInterval v = interval_sqrt(v2, eps);
    bool im_nonneg = z.im.lo >= 0;
    return {u, im_nonneg ? v : -v};
}

}  // namespace torus_detail

struct TorusSpectrum {
    ComplexBox alpha;  // |alpha| > 1, non-real
    ComplexBox beta;   // on the unit circle (exact, from the trace certificate)
    ComplexBox gamma;  // 1/conj(alpha)
    RatInterval lambda1;  // |alpha|^2
    RatInterval lambda2;  // = lambda1; consistency against 1/|gamma|^2 is checked
    bool beta_on_circle = false;
    bool alpha_nonreal = false;
    bool lambda2_consistent = false;     // 1 inside lambda1 * |gamma|^2
    bool reciprocity_consistent = false;  // 1 inside alpha * conj(gamma)
    bool lambda1_equals_lambda2 = false;  // exact flag, equals beta_on_circle
};

inline TorusSpectrum spectrum(const ReciprocalSextic& s, const Rat& eps = make_rat(1, 1000000)) {
    auto cert = admissible(s);
    if (!cert.admissible()) throw std::invalid_argument("spectrum: sextic is not admissible");

    UniPoly<Rat> theta = to_rational(s.theta());
    TorusSpectrum out;
    out.beta_on_circle = true;  // certified by the trace window
    out.lambda1_equals_lambda2 = true;

    // refine the real trace root until the derived boxes separate
    Rat window = eps;
    for (int refine = 0; refine < 12; ++refine) {
        Interval s0 = sturm_bisect(theta, Rat(-2), Rat(2), window);
        RatInterval s0i(s0.lo, s0.hi);

        // beta pair: beta + conj(beta) = s0, |beta| = 1
        RatInterval four(4, 4);
        RatInterval beta_im2 = (four - s0i * s0i) * RatInterval(make_rat(1, 4), make_rat(1, 4));
        if (beta_im2.lo < 0) beta_im2.lo = 0;
        out.beta = {s0i * RatInterval(make_rat(1, 2), make_rat(1, 2)),
                    interval_sqrt(beta_im2, window)};

        // complex pair of theta: sum = -a - s0, product = -(c - 2a)/s0
        RatInterval a_i(Rat(s.a), Rat(s.a));
        RatInterval sum = -a_i - s0i;
        if (s0i.contains(Rat(0))) {
            window /= 16;
            continue;
        }
        RatInterval prod =
            RatInterval(Rat(-(s.c - 2 * s.a)), Rat(-(s.c - 2 * s.a))) / s0i;
        ComplexBox s1;
        s1.re = sum * RatInterval(make_rat(1, 2), make_rat(1, 2));
        RatInterval im2 = prod - s1.re * s1.re;
        if (im2.lo <= 0) {
            window /= 16;
            continue;
        }
        s1.im = interval_sqrt(im2, window);

        // alpha solves t^2 - s1 t + 1; take the branch with |alpha| > 1
        ComplexBox disc = s1 * s1 + ComplexBox{RatInterval(-4, -4), RatInterval(0, 0)};
        ComplexBox root = torus_detail::box_sqrt(disc, window);
        RatInterval half(make_rat(1, 2), make_rat(1, 2));
        ComplexBox cand1{(s1.re + root.re) * half, (s1.im + root.im) * half};
        ComplexBox cand2{(s1.re - root.re) * half, (s1.im - root.im) * half};
        RatInterval n1 = cand1.norm(), n2 = cand2.norm();
        ComplexBox alpha, gamma_conj;
        if (n1.lo > 1 && n2.hi < 1) {
            alpha = cand1;
            gamma_conj = cand2;
        } else if (n2.lo > 1 && n1.hi < 1) {
            alpha = cand2;
            gamma_conj = cand1;
        } else {
            window /= 16;
            continue;
        }
        out.alpha = alpha;
        out.gamma = gamma_conj.conj();
        out.alpha_nonreal = alpha.im.lo > 0 || alpha.im.hi < 0;
        out.lambda1 = alpha.norm();
        out.lambda2 = out.lambda1;
        out.lambda2_consistent = (out.lambda1 * out.gamma.norm()).contains(Rat(1));
        ComplexBox prod_ag = alpha * gamma_conj;  // alpha * conj(gamma) = 1 exactly
        out.reciprocity_consistent =
            prod_ag.re.contains(Rat(1)) && prod_ag.im.contains(Rat(0));
        if (out.lambda1.width() < eps || refine == 11) return out;
        window /= 16;
    }
    return out;
}

// ---- fibration criterion ----

enum class FibrationVerdict { NonFibered, Fibered, KroneckerUnit, Undetermined };

inline const char* to_string(FibrationVerdict v) {
    switch (v) {
        case FibrationVerdict::NonFibered: return "non-fibered";
        case FibrationVerdict::Fibered: return "fibered";
        case FibrationVerdict::KroneckerUnit: return "kronecker-unit";
        case FibrationVerdict::Undetermined: return "undetermined";
    }
    return "?";
}

struct FibrationReport {
    FibrationVerdict verdict = FibrationVerdict::Undetermined;
    UniPoly<Int> lambda1_min_poly;  // empty when not computed
    NumberClass lambda1_class = NumberClass::Other;
    bool degree_six_regime = false;  // irreducible with the circle pair
    std::string note;
};

namespace torus_detail {

inline UniPoly<Rat> lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& samples) {
    UniPoly<Rat> acc;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        UniPoly<Rat> term = UniPoly<Rat>::constant(samples[i].second);
        for (std::size_t j = 0; j < samples.size(); ++j) {
            if (i == j) continue;
            UniPoly<Rat> lin(std::vector<Rat>{-samples[j].first, Rat(1)});
            term = term * lin * (Rat(1) / (samples[i].first - samples[j].first));
        }
        acc = acc + term;
    }
    return acc;
}

// Res_t(chi(t), t^6 chi(x/t)): the degree-36 polynomial vanishing on all
// pairwise products of roots of chi; computed by sampling x and
// interpolating
inline UniPoly<Rat> product_resultant(const UniPoly<Int>& chi) {
    UniPoly<Rat> chi_q = to_rational(chi);
    long n = chi.degree();
    long target = n * n;
    std::vector<std::pair<Rat, Rat>> samples;
    long x0 = -target / 2;
    while (samples.size() < static_cast<std::size_t>(target + 1)) {
        Rat x(x0++);
        // B(t) = sum_k a_k x^k t^(n-k)
        std::vector<Rat> b(static_cast<std::size_t>(n) + 1, Rat(0));
        for (long k = 0; k <= n; ++k)
            b[static_cast<std::size_t>(n - k)] =
                chi_q[static_cast<std::size_t>(k)] * rat_pow(x, k);
        samples.emplace_back(x, resultant(chi_q, UniPoly<Rat>(std::move(b))));
    }
    return lagrange_interpolate(samples);
}

// the factor of `poly` vanishing on the (isolating) interval
inline std::optional<UniPoly<Int>> select_factor_at(const UniPoly<Rat>& poly,
                                                    const RatInterval& box) {
    std::vector<UniPoly<Int>> hits;
    for (const auto& [f, m] : factor_over_q(poly)) {
        UniPoly<Rat> fq = to_rational(f);
        if (fq.eval(box.lo) == 0 || fq.eval(box.hi) == 0) return std::nullopt;
        if (sturm_count(squarefree_part(fq), box.lo, box.hi) > 0) hits.push_back(f);
    }
    if (hits.size() != 1) return std::nullopt;
    return hits.front();
}

}  // namespace torus_detail

inline FibrationReport fibration_criterion(const ReciprocalSextic& s) {
    FibrationReport rep;
    UniPoly<Int> chi = s.poly();

    auto strip = strip_cyclotomic(to_rational(chi));
    if (strip.core.degree() <= 0) {
        rep.verdict = FibrationVerdict::KroneckerUnit;
        rep.lambda1_class = NumberClass::CyclotomicProduct;
        rep.note = "all eigenvalues are roots of unity";
        return rep;
    }

    auto cert = admissible(s);
    if (cert.admissible()) {
        rep.degree_six_regime = true;
        // lambda1 = |alpha|^2 has its minimal polynomial inside the product
        // resultant; select by the certified enclosure and classify
        TorusSpectrum spec = spectrum(s, make_rat(1, 10000000));
        UniPoly<Rat> res = torus_detail::product_resultant(chi);
        UniPoly<Rat> core = strip_cyclotomic(squarefree_part(res)).core;
        auto factor = torus_detail::select_factor_at(core, spec.lambda1);
        if (factor) {
            rep.lambda1_min_poly = *factor;
            rep.lambda1_class = classify(*factor).verdict;
        }
        bool quadratic_or_salem = rep.lambda1_class == NumberClass::QuadraticUnit ||
                                  rep.lambda1_class == NumberClass::Salem;
        rep.verdict = quadratic_or_salem ? FibrationVerdict::Undetermined
                                         : FibrationVerdict::NonFibered;
        rep.note = quadratic_or_salem
                       ? "degree-6 circle pair but quadratic/salem product: inconsistent"
                       : "irreducible sextic with unit-modulus pair of full degree";
        return rep;
    }

    // reducible or no circle pair: locate the largest real eigenvalue-square
    UniPoly<Rat> core = strip.core;
    if (sturm_count_above(squarefree_part(core), Rat(1)) >= 1) {
        Interval mu = isolate_largest_real_root(core, make_rat(1, 1000000), Rat(1));
        UniPoly<Rat> res = torus_detail::product_resultant(primitive_integer(core));
        RatInterval lam(mu.lo * mu.lo, mu.hi * mu.hi);
        auto factor = torus_detail::select_factor_at(squarefree_part(res), lam);
        if (factor) {
            rep.lambda1_min_poly = *factor;
            rep.lambda1_class = classify(*factor).verdict;
            bool quadratic_or_salem = rep.lambda1_class == NumberClass::QuadraticUnit ||
                                      rep.lambda1_class == NumberClass::Salem;
            rep.verdict = quadratic_or_salem ? FibrationVerdict::Fibered
                                             : FibrationVerdict::Undetermined;
            rep.note = "largest eigenvalue real; product classified";
            return rep;
        }
    }
    rep.note = "no dominant real eigenvalue located";
    return rep;
}

// ---- numeric complex structure ----

struct ComplexStructure {
    Eigen::Matrix<double, 6, 6> j;
    double residual_square = 0;   // ||J^2 + I||_F
    double residual_commute = 0;  // ||J M - M J||_F
    bool within_tol = false;
};

// J acts as rotation by pi/2 on each real invariant plane spanned by the
// real and imaginary parts of an eigenvector; it commutes with the companion
// matrix by construction, up to floating-point error reported as residuals.
inline ComplexStructure complex_structure(const ReciprocalSextic& s, double tol = 1e-9) {
    UniPoly<Int> chi = s.poly();
    IntMatrix m_exact = companion_matrix(chi);
    Eigen::Matrix<double, 6, 6> m;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            m(i, j) = mpz_get_d(m_exact(static_cast<std::size_t>(i),
                                        static_cast<std::size_t>(j)).get_mpz_t());

    Eigen::EigenSolver<Eigen::Matrix<double, 6, 6>> solver(m);
    Eigen::Matrix<double, 6, 6> basis;
    int col = 0;
    for (int k = 0; k < 6 && col < 6; ++k) {
        std::complex<double> ev = solver.eigenvalues()(k);
        if (ev.imag() <= 1e-12) continue;  // keep one of each conjugate pair
        Eigen::Matrix<std::complex<double>, 6, 1> w = solver.eigenvectors().col(k);
        for (int r = 0; r < 6; ++r) {
            basis(r, col) = w(r).real();
            basis(r, col + 1) = w(r).imag();
        }
        col += 2;
    }
    ComplexStructure out;
    if (col != 6) {
        out.residual_square = out.residual_commute = 1e300;
        return out;  // eigen-separation failure; caller retries at higher precision
    }
    Eigen::Matrix<double, 6, 6> block = Eigen::Matrix<double, 6, 6>::Zero();
    for (int p = 0; p < 3; ++p) {
        block(2 * p, 2 * p + 1) = 1;
        block(2 * p + 1, 2 * p) = -1;
    }
    out.j = basis * block * basis.inverse();
    out.residual_square =
        (out.j * out.j + Eigen::Matrix<double, 6, 6>::Identity()).norm();
    out.residual_commute = (out.j * m - m * out.j).norm();
    out.within_tol = out.residual_square < tol && out.residual_commute < tol;
    return out;
}

}  // namespace cremona
