#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "cremona/torus.hpp"

using namespace cremona;

TEST_CASE("the displayed sextic is admissible") {
    ReciprocalSextic s{1, 0, -2};
    CHECK(s.poly() == UniPoly<Int>(std::vector<Int>{Int(1), Int(1), Int(0), Int(-2), Int(0),
                                                    Int(1), Int(1)}));
    CHECK(s.theta() == UniPoly<Int>(std::vector<Int>{Int(-4), Int(-3), Int(1), Int(1)}));
    auto cert = admissible(s);
    CHECK(cert.irreducible);
    CHECK(cert.trace_has_single_real_root);
    CHECK(cert.trace_root_in_window);

    // theta' has roots (-1 +- sqrt(10))/3 and theta is negative at both, so a
    // single real root; frozen decimals: the root sits in (1.8, 1.9)
    UniPoly<Rat> theta = to_rational(s.theta());
    CHECK(sturm_count(theta, make_rat(18, 10), make_rat(19, 10)) == 1);
}

TEST_CASE("degenerate sextics are rejected") {
    CHECK(!admissible(ReciprocalSextic{0, 0, 0}).admissible());   // t^6 + 1, cyclotomic
    CHECK(!admissible(ReciprocalSextic{-2, -1, -1}).admissible());  // quadratic x cyclotomic
    // Salem-type sextic (four circle roots, real alpha): x^6-x^4-x^3-x^2+1
    CHECK(!admissible(ReciprocalSextic{0, -1, -1}).admissible());
}

TEST_CASE("search finds the displayed example and is conjugation-symmetric") {
    auto hits = torus_search(3);
    ReciprocalSextic example{1, 0, -2};
    CHECK(std::find(hits.begin(), hits.end(), example) != hits.end());
    for (const auto& s : hits) {
        CHECK(admissible(s).admissible());  // re-check is idempotent
        ReciprocalSextic mirror{-s.a, s.b, -s.c};
        CHECK(admissible(mirror).admissible());
    }
    CHECK(torus_search(0).empty());
}

TEST_CASE("certified spectrum of the example sextic") {
    ReciprocalSextic s{1, 0, -2};
    auto spec = spectrum(s, make_rat(1, 1000000));
    CHECK(spec.beta_on_circle);
    CHECK(spec.lambda1_equals_lambda2);
    CHECK(spec.alpha_nonreal);
    CHECK(spec.lambda2_consistent);
    CHECK(spec.reciprocity_consistent);
    CHECK(spec.lambda1.width() < make_rat(1, 1000000));
    // lambda1 = 1.77094458...
    CHECK(spec.lambda1.lo > make_rat(177094, 100000));
    CHECK(spec.lambda1.hi < make_rat(177095, 100000));
    // |alpha| > 1 > |gamma|
    CHECK(spec.alpha.norm().lo > 1);
    CHECK(spec.gamma.norm().hi < 1);
    // |beta| = 1 within the enclosure
    CHECK(spec.beta.norm().contains(Rat(1)));
}

TEST_CASE("admissible sextics are never Salem polynomials") {
    for (const auto& s : torus_search(2)) {
        CAPTURE(s.a, s.b, s.c);
        CHECK(classify(s.poly()).verdict != NumberClass::Salem);
    }
}

TEST_CASE("fibration criterion on the three regimes") {
    // the displayed example does not preserve a fibration
    auto rep = fibration_criterion(ReciprocalSextic{1, 0, -2});
    CHECK(rep.verdict == FibrationVerdict::NonFibered);
    CHECK(rep.degree_six_regime);
    REQUIRE(!rep.lambda1_min_poly.is_zero());
    CHECK(rep.lambda1_min_poly.degree() == 12);
    CHECK(rep.lambda1_class == NumberClass::Other);

    // (t^2 - 3t + 1)(t^4 + t^3 + t^2 + t + 1) = t^6 - 2t^5 - t^4 - t^3 - t^2 - 2t + 1:
    // the eigenvalue square is the quadratic unit (7 + 3 sqrt 5)/2
    auto fib = fibration_criterion(ReciprocalSextic{-2, -1, -1});
    CHECK(fib.verdict == FibrationVerdict::Fibered);
    CHECK(fib.lambda1_class == NumberClass::QuadraticUnit);
    CHECK(fib.lambda1_min_poly ==
          UniPoly<Int>(std::vector<Int>{Int(1), Int(-7), Int(1)}));

    // fully cyclotomic: unit regime
    auto kro = fibration_criterion(ReciprocalSextic{0, 0, 0});
    CHECK(kro.verdict == FibrationVerdict::KroneckerUnit);
}

TEST_CASE("complex structure residuals") {
    ReciprocalSextic s{1, 0, -2};
    auto cs = complex_structure(s, 1e-9);
    CHECK(cs.within_tol);
    CHECK(cs.residual_square < 1e-9);
    CHECK(cs.residual_commute < 1e-9);

    // J applied twice negates each basis vector
    Eigen::Matrix<double, 6, 6> jj = cs.j * cs.j;
    for (int i = 0; i < 6; ++i)
        for (int k = 0; k < 6; ++k)
            CHECK(std::abs(jj(i, k) + (i == k ? 1.0 : 0.0)) < 1e-8);

    // the companion matrix is unimodular: det = chi(0) = 1
    CHECK(companion_matrix(s.poly()).det() == 1);
}
