#include <catch2/catch_amalgamated.hpp>

#include "cremona/intmatrix.hpp"
#include "cremona/numbers.hpp"
#include "cremona/quadext.hpp"
#include "cremona/unipoly.hpp"

using namespace cremona;

TEST_CASE("rational basics stay canonical") {
    Rat q = make_rat(6, -4);
    CHECK(num(q) == -3);
    CHECK(den(q) == 2);
    CHECK(rat_pow(make_rat(2, 3), -2) == make_rat(9, 4));
    CHECK(squarefree_part(Int(-28)) == -7);
    CHECK(squarefree_part(Int(360)) == 10);
}

TEST_CASE("quadratic field elements") {
    QuadExt w(Rat(0), Rat(1), -7);
    CHECK(w * w == QuadExt(Rat(-7)));
    CHECK(w.conj() == -w);
    CHECK((w + 1) * (w + 1) == QuadExt(Rat(-6), Rat(2), -7));
    CHECK((QuadExt(1) / (w + 1)) * (w + 1) == QuadExt(1));
    CHECK(w.norm() == 7);
    CHECK_THROWS(w + QuadExt(Rat(0), Rat(1), 5));
}

TEST_CASE("family parameters for ell = 2") {
    auto P = quad_field_for_ell(2);
    CHECK(P.disc == -7);
    CHECK(P.c == QuadExt(1));
    CHECK(P.a == QuadExt(make_rat(-3, 4), make_rat(1, 4), -7));
    CHECK(ell_condition_value(2, P.a, P.c).is_zero());
    // product of the two conjugate roots of l*t^2 + (l+1)*t + l is 1
    QuadExt alpha = P.a / P.c;
    CHECK(alpha * alpha.conj() == QuadExt(1));
}

TEST_CASE("family parameters reject ell = 1") {
    CHECK_THROWS_AS(quad_field_for_ell(1), std::invalid_argument);
    CHECK_THROWS_AS(quad_field_for_ell(0), std::invalid_argument);
}

TEST_CASE("defining relation holds exactly for ell = 2..20") {
    for (long ell = 2; ell <= 20; ++ell) {
        auto P = quad_field_for_ell(ell);
        CAPTURE(ell);
        CHECK(ell_condition_value(ell, P.a, P.c).is_zero());
        CHECK(P.a.im() != 0);
        // conjugate branch satisfies the relation too
        CHECK(ell_condition_value(ell, P.a.conj(), P.c).is_zero());
    }
}

TEST_CASE("unipoly arithmetic and division") {
    using P = UniPoly<Rat>;
    P f(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});  // x^2 - 1
    P g(std::vector<Rat>{Rat(1), Rat(1)});           // x + 1
    auto [q, r] = divrem(f, g);
    CHECK(r.is_zero());
    CHECK(q == P(std::vector<Rat>{Rat(-1), Rat(1)}));
    CHECK(poly_gcd(f, g) == make_monic(g));
    CHECK(f.eval(Rat(3)) == 8);
    CHECK(f.reversed() == P(std::vector<Rat>{Rat(1), Rat(0), Rat(-1)}));
    P h = squarefree_part(g * g * f);
    CHECK(h.degree() == 2);  // (x+1)^3 (x-1) -> (x+1)(x-1)

    UniPoly<Int> fi(std::vector<Int>{Int(2), Int(4), Int(6)});
    CHECK(primitive_integer(to_rational(fi)) ==
          UniPoly<Int>(std::vector<Int>{Int(1), Int(2), Int(3)}));
}

TEST_CASE("resultants over Q") {
    using P = UniPoly<Rat>;
    // res(x^2-1, x-2) = value of x^2-1 at 2 = 3
    P a(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});
    P b(std::vector<Rat>{Rat(-2), Rat(1)});
    CHECK(resultant(a, b) == 3);
    // shared root makes it vanish
    P c(std::vector<Rat>{Rat(-1), Rat(1)});
    CHECK(resultant(a, c) == 0);
    // res(x^2+1, x^2-2) = 9
    P d(std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    P e(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)});
    CHECK(resultant(d, e) == 9);
}

TEST_CASE("charpoly of small matrices") {
    IntMatrix id3 = IntMatrix::identity(3);
    UniPoly<Int> expected(std::vector<Int>{Int(-1), Int(3), Int(-3), Int(1)});  // (x-1)^3
    CHECK(charpoly(id3) == expected);

    // companion matrix reproduces its polynomial
    UniPoly<Int> sextic(std::vector<Int>{Int(1), Int(1), Int(0), Int(-2), Int(0), Int(1), Int(1)});
    CHECK(charpoly(companion_matrix(sextic)) == sextic);
    CHECK(companion_matrix(sextic).det() == 1);  // constant term, even degree

    // Cayley-Hamilton on a dense sample
    IntMatrix m(3, 3);
    long vals[9] = {2, -1, 0, 3, 4, -2, 1, 1, 5};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = vals[3 * i + j];
    IntMatrix z = eval_poly_at(charpoly(m), m);
    CHECK(z == IntMatrix(3, 3));
    CHECK(charpoly(m).leading() == 1);
}

TEST_CASE("bareiss determinant matches cofactor expansion") {
    IntMatrix m(4, 4);
    long vals[16] = {1, 2, 0, -1, 3, 0, 1, 2, -2, 1, 1, 0, 0, 4, -3, 1};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = vals[4 * i + j];
    // oracle: Laplace expansion by hand-rolled recursion
    struct Expand {
        static Int det(const IntMatrix& a, std::vector<std::size_t> cols, std::size_t row) {
            if (cols.size() == 1) return a(row, cols[0]);
            Int acc(0);
            int sgn = 1;
            for (std::size_t k = 0; k < cols.size(); ++k) {
                std::vector<std::size_t> rest;
                for (std::size_t j = 0; j < cols.size(); ++j)
                    if (j != k) rest.push_back(cols[j]);
                acc += sgn * a(row, cols[k]) * det(a, rest, row + 1);
                sgn = -sgn;
            }
            return acc;
        }
    };
    CHECK(m.det() == Expand::det(m, {0, 1, 2, 3}, 0));
}
