#include <catch2/catch_amalgamated.hpp>

#include "cremona/multipoly.hpp"
#include "cremona/quadext.hpp"

using namespace cremona;

namespace {

MultiPoly v(int n, int i) { return MultiPoly::variable(n, i); }

}  // namespace

TEST_CASE("multipoly arithmetic") {
    MultiPoly x = v(3, 0), y = v(3, 1), z = v(3, 2);
    MultiPoly p = (x + y) * (x - y);
    MultiPoly q = x * x - y * y;
    CHECK(p == q);
    CHECK(p.is_homogeneous());
    CHECK(p.total_degree() == 2);
    CHECK((p - q).is_zero());

    MultiPoly cube = (x + y + z).pow(3);
    CHECK(cube.total_degree() == 3);
    CHECK(cube.term_count() == 10);  // all degree-3 monomials in 3 vars

    QuadExt w(Rat(0), Rat(1), -7);
    MultiPoly r = MultiPoly::variable(3, 0, w) + y;
    CHECK((r * r).term_count() == 3);
}

TEST_CASE("evaluation and derivatives") {
    MultiPoly x = v(3, 0), y = v(3, 1), z = v(3, 2);
    MultiPoly p = x * y * z + x * x * x;
    std::vector<QuadExt> pt{QuadExt(2), QuadExt(3), QuadExt(5)};
    CHECK(p.eval(pt) == QuadExt(38));
    CHECK(p.derivative(0) == y * z + QuadExt(3) * (x * x));
    CHECK(p.substitute_zero(0).is_zero());
    CHECK((x * y).substitute_zero(2) == x * y);
}

TEST_CASE("exact division") {
    MultiPoly x = v(3, 0), y = v(3, 1), z = v(3, 2);
    MultiPoly p = (x + y) * (y + z) * (x + z);
    auto q = p.divide_exact(y + z);
    REQUIRE(q.has_value());
    CHECK(*q == (x + y) * (x + z));
    CHECK(!p.divide_exact(x + y + z).has_value());
    CHECK(!(x * x + y).divide_exact(x).has_value());
}

TEST_CASE("substitution composes polynomials") {
    MultiPoly x = v(2, 0), y = v(2, 1);
    MultiPoly p = x * x + y;
    std::vector<MultiPoly> into{y, x};  // swap
    CHECK(p.substitute(into) == y * y + x);
}

TEST_CASE("line restriction matches direct evaluation") {
    MultiPoly x = v(3, 0), y = v(3, 1), z = v(3, 2);
    MultiPoly p = x * y + z * z + x * z;
    std::vector<QuadExt> base{QuadExt(1), QuadExt(2), QuadExt(-1)};
    std::vector<QuadExt> dir{QuadExt(3), QuadExt(-1), QuadExt(2)};
    UniPoly<QuadExt> r = p.restrict_line(base, dir);
    for (long t = -3; t <= 3; ++t) {
        std::vector<QuadExt> pt(3);
        for (int i = 0; i < 3; ++i) pt[static_cast<std::size_t>(i)] =
            base[static_cast<std::size_t>(i)] + QuadExt(t) * dir[static_cast<std::size_t>(i)];
        CHECK(r.eval(QuadExt(t)) == p.eval(pt));
    }
}

TEST_CASE("content and normalization") {
    MultiPoly x = v(2, 0), y = v(2, 1);
    MultiPoly p = QuadExt(make_rat(4, 3)) * x + QuadExt(make_rat(2, 3)) * y;
    CHECK(p.content() == make_rat(2, 3));
    MultiPoly n = p.normalized();
    CHECK(n == QuadExt(2) * x + y);
}

TEST_CASE("multivariate gcd on built products") {
    MultiPoly x = v(3, 0), y = v(3, 1), z = v(3, 2);
    MultiPoly g = x * y + z * z;
    MultiPoly a = g * (x + y);
    MultiPoly b = g * (y + z) * (y + z);
    MultiPoly got = multi_gcd(a, b);
    CHECK(got.normalized() == g.normalized());

    CHECK(multi_gcd(x * y, z * z).total_degree() == 0);
    CHECK(multi_gcd(x * x * y, x * y * y).normalized() == (x * y).normalized());

    // gcd over the extension field
    QuadExt w(Rat(0), Rat(1), -7);
    MultiPoly s = MultiPoly::variable(3, 0, w) + y;  // w x + y
    MultiPoly c = s * (x + z);
    MultiPoly d = s * (y + z);
    CHECK(multi_gcd(c, d).normalized() == s.normalized());
}
