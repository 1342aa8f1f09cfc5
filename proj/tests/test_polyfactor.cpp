#include <catch2/catch_amalgamated.hpp>

#include "cremona/polyfactor.hpp"
#include "cremona/unipoly.hpp"

using namespace cremona;

namespace {

UniPoly<Int> zp(std::initializer_list<long> lowest_first) {
    std::vector<Int> c;
    for (long v : lowest_first) c.emplace_back(v);
    return UniPoly<Int>(std::move(c));
}

}  // namespace

TEST_CASE("irreducibility over Q") {
    CHECK(is_irreducible_q(zp({-1, -1, 1})));
    CHECK(is_irreducible_q(zp({1, -1, 0, -1, 1, -1, 0, -1, 1})));   // Salem octic
    CHECK(is_irreducible_q(zp({1, 1, 0, -2, 0, 1, 1})));            // admissible sextic
    CHECK(!is_irreducible_q(zp({-1, 0, 0, 0, 1})));                 // x^4 - 1
    CHECK(!is_irreducible_q(zp({1, 2, 1})));                        // (x+1)^2
    CHECK(!is_irreducible_q(zp({2, 3, 1})));                        // (x+1)(x+2)
    CHECK(is_irreducible_q(zp({1, 0, 0, 0, 1})));                   // x^4 + 1 (sieve fails, fallback)
    for (long ell = 2; ell <= 8; ++ell) {
        CAPTURE(ell);
        CHECK(is_irreducible_q(pisot_family_poly(ell)));
    }
    CHECK_THROWS_AS(is_irreducible_q(zp({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1})),
                    std::invalid_argument);  // degree 14 over the contract cap
}

TEST_CASE("factorization over Z recovers known splittings") {
    // chi_2 = (x^4 - 1)(x + 1)(Salem octic)
    std::vector<Int> chi(14, Int(0));
    chi[13] = 1; chi[11] = -1; chi[10] = -1; chi[9] = -1;
    chi[4] = 1; chi[3] = 1; chi[2] = 1; chi[0] = -1;
    UniPoly<Int> chi2(chi);
    auto factors = factor_over_q(chi2);
    // expect x-1, x+1 (mult 2), x^2+1, octic
    REQUIRE(factors.size() == 4);
    long total = 0;
    bool saw_octic = false;
    for (const auto& [f, m] : factors) {
        total += f.degree() * static_cast<long>(m);
        if (f.degree() == 8) {
            saw_octic = true;
            CHECK(f == zp({1, -1, 0, -1, 1, -1, 0, -1, 1}));
            CHECK(m == 1);
        }
        if (f == zp({1, 1})) CHECK(m == 2);
    }
    CHECK(total == 13);
    CHECK(saw_octic);

    // product of two quadratics with a non-unit lead
    UniPoly<Int> f = zp({1, -3, 1}) * zp({2, -5, 2});
    auto fs = factor_over_q(f);
    REQUIRE(fs.size() >= 2);
    long deg_sum = 0;
    for (const auto& [g, m] : fs) deg_sum += g.degree() * static_cast<long>(m);
    CHECK(deg_sum == 4);
}

TEST_CASE("factorization handles repeated factors via Yun") {
    UniPoly<Int> f = zp({-1, 1}) * zp({-1, 1}) * zp({1, 1, 1});
    auto fs = factor_over_q(f);
    bool squared_linear = false, cyclo = false;
    for (const auto& [g, m] : fs) {
        if (g == zp({-1, 1}) && m == 2) squared_linear = true;
        if (g == zp({1, 1, 1}) && m == 1) cyclo = true;
    }
    CHECK(squared_linear);
    CHECK(cyclo);
}

TEST_CASE("rational root test") {
    // 2x^3 - 3x^2 - 3x + 2 has roots -1, 2, 1/2
    auto roots = rational_roots(zp({2, -3, -3, 2}));
    REQUIRE(roots.size() == 3);
    CHECK(std::count(roots.begin(), roots.end(), Rat(-1)) == 1);
    CHECK(std::count(roots.begin(), roots.end(), Rat(2)) == 1);
    CHECK(std::count(roots.begin(), roots.end(), make_rat(1, 2)) == 1);
    CHECK(rational_roots(zp({1, 0, 1})).empty());
}

TEST_CASE("cyclotomic stripping") {
    // (x^4 - 1) * (x^2 - x - 1): unit-root part removed entirely
    UniPoly<Rat> p = to_rational(zp({-1, 0, 0, 0, 1}) * zp({-1, -1, 1}));
    auto strip = strip_cyclotomic(p);
    CHECK(strip.core == to_rational(zp({-1, -1, 1})));
    long removed_deg = 0;
    for (const auto& [k, f] : strip.removed) removed_deg += f.degree();
    CHECK(removed_deg == 4);

    // pure cyclotomic collapses to 1
    auto strip2 = strip_cyclotomic(to_rational(zp({-1, 0, 0, 0, 1})));
    CHECK(strip2.core.degree() == 0);

    // nothing to strip
    auto strip3 = strip_cyclotomic(to_rational(zp({1, -1, 0, -1, 1, -1, 0, -1, 1})));
    CHECK(strip3.core.degree() == 8);
    CHECK(strip3.removed.empty());
}

TEST_CASE("squarefree decomposition") {
    UniPoly<Rat> p = to_rational(zp({-1, 1})).pow(3) * to_rational(zp({1, 1})) *
                     to_rational(zp({1, 0, 1})).pow(2);
    auto parts = squarefree_decomposition(p);
    UniPoly<Rat> rebuilt = UniPoly<Rat>::constant(Rat(1));
    for (const auto& [f, m] : parts) rebuilt = rebuilt * f.pow(m);
    CHECK(rebuilt == make_monic(p));
}
