#include <catch2/catch_amalgamated.hpp>

#include "cremona/schur_cohn.hpp"
#include "cremona/sturm.hpp"
#include "cremona/tracepoly.hpp"
#include "cremona/unipoly.hpp"

using namespace cremona;

namespace {

UniPoly<Rat> from_ints(std::initializer_list<long> lowest_first) {
    std::vector<Rat> c;
    for (long v : lowest_first) c.emplace_back(v);
    return UniPoly<Rat>(std::move(c));
}

// Independent root-count oracle: scan a fine grid and count sign changes.
// Only valid when consecutive roots are farther apart than the step, which
// holds for everything in this corpus at step = width/2048.
long grid_sign_change_count(const UniPoly<Rat>& p, const Rat& lo, const Rat& hi) {
    const long kSteps = 2048;
    Rat step = (hi - lo) / kSteps;
    long count = 0;
    int prev = sign(p.eval(lo));
    for (long i = 1; i <= kSteps; ++i) {
        int s = sign(p.eval(lo + step * i));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

TEST_CASE("sturm counts on the named intervals") {
    auto sqrt2 = from_ints({-2, 0, 1});
    CHECK(sturm_count(sqrt2, Rat(0), Rat(2)) == 1);
    CHECK(grid_sign_change_count(sqrt2, Rat(0), Rat(2)) == 1);

    auto cubic = from_ints({-1, 0, -1, 1});  // x^3 - x^2 - 1
    CHECK(sturm_count(cubic, Rat(1), Rat(2)) == 1);
    CHECK(sturm_count_real(cubic) == 1);
    CHECK(grid_sign_change_count(cubic, Rat(1), Rat(2)) == 1);

    auto theta = from_ints({-4, -3, 1, 1});  // s^3 + s^2 - 3 s - 4
    CHECK(sturm_count(theta, Rat(-2), Rat(2)) == 1);
    CHECK(sturm_count_real(theta) == 1);
    CHECK(grid_sign_change_count(theta, Rat(-2), Rat(2)) == 1);

    CHECK_THROWS_AS(sturm_count(sqrt2, Rat(0), Rat(1)) + sturm_count(sqrt2, Rat(1), Rat(1)),
                    std::invalid_argument);
}

TEST_CASE("sturm counts add over a partition") {
    auto p = from_ints({-4, 0, 5, 0, -1});  // roots +-1, +-2 : (x^2-1)(4-x^2) sign flip
    // p = -(x^2-1)(x^2-4); squarefree with 4 real roots
    Rat cuts[] = {make_rat(-5, 2), make_rat(-3, 2), make_rat(-1, 2), make_rat(1, 2),
                  make_rat(3, 2), make_rat(5, 2)};
    long total = 0;
    for (int i = 0; i + 1 < 6; ++i) total += sturm_count(p, cuts[i], cuts[i + 1]);
    CHECK(total == sturm_count(p, cuts[0], cuts[5]));
    CHECK(total == 4);
}

TEST_CASE("sturm bisection isolates the golden mean") {
    auto p = from_ints({-1, -1, 1});
    auto box = sturm_bisect(p, Rat(1), Rat(2), make_rat(1, 1000000));
    CHECK(box.width() < make_rat(1, 1000000));
    // 1.618033 < phi < 1.618035
    CHECK(box.lo > make_rat(1618033, 1000000));
    CHECK(box.hi < make_rat(1618035, 1000000));
}

TEST_CASE("schur-cohn inside counts") {
    CHECK(schur_cohn_inside(from_ints({-1, -1, 1})) == 1);   // golden pair
    CHECK(schur_cohn_inside(from_ints({-1, 0, -1, 1})) == 2);  // x^3-x^2-1
    CHECK(schur_cohn_inside(from_ints({-2, 1})) == 0);         // x - 2
    CHECK(schur_cohn_inside(from_ints({1, -3, 1})) == 1);      // x^2-3x+1
    // all roots inside
    CHECK(schur_cohn_inside(from_ints({-1, 0, 4})) == 2);      // 4x^2 - 1
    // multiplicity counted: (2x-1)^2
    CHECK(schur_cohn_inside(from_ints({1, -4, 4})) == 2);
    // circle root detected, not counted
    CHECK(!schur_cohn_inside(from_ints({1, 0, 1})).has_value());      // x^2+1
    CHECK(!schur_cohn_inside(from_ints({1, 1, 1})).has_value());      // cyclotomic
    CHECK_THROWS(schur_cohn_inside(from_ints({0, 1})));               // p(0) = 0
}

TEST_CASE("inside + circle + outside = degree across a corpus") {
    auto corpus = {
        from_ints({-1, -1, 1}),          // golden
        from_ints({-1, 0, -1, 1}),       // smallest Pisot-family cubic here
        from_ints({1, -1, 0, 0, 1, -1, 0, -1, 1}),  // not the Salem octic (scrambled)
        from_ints({1, -1, 0, -1, 1, -1, 0, -1, 1}), // Salem octic
        from_ints({2, -5, 2}),           // (x-2)(2x-1): reciprocal pair off circle
        from_ints({1, 1, 0, -2, 0, 1, 1}),  // admissible sextic
        from_ints({-4, -3, 1, 1}),       // trace cubic
        from_ints({6, -5, 1}),           // roots 2, 3
    };
    for (const auto& p : corpus) {
        CAPTURE(p.str());
        UniPoly<Rat> sf = squarefree_part(make_monic(p));
        long on = unit_circle_count(sf);
        auto inside = schur_cohn_inside(sf);
        auto outside = schur_cohn_inside(make_monic(sf.reversed()));
        if (on == 0) {
            REQUIRE(inside.has_value());
            REQUIRE(outside.has_value());
            CHECK(*inside + *outside + on == sf.degree());
        } else {
            CHECK(!inside.has_value());
            // count off-circle roots through the reciprocal-free part instead
            UniPoly<Rat> r = poly_gcd(sf, sf.reversed());
            UniPoly<Rat> off;
            auto [q, rem] = divrem(sf, r);
            REQUIRE(rem.is_zero());
            off = q;
            if (off.degree() > 0) {
                auto in2 = schur_cohn_inside(off);
                REQUIRE(in2.has_value());
                CHECK(*in2 <= off.degree());
            }
        }
    }
}

TEST_CASE("reciprocal detection and trace polynomial") {
    auto salem8 = from_ints({1, -1, 0, -1, 1, -1, 0, -1, 1});
    CHECK(is_reciprocal(salem8));
    CHECK(is_reciprocal(from_ints({-1, 1})));            // x - 1, antisymmetric
    CHECK(!is_reciprocal(from_ints({-1, -1, -1, 1})));   // x^3-x^2-x-1

    // t^2 + 1 -> s
    CHECK(trace_poly(from_ints({1, 0, 1})) == from_ints({0, 1}));

    // example sextic -> s^3 + s^2 - 3 s - 4
    CHECK(trace_poly(from_ints({1, 1, 0, -2, 0, 1, 1})) == from_ints({-4, -3, 1, 1}));

    // Salem octic: quartic trace with exactly 3 roots in (-2, 2), 1 above 2
    auto q = trace_poly(salem8);
    CHECK(q == from_ints({3, 2, -4, -1, 1}));
    CHECK(sturm_count(q, Rat(-2), Rat(2)) == 3);
    CHECK(sturm_count_above(q, Rat(2)) == 1);
    CHECK(sturm_count_real(q) == 4);
    CHECK(grid_sign_change_count(q, Rat(-2), Rat(2)) == 3);

    CHECK_THROWS_AS(trace_poly(from_ints({-1, -1, 1})), std::invalid_argument);
}

TEST_CASE("unit circle counting goes through the trace route") {
    CHECK(unit_circle_count(from_ints({1, 0, 1})) == 2);       // x^2+1
    CHECK(unit_circle_count(from_ints({-1, 0, 0, 0, 1})) == 4);  // x^4-1
    // x^4 - 1 has roots 1, -1, i, -i : all on the circle
    CHECK(unit_circle_count(from_ints({-1, 0, 0, 0, 1})) == 4);
    CHECK(unit_circle_count(from_ints({1, -1, 0, -1, 1, -1, 0, -1, 1})) == 6);  // Salem octic
    CHECK(unit_circle_count(from_ints({2, -5, 2})) == 0);  // reciprocal but off circle
    CHECK(unit_circle_count(from_ints({-1, -1, 1})) == 0);
}
