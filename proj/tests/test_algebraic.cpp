#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lexent/algebraic.hpp"

using namespace lexent;

TEST_CASE("rational arithmetic") {
    FieldElem a{Rational(1, 3)}, b{Rational(1, 6)};
    CHECK((a + b == FieldElem{Rational(1, 2)}));
    CHECK((a - a).is_zero());
    CHECK((a * b == FieldElem{Rational(1, 18)}));
    CHECK((a.inverse() == FieldElem{Rational(3)}));
    CHECK(a.sign() == 1);
    CHECK((-a).sign() == -1);
    CHECK(FieldElem{Rational(0)}.is_zero());
    CHECK_THROWS_AS(FieldElem{Rational(0)}.inverse(), BadParams);
}

TEST_CASE("golden field satisfies its defining relation") {
    FieldElem t = FieldElem::theta(golden_field());
    CHECK((t * t - t - FieldElem{Rational(1)}).is_zero());
    // theta * (theta - 1) = 1, so the inverse of theta is theta - 1.
    CHECK((t.inverse() == t - FieldElem{Rational(1)}));
    CHECK(t.sign() == 1);
    // 1 < theta < 2
    CHECK((t - FieldElem{Rational(1)}).sign() == 1);
    CHECK((t - FieldElem{Rational(2)}).sign() == -1);
    // golden ratio to double accuracy
    double g = static_cast<double>(t.to_real());
    CHECK(g == doctest::Approx(1.618033988749895).epsilon(1e-12));
}

TEST_CASE("plastic field satisfies its defining relation") {
    FieldElem t = FieldElem::theta(plastic_field());
    CHECK((t * t * t - t - FieldElem{Rational(1)}).is_zero());
    double p = static_cast<double>(t.to_real());
    CHECK(p == doctest::Approx(1.324717957244746).epsilon(1e-12));
    // beta * gamma = 1 at the flagship parameters: gamma = alpha + beta - 1
    // with alpha = 1/(1+beta); check beta * (alpha + beta - 1) = 1 exactly.
    FieldElem one{Rational(1)};
    FieldElem alpha = (one + t).inverse();
    FieldElem gamma = alpha + t - one;
    CHECK((t * gamma - one).is_zero());
    // alpha equals the first breakpoint (1 - alpha) / beta exactly.
    CHECK((alpha * t - (one - alpha)).is_zero());
}

TEST_CASE("mixed rational and field arithmetic lifts") {
    FieldElem t = FieldElem::theta(golden_field());
    FieldElem half{Rational(1, 2)};
    FieldElem s = t + half;
    CHECK_FALSE(s.is_rational());
    CHECK((s - t == half));
    // Elements of different fields cannot combine.
    FieldElem p = FieldElem::theta(plastic_field());
    CHECK_THROWS_AS((void)(t + p), BadParams);
}

TEST_CASE("sign and approx refine to arbitrary accuracy") {
    FieldElem t = FieldElem::theta(plastic_field());
    // A tiny but nonzero element: theta^3 - theta - 1 + 1/10^30.
    FieldElem tiny = t * t * t - t - FieldElem{Rational(1)} +
                     FieldElem{Rational(1, BigInt("1000000000000000000000000000000"))};
    CHECK(tiny.sign() == 1);
    auto [lo, hi] = t.approx(Rational(1, BigInt("100000000000000000000")));
    CHECK(hi - lo <= Rational(1, BigInt("100000000000000000000")));
    CHECK(lo <= hi);
    // The enclosure really contains the root: minimal polynomial changes sign.
    CHECK(plastic_field()->eval(lo) < 0);
    CHECK(plastic_field()->eval(hi) > 0);
}

TEST_CASE("inverse in the cubic field") {
    FieldElem t = FieldElem::theta(plastic_field());
    FieldElem x = t * t - FieldElem{Rational(1, 7)};
    CHECK(((x * x.inverse()) == FieldElem{Rational(1)}));
}

TEST_CASE("keys distinguish values and fields") {
    FieldElem a{Rational(1, 2)};
    FieldElem t = FieldElem::theta(golden_field());
    CHECK(a.key() != t.key());
    CHECK(a.key() == FieldElem{Rational(2, 4)}.key());
}
