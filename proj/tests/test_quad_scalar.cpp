#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heron4/quad_scalar.hpp"
#include "support/oracle.hpp"

using heron4::QuadScalar;
using heron4::Rational;

namespace {

QuadScalar quad(long q0, long q1, long q2, long q3, long d1, long d2) {
    return QuadScalar::make(Rational(q0), Rational(q1), Rational(q2), Rational(q3), Rational(d1),
                            Rational(d2));
}

QuadScalar random_element(heron4::testing::Rng& rng, const Rational& d1, const Rational& d2) {
    return QuadScalar::make(rng.rational(), rng.rational(), rng.rational(), rng.rational(), d1, d2);
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rational::parse("9/5").str() == "9/5");
    CHECK(Rational::parse("-14/21").str() == "-2/3");
    CHECK(Rational::parse("42").str() == "42");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("2/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(" 2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(Rational(6, -4).str() == "-3/2");
}

TEST_CASE("make folds perfect squares into the rational slot") {
    QuadScalar a = quad(0, 1, 0, 0, 4, 3);
    CHECK(a.coord(0) == Rational(2));
    CHECK(a.coord(1).is_zero());
    CHECK(a.base1() == Rational(1));
    CHECK(a.base2() == Rational(3));

    QuadScalar b = quad(0, 1, 0, 0, 2, 3);
    CHECK(b.coord(1) == Rational(1));
    CHECK(b.base1() == Rational(2));
    CHECK(b.base2() == Rational(3));

    QuadScalar c = quad(1, 1, 0, 0, 0, 3);
    CHECK(c.coord(0) == Rational(1));
    CHECK(c.is_rational());

    // idempotence: re-making canonical coordinates changes nothing
    QuadScalar again = QuadScalar::make(b.coord(0), b.coord(1), b.coord(2), b.coord(3), b.base1(),
                                        b.base2());
    CHECK(again.coord(1) == Rational(1));
    CHECK(again.base1() == Rational(2));
    CHECK(again.base2() == Rational(3));
}

TEST_CASE("dependent bases are detected and folded") {
    // sqrt(8) = 2*sqrt(2): the all-zero test must stay sound
    QuadScalar x = quad(0, 1, -2, 0, 8, 2);
    CHECK(x.is_zero());

    QuadScalar y = quad(0, 0, 1, 0, 2, 18);  // sqrt(18) = 3*sqrt(2)
    CHECK(y.base1() == Rational(2));
    CHECK(y.base2() == Rational(1));
    CHECK(y.coord(1) == Rational(3));
}

TEST_CASE("negative base is a domain error") {
    CHECK_THROWS_AS(quad(0, 1, 0, 0, -2, 3), std::domain_error);
    CHECK_THROWS_AS(QuadScalar::sqrt_of(Rational(-1)), std::domain_error);
}

TEST_CASE("arithmetic examples") {
    QuadScalar one_plus = quad(1, 1, 0, 0, 2, 1);
    QuadScalar one_minus = quad(1, -1, 0, 0, 2, 1);
    QuadScalar p = one_plus * one_minus;
    CHECK(p.is_rational());
    CHECK(p.as_rational() == Rational(-1));

    QuadScalar r2 = QuadScalar::sqrt_of(Rational(2));
    QuadScalar r3 = QuadScalar::sqrt_of(Rational(3));
    QuadScalar r6 = r2 * r3;
    CHECK(r6 == QuadScalar::sqrt_of(Rational(6)));
    CHECK(r6.coord(3) == Rational(1));
    CHECK(r6.base1() * r6.base2() == Rational(6));

    // sqrt(5) squared over base (5,13) is rational 5, cross-checked in decimal
    QuadScalar a = quad(0, 1, 0, 0, 5, 13);
    QuadScalar sq = a * a;
    CHECK(sq.is_rational());
    CHECK(sq.as_rational() == Rational(5));
    auto dec = heron4::testing::decimal_eval(a);
    CHECK(std::abs((dec * dec).to_double() - 5.0) < 1e-12);
}

TEST_CASE("mixed-base arithmetic unifies on demand") {
    QuadScalar r8 = QuadScalar::sqrt_of(Rational(8));
    QuadScalar r2 = QuadScalar::sqrt_of(Rational(2));
    QuadScalar diff = r8 - r2;
    CHECK(diff == r2);  // sqrt(8) - sqrt(2) = sqrt(2)

    QuadScalar r6 = QuadScalar::sqrt_of(Rational(6));
    QuadScalar prod = QuadScalar::sqrt_of(Rational(2)) * QuadScalar::sqrt_of(Rational(3));
    CHECK(prod == r6);
    CHECK((prod - r6).is_zero());

    // three independent radicals cannot share a biquadratic base
    QuadScalar r23 = r2 + QuadScalar::sqrt_of(Rational(3));
    CHECK_THROWS_AS((void)(r23 + QuadScalar::sqrt_of(Rational(5))), std::domain_error);
}

TEST_CASE("division is exact") {
    heron4::testing::Rng rng(7);
    for (int i = 0; i < 60; ++i) {
        Rational d1 = rng.nonsquare_base();
        Rational d2 = rng.nonsquare_base();
        QuadScalar x = random_element(rng, d1, d2);
        if (x.is_zero()) continue;
        QuadScalar q = QuadScalar(1) / x;
        CHECK((x * q).is_rational());
        CHECK((x * q).as_rational() == Rational(1));
    }
    CHECK_THROWS_AS(QuadScalar(1) / QuadScalar(0), std::domain_error);
}

TEST_CASE("sign examples") {
    CHECK(quad(0, 0, 0, 0, 2, 3).sign() == 0);
    // 1 + sqrt(2) - sqrt(3) - sqrt(6), decimal value about -1.767
    QuadScalar x = quad(1, 1, -1, -1, 2, 3);
    CHECK(x.sign() == -1);
    auto dec = heron4::testing::decimal_eval(x);
    CHECK(std::abs(dec.to_double() + 1.7673269879) < 1e-9);
    // 3 - 2*sqrt(2): 9 > 8
    CHECK(quad(3, -2, 0, 0, 2, 1).sign() == +1);
    CHECK(quad(-3, 2, 0, 0, 2, 1).sign() == -1);
    CHECK(quad(0, 1, -1, 0, 2, 3).sign() == -1);   // sqrt(2) < sqrt(3)
    CHECK(quad(0, 3, 0, -1, 2, 3).sign() == +1);   // 3*sqrt(2) vs sqrt(6): 18 > 6
}

TEST_CASE("field axioms on random canonical elements") {
    heron4::testing::Rng rng(11);
    for (int i = 0; i < 80; ++i) {
        Rational d1 = rng.nonsquare_base();
        Rational d2 = rng.nonsquare_base();
        QuadScalar x = random_element(rng, d1, d2);
        QuadScalar y = random_element(rng, d1, d2);
        QuadScalar z = random_element(rng, d1, d2);
        CHECK(((x + y) + z) == (x + (y + z)));
        CHECK((x * (y + z)) == (x * y + x * z));
        CHECK((x * y) == (y * x));
        if (!x.is_zero()) CHECK((x * (QuadScalar(1) / x)).as_rational() == Rational(1));
    }
}

TEST_CASE("exact sign agrees with the decimal oracle on 1000 elements") {
    heron4::testing::Rng rng(2026);
    int checked = 0;
    while (checked < 1000) {
        Rational d1 = rng.nonsquare_base();
        Rational d2 = rng.nonsquare_base();
        QuadScalar x = random_element(rng, d1, d2);
        auto dec = heron4::testing::decimal_eval(x);
        if (!x.is_zero() && !dec.magnitude_exceeds_1e_minus_50()) continue;
        CHECK(x.sign() == dec.sign());
        ++checked;
    }
}

TEST_CASE("text rendering") {
    CHECK(QuadScalar(Rational(1, 24)).str() == "1/24");
    CHECK(quad(0, 0, 0, 0, 2, 3).str() == "0");
    CHECK(quad(1, 1, 0, 0, 2, 1).str() == "1 + 1*sqrt(2)");
    CHECK(quad(-1, 2, -3, 1, 2, 3).str() == "-1 + 2*sqrt(2) - 3*sqrt(3) + 1*sqrt(6)");
    CHECK(QuadScalar::sqrt_of(Rational(9, 4)).str() == "3/2");
}
