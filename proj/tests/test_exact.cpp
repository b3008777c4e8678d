#include "doctest.h"

#include "triality/exact.hpp"

#include <stdexcept>

using namespace triality;

TEST_CASE("rationals are kept in lowest terms") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("rational division by zero is reported") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2).to_int64(), std::domain_error);
}

TEST_CASE("eisenstein products reduce omega squared") {
    const Eisenstein w = Eisenstein::omega();
    CHECK(w * w == Eisenstein(-1, -1));
    CHECK(w * w * w == Eisenstein(1));
    CHECK(Eisenstein(1) + w + w * w == Eisenstein(0));
    // (2 + 3ω)(1 − ω) = 2 − 2ω + 3ω − 3ω² = 5 + 4ω
    CHECK(Eisenstein(2, 3) * Eisenstein(1, -1) == Eisenstein(5, 4));
    CHECK(eis_mul(Eisenstein(2, 3), Eisenstein(1, -1)) == Eisenstein(5, 4));
}

TEST_CASE("eisenstein conjugate, norm and division") {
    const Eisenstein x(3, -2);
    CHECK(x * x.conj() == Eisenstein(x.norm()));
    CHECK(x.norm() == Rational(9 + 6 + 4));
    const Eisenstein y(1, 5);
    CHECK((x / y) * y == x);
    CHECK(eis_div(x, y) * y == x);
    CHECK_THROWS_AS(eis_div(x, Eisenstein()), std::domain_error);
    // 1/(1−ω) + 1/(1−ω²) = 1
    const Eisenstein one(1);
    CHECK(one / (one - Eisenstein::omega()) + one / (one - Eisenstein::omega_squared()) == one);
}
