#include "gridgap/geometry.hpp"
#include "gridgap/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using gridgap::BigInt;
using gridgap::Point;
using gridgap::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(6, 8).str() == "3/4");
    CHECK(Rational(-6, 8).str() == "-3/4");
    CHECK(Rational(6, -8).str() == "-3/4");
    CHECK(Rational(-6, -8).str() == "3/4");
    CHECK(Rational(0, 5).str() == "0/1");
    CHECK(Rational(7).str() == "7/1");
}

TEST_CASE("parse accepts p/q and bare integers, rejects everything else") {
    CHECK(Rational::parse("290/1024").str() == "145/512");
    CHECK(Rational::parse("-2").str() == "-2/1");
    CHECK(Rational::parse("+3/9").str() == "1/3");
    CHECK(Rational::parse("5/-10").str() == "-1/2");
    CHECK(Rational::parse("2/1") == Rational(2));

    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

    // the classic float counterexample holds exactly here
    Rational tenth(1, 10);
    CHECK(tenth + tenth + tenth == Rational(3, 10));

    // mixed expressions with plain integers go through the implicit ctor
    Rational r(1, 4);
    CHECK(2 * r == Rational(1, 2));
    CHECK((2 * r) * (2 * r) == Rational(1, 4));
    CHECK(1 + r == Rational(5, 4));
}

TEST_CASE("ordering and sign") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(5, 10) == Rational(1, 2));
    CHECK(Rational(229, 1024) < Rational(1, 4));
    CHECK(Rational(-3).sign() == -1);
    CHECK(Rational(0, 7).sign() == 0);
    CHECK(gridgap::abs(Rational(-3, 4)) == Rational(3, 4));
}

TEST_CASE("big values do not overflow") {
    Rational big(BigInt("123456789012345678901234567890"), BigInt(7));
    CHECK((big * 7).str() == "123456789012345678901234567890/1");
    CHECK(big > Rational(1));
}

TEST_CASE("squared distance is exact and dimension-checked") {
    Point p({Rational(79, 64), Rational(9, 8)});
    Point q({Rational(49, 64), Rational(7, 8)});
    CHECK(gridgap::squared_distance(p, q) == Rational(289, 1024));
    CHECK(gridgap::squared_distance(p, p) == Rational(0));
    CHECK_THROWS_AS(gridgap::squared_distance(p, Point({Rational(1)})),
                    std::invalid_argument);
}

TEST_CASE("threshold comparison never takes a square root") {
    Point a({Rational(0), Rational(0)});
    Point b({Rational(3, 5), Rational(4, 5)});  // distance exactly 1
    CHECK(gridgap::cmp_sq_dist(a, b, Rational(1)) == gridgap::Ordering::Equal);
    CHECK(gridgap::cmp_sq_dist(a, b, Rational(1001, 1000)) == gridgap::Ordering::Less);
    CHECK(gridgap::cmp_sq_dist(a, b, Rational(999, 1000)) == gridgap::Ordering::Greater);
    CHECK_THROWS_AS(gridgap::cmp_sq_dist(a, b, Rational(-1)), std::invalid_argument);
}
