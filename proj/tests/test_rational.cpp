#include <doctest.h>

#include <stdexcept>

#include "groupcast/rational.hpp"

using groupcast::Rational;

TEST_CASE("rational arithmetic stays normalized") {
    Rational a(5, 3), b(1, 6);
    CHECK((a + b).str() == "11/6");
    CHECK((a - b).str() == "3/2");
    CHECK((a * b).str() == "5/18");
    CHECK((a / b).str() == "10");
    CHECK((-a).str() == "-5/3");
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, -9).str() == "-1/3");
}

TEST_CASE("rational comparisons are exact") {
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(5, 3) > Rational(3, 2));
    CHECK(Rational(7, 7) == Rational(1));
    CHECK(Rational(1, 3) <= Rational(1, 3));
    CHECK(groupcast::min(Rational(5, 3), Rational(2)) == Rational(5, 3));
    CHECK(groupcast::max(Rational(5, 3), Rational(2)) == Rational(2));
}

TEST_CASE("parse accepts p/q, integers and decimals") {
    CHECK(Rational::parse("5/3") == Rational(5, 3));
    CHECK(Rational::parse("2") == Rational(2));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK(Rational::parse(" 3/4 ") == Rational(3, 4));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(7, 2).floor_ll() == 3);
    CHECK(Rational(7, 2).ceil_ll() == 4);
    CHECK(Rational(-7, 2).floor_ll() == -4);
    CHECK(Rational(-7, 2).ceil_ll() == -3);
    CHECK(Rational(4).floor_ll() == 4);
    CHECK(Rational(4).ceil_ll() == 4);
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}
