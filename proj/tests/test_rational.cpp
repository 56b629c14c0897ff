#include "bincert/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using bincert::Int;
using bincert::Rational;
using bincert::pow10;

TEST_CASE("construction keeps canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(10, 5).is_integer());
    CHECK(Rational(1, -2).den() == 2);
    CHECK(Rational(1, -2).num() == -1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    Rational acc(0);
    for (int i = 0; i < 1000; ++i) acc += Rational(1, 1000);
    CHECK(acc == Rational(1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("ordering and sign") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 3) > Rational(-1, 2));
    CHECK(Rational(7, 5).sign() == 1);
    CHECK(Rational(-7, 5).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(5).floor() == 5);
    CHECK(Rational(5).ceil() == 5);
}

TEST_CASE("powers") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2, 3).pow(2) == Rational(4, 9));
    CHECK(Rational(-2, 3).squared() == Rational(4, 9));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
    CHECK(pow10(3) == Rational(1000));
    CHECK(pow10(-3) == Rational(1, 1000));
    CHECK(pow10(0) == Rational(1));
}

TEST_CASE("parse accepts integers, fractions, and finite decimals") {
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("-17") == Rational(-17));
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("6/8") == Rational(3, 4));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("-7.5") == Rational(-15, 2));
    CHECK(Rational::parse("2.5e-3") == Rational(1, 400));
    CHECK(Rational::parse("1e3") == Rational(1000));
    CHECK(Rational::parse("  1/2 ") == Rational(1, 2));
    CHECK(Rational::parse(".5") == Rational(1, 2));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1e"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("str renders num/den or a bare integer") {
    CHECK(Rational(3, 10).str() == "3/10");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-1, 3).str() == "-1/3");
}

TEST_CASE("decimal rounds half to even") {
    CHECK(Rational(1, 8).decimal(2) == "0.12");   // 0.125 -> even neighbor 12
    CHECK(Rational(3, 8).decimal(2) == "0.38");   // 0.375 -> even neighbor 38
    CHECK(Rational(1, 4).decimal(1) == "0.2");    // 0.25 -> even neighbor 2
    CHECK(Rational(3, 4).decimal(1) == "0.8");    // 0.75 -> even neighbor 8
    CHECK(Rational(1, 3).decimal(6) == "0.333333");
    CHECK(Rational(2, 3).decimal(6) == "0.666667");
    CHECK(Rational(-15, 2).decimal(3) == "-7.500");
    CHECK(Rational(7).decimal(0) == "7");
    CHECK(Rational(1, 2).decimal(0) == "0");      // ties to even at the integer scale
    CHECK(Rational(3, 2).decimal(0) == "2");
}

TEST_CASE("parse round-trips str and decimal output") {
    const Rational v(-123457, 4096);
    CHECK(Rational::parse(v.str()) == v);
    CHECK(Rational::parse(Rational(1, 8).decimal(3)) == Rational(1, 8));
}
