#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rational.hpp"
#include "sampling.hpp"

using namespace radex;

TEST_CASE("parse reduces to canonical form") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("3/6").str() == "1/2");
    CHECK(Rational::parse("-4").str() == "-4");
    CHECK(Rational::parse("0/7").str() == "0");
    CHECK(Rational::parse("0/7") == Rational(0));
    CHECK(Rational::parse("-9/6").str() == "-3/2");
}

TEST_CASE("parse accepts only the literal grammar") {
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("+3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("3/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("/5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("3/-6"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse(" 4"), ParseError);
    CHECK_THROWS_AS(Rational::parse("4 "), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse("--4"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("-7/000"), DomainError);
}

TEST_CASE("leading zeros are digits, not errors") {
    CHECK(Rational::parse("007/5").str() == "7/5");
    CHECK(Rational::parse("-012").str() == "-12");
}

TEST_CASE("field operations are exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 5) == Rational(5, 6));
    CHECK(-Rational(3, 7) == Rational(-3, 7));
    CHECK_THROWS_AS(Rational(1) / Rational(0), SingularError);
    CHECK_THROWS_AS(Rational(0).inverse(), SingularError);
}

TEST_CASE("integer powers, negative via reciprocal") {
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK(Rational(5, 7).pow(0) == Rational(1));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK(Rational(0).pow(4) == Rational(0));
    CHECK_THROWS_AS(Rational(0).pow(-1), SingularError);
}

TEST_CASE("ordering") {
    CHECK(Rational(-3, 2) < Rational(-1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(4, 2) <= Rational(2));
}

TEST_CASE("round-trip: parse(str(x)) == x") {
    SplitMix64 rng(11);
    for (int i = 0; i < 500; ++i) {
        // products of digit rationals grow past machine range quickly
        Rational x = rng.rational();
        for (int j = 0; j < 6; ++j) x *= rng.rational();
        for (int j = 0; j < 3; ++j) x += rng.rational();
        CHECK(Rational::parse(x.str()) == x);
    }
}

TEST_CASE("field axioms, spot-checked") {
    SplitMix64 rng(12);
    for (int i = 0; i < 300; ++i) {
        const Rational p = rng.rational(), q = rng.rational(), r = rng.rational();
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + Rational(0) == p);
        CHECK(p * Rational(1) == p);
        CHECK(p + (-p) == Rational(0));
        CHECK(p * p.inverse() == Rational(1));
        CHECK((p / q) * q == p);
    }
}

TEST_CASE("canonical invariants hold after arithmetic") {
    SplitMix64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const Rational p = rng.rational(), q = rng.rational();
        const Rational sum = p + q, prod = p * q, quot = p / q;
        for (const Rational& v : {sum, prod, quot}) {
            // str() emits sign on the numerator only; a canonical zero is "0"
            const std::string s = v.str();
            CHECK(s.find("/-") == std::string::npos);
            if (v.is_zero()) CHECK(s == "0");
        }
    }
}

TEST_CASE("integer accessors") {
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).to_long() == 2);
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 2).to_long(), DomainError);
}
