#include <catch2/catch.hpp>

#include "mori/rational.hpp"

#include "support/random_gen.hpp"

using mori::Int;
using mori::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(Int(2), Int(4)).str() == "1/2");
    CHECK(Rational(Int(-2), Int(4)).str() == "-1/2");
    CHECK(Rational(Int(2), Int(-4)).str() == "-1/2");
    CHECK(Rational(Int(0), Int(-7)).str() == "0");
    CHECK(Rational(Int(6), Int(3)).str() == "2");
    CHECK(Rational(Int(6), Int(3)).den() == 1);
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), mori::DataError);
}

TEST_CASE("rational arithmetic is exact") {
    Rational a(Int(1), Int(3)), b(Int(1), Int(6));
    CHECK((a + b).str() == "1/2");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/18");
    CHECK((a / b).str() == "2");
    CHECK((-a).str() == "-1/3");
    CHECK_THROWS_AS(a / Rational(0), mori::DataError);
    // No silent overflow: exercise values far beyond 64 bits.
    Rational big(Int("123456789012345678901234567890"), Int(7));
    CHECK((big * Rational(7)).str() == "123456789012345678901234567890");
    CHECK((big / big).str() == "1");
}

TEST_CASE("rational parsing round-trips the serialized form") {
    for (const char* s : {"3", "-1/2", "0", "22/7", "-1000000000000000001"}) {
        CHECK(Rational::parse(s).str() == s);
    }
    CHECK(Rational::parse(" 4/6 ").str() == "2/3");
    CHECK(Rational::parse("+3").str() == "3");
    CHECK(Rational::parse("1/-2").str() == "-1/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), mori::ParseError);
    CHECK_THROWS_AS(Rational::parse(""), mori::ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), mori::ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), mori::ParseError);
    CHECK_THROWS_AS(Rational::parse("--2"), mori::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), mori::ParseError);
}

TEST_CASE("parse/str is the identity on random rationals") {
    mori_test::Rng rng(mori_test::global_seed);
    for (int i = 0; i < 200; ++i) {
        Rational r(rng.integer(-1000, 1000), rng.integer(1, 997));
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("comparisons agree with cross-multiplication") {
    CHECK(Rational(Int(1), Int(3)) < Rational(Int(1), Int(2)));
    CHECK(Rational(Int(-1), Int(3)) > Rational(Int(-1), Int(2)));
    CHECK(Rational(Int(2), Int(6)) == Rational(Int(1), Int(3)));
}
