#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace sdisc;
using sdisc::test::q;

TEST_CASE("integer parse and print round-trip")
{
    for (const char *s : {"0", "-1", "42", "123456789012345678901234567890", "-98765432109876543210"})
        CHECK(Integer::parse(s).str() == s);
    CHECK(Integer::parse("+7").str() == "7");
    CHECK(Integer::parse("-0").sign() == 0);
    CHECK_THROWS_AS(Integer::parse(""), AlgebraError);
    CHECK_THROWS_AS(Integer::parse("1.5"), AlgebraError);
    CHECK_THROWS_AS(Integer::parse("12a"), AlgebraError);
}

TEST_CASE("integer sign matches magnitude")
{
    CHECK(Integer(0).sign() == 0);
    CHECK(Integer(0).is_zero());
    CHECK(Integer(-5).sign() == -1);
    CHECK(Integer(-5).abs() == Integer(5));
    CHECK(gcd(Integer(12), Integer(-18)) == Integer(6));
}

TEST_CASE("rational addition")
{
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK((q(0) + q(7, 9)).str() == "7/9");
    CHECK((q(2, 4) + q(0)).str() == "1/2");
}

TEST_CASE("rational sign")
{
    CHECK(q(-3, 7).sign() == -1);
    CHECK(q(0).sign() == 0);
    CHECK(q(22, 7).sign() == 1);
}

TEST_CASE("rational parse and canonical form")
{
    CHECK_THROWS_AS(Rational::parse("6/-4"), AlgebraError);
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("10/5").str() == "2");
    CHECK(Rational::parse(" 3 / 9 ").str() == "1/3");
    CHECK(Rational::parse("0/7").str() == "0");
    CHECK_THROWS_AS(Rational::parse("1/0"), AlgebraError);
    CHECK_THROWS_AS(Rational::parse("1/"), AlgebraError);
    CHECK_THROWS_AS(Rational::parse("abc"), AlgebraError);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), AlgebraError);
    CHECK_THROWS_AS(q(1) / q(0), AlgebraError);
    CHECK_THROWS_AS(q(0).inverse(), AlgebraError);
}

TEST_CASE("rational reduced form after every operation")
{
    SplitMix64 rng(7);
    for (int i = 0; i < 300; ++i) {
        Rational a = random_rational(rng, 50), b = random_rational(rng, 50);
        for (const Rational &r : {a + b, a - b, a * b, b.is_zero() ? a : a / b, -a, a.pow(3)}) {
            CHECK(r.den().sign() > 0);
            CHECK(gcd(r.num().abs(), r.den()) == Integer(1));
        }
    }
}

TEST_CASE("rational field axioms on random values")
{
    SplitMix64 rng(11);
    for (int i = 0; i < 500; ++i) {
        Rational p = random_rational(rng, 30), r = random_rational(rng, 30), s = random_rational(rng, 30);
        CHECK((p + r) + s == p + (r + s));
        CHECK((p * r) * s == p * (r * s));
        CHECK(p * (r + s) == p * r + p * s);
        CHECK(p + r == r + p);
        CHECK(p * r == r * p);
        CHECK(p + (-p) == Rational::zero());
        CHECK(p * Rational::one() == p);
        if (!p.is_zero())
            CHECK(p * p.inverse() == Rational::one());
    }
}

TEST_CASE("error names")
{
    CHECK(std::string(errc_name(Errc::not_divisible)) == "NotDivisible");
    CHECK(std::string(errc_name(Errc::both_zero)) == "BothZero");
    CHECK(std::string(errc_name(Errc::degree_too_small)) == "DegreeTooSmall");
}
