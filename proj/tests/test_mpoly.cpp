#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace sdisc;
using sdisc::test::P;
using sdisc::test::q;

TEST_CASE("variables")
{
    CHECK(Var::a(0) < Var::a(1));
    CHECK(Var::a(10) < Var::x());
    CHECK(Var::x() < Var::y());
    CHECK(Var::z() < Var::w());
    CHECK(Var::from_name("a7") == Var::a(7));
    CHECK(Var::from_name("z") == Var::z());
    CHECK(Var::a(3).name() == "a3");
    CHECK_THROWS_AS(Var::from_name("b1"), AlgebraError);
    CHECK_THROWS_AS(Var::a(11), AlgebraError);
}

TEST_CASE("multiplication")
{
    CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
    MPoly p = P("3*a1*x^2 - 1/2*y + 7");
    CHECK(p * MPoly(1) == p);
    CHECK(P("a2 + 3*x") * P("a2 - 3*x") == P("a2^2 - 9*x^2"));
    CHECK((p * MPoly()).is_zero());
}

TEST_CASE("exact division")
{
    CHECK(exact_div(P("y^3 - x^3"), P("y - x")) == P("x^2 + x*y + y^2"));
    MPoly p = P("a0*x^3 - 5*y + 2/3");
    CHECK(exact_div(p, MPoly(1)) == p);
    CHECK(exact_div(P("x^2 - y^2"), P("x + y")) == P("x - y"));
    CHECK(exact_div(P("2*x"), MPoly(q(2, 3))) == P("3*x"));
    CHECK_THROWS_AS(exact_div(P("x^2 + 1"), P("x + 1")), AlgebraError);
    CHECK_THROWS_AS(exact_div(P("x"), MPoly()), AlgebraError);
    try {
        exact_div(P("x^2 + y"), P("x"));
        FAIL("expected not_divisible");
    } catch (const AlgebraError &e) {
        CHECK(e.code() == Errc::not_divisible);
    }
}

TEST_CASE("substitution")
{
    CHECK(P("x^2").substitute({{Var::x(), P("x - y")}}) == P("x^2 - 2*x*y + y^2"));
    CHECK(P("x + y").substitute({{Var::x(), P("x - y")}, {Var::y(), P("x + y")}}) == P("2*x"));
    CHECK(P("x^2 + x*y + y^2").substitute({{Var::x(), P("x - y")}, {Var::y(), P("x + y")}}) == P("3*x^2 + y^2"));
    CHECK(P("x*z + a0").evaluate({{Var::x(), q(2)}, {Var::a(0), q(-1, 2)}}) == P("2*z - 1/2"));
}

TEST_CASE("term count and total degree")
{
    MPoly p = P("x^2 - y^2");
    CHECK(p.term_count() == 2);
    CHECK(p.total_degree() == 2);
    CHECK(MPoly().term_count() == 0);
    CHECK(MPoly().total_degree() == 0);
    CHECK(MPoly().is_zero());
    CHECK(P("a0*x^3*y + y^5").degree(Var::y()) == 5);
    CHECK(P("a0*x^3*y + y^5").degree(Var::x()) == 3);
}

TEST_CASE("canonical printing")
{
    CHECK(P("-27*a0 + 9*a2*a1 - 2*a2^3").str() == "-2*a2^3 + 9*a1*a2 - 27*a0");
    CHECK(P("1 - x").str() == "-x + 1");
    CHECK(P("(x + 1)^2").str() == "x^2 + 2*x + 1");
    CHECK(P("3/6*y").str() == "1/2*y");
    CHECK(MPoly().str() == "0");
    CHECK(P("-1").str() == "-1");
    CHECK_THROWS_AS(P("x +"), AlgebraError);
    CHECK_THROWS_AS(P("x ** 2"), AlgebraError);
    CHECK_THROWS_AS(P("foo"), AlgebraError);
}

TEST_CASE("univariate view")
{
    UniView u = univariate_view(P("x^2 + a1*x + a0"), Var::x());
    REQUIRE(u.coeffs.size() == 3);
    CHECK(u.coeffs[0] == P("a0"));
    CHECK(u.coeffs[1] == P("a1"));
    CHECK(u.coeffs[2] == MPoly(1));

    UniView c = univariate_view(P("a0"), Var::x());
    CHECK(c.degree() == 0);
    CHECK(c.coeffs[0] == P("a0"));

    UniView y = univariate_view(P("3*x^2 + y^2"), Var::y());
    REQUIRE(y.coeffs.size() == 3);
    CHECK(y.coeffs[0] == P("3*x^2"));
    CHECK(y.coeffs[1].is_zero());
    CHECK(y.coeffs[2] == MPoly(1));
}

TEST_CASE("derivative")
{
    CHECK(P("x^3 + a2*x^2 + a1*x + a0").derivative(Var::x()) == P("3*x^2 + 2*a2*x + a1"));
    CHECK(P("a0*y").derivative(Var::x()).is_zero());
}

namespace {

const std::vector<Var> kVars{Var::a(0), Var::a(1), Var::x(), Var::y()};

} // namespace

TEST_CASE("ring axioms on random polynomials")
{
    SplitMix64 rng(101);
    for (int i = 0; i < 150; ++i) {
        MPoly a = test::random_poly(rng, kVars, 4, 3);
        MPoly b = test::random_poly(rng, kVars, 4, 3);
        MPoly c = test::random_poly(rng, kVars, 4, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + (-a)).is_zero());
    }
}

TEST_CASE("division undoes multiplication")
{
    SplitMix64 rng(202);
    for (int i = 0; i < 150; ++i) {
        MPoly a = test::random_poly(rng, kVars, 5, 3);
        MPoly b = test::random_poly(rng, kVars, 4, 3);
        if (b.is_zero())
            continue;
        CHECK(exact_div(a * b, b) == a);
        UniView u = univariate_view(a, Var::x());
        CHECK(u.assemble() == a);
    }
}

TEST_CASE("substitution is a ring homomorphism")
{
    SplitMix64 rng(303);
    for (int i = 0; i < 100; ++i) {
        MPoly a = test::random_poly(rng, kVars, 4, 2);
        MPoly b = test::random_poly(rng, kVars, 4, 2);
        std::map<Var, MPoly> s{{Var::x(), test::random_poly(rng, kVars, 3, 2)},
                               {Var::y(), test::random_poly(rng, kVars, 3, 2)}};
        CHECK((a * b).substitute(s) == a.substitute(s) * b.substitute(s));
        CHECK((a + b).substitute(s) == a.substitute(s) + b.substitute(s));
    }
}

TEST_CASE("parse inverts printing")
{
    SplitMix64 rng(404);
    for (int i = 0; i < 200; ++i) {
        MPoly a = test::random_poly(rng, kVars, 6, 4);
        CHECK(MPoly::parse(a.str()) == a);
    }
}
