#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace sdisc;
using sdisc::test::P;
using sdisc::test::q;

TEST_CASE("bareiss on small matrices")
{
    RingMatrix<Rational> id(4, 4);
    for (int i = 0; i < 4; ++i)
        id(i, i) = q(1);
    CHECK(bareiss_det(id) == q(1));

    RingMatrix<MPoly> abcd{{P("a0"), P("a1")}, {P("a2"), P("a3")}};
    CHECK(bareiss_det(abcd) == P("a0*a3 - a1*a2"));

    RingMatrix<Rational> vdm{{q(1), q(1), q(1)}, {q(1), q(2), q(3)}, {q(1), q(4), q(9)}};
    CHECK(bareiss_det(vdm) == q(2));
    CHECK(test::cofactor_det(vdm) == q(2));

    RingMatrix<Rational> needs_swap{{q(0), q(1)}, {q(1), q(0)}};
    CHECK(bareiss_det(needs_swap) == q(-1));
    RingMatrix<Rational> zero_col{{q(0), q(1)}, {q(0), q(5)}};
    CHECK(bareiss_det(zero_col) == q(0));
    CHECK(bareiss_det(RingMatrix<Rational>()) == q(1));
    CHECK_THROWS_AS(bareiss_det(RingMatrix<Rational>(2, 3)), AlgebraError);
}

TEST_CASE("leading principal minor")
{
    RingMatrix<Rational> m{{q(1), q(2)}, {q(3), q(4)}};
    CHECK(leading_principal_minor(m, 1) == q(1));
    CHECK(leading_principal_minor(m, 2) == q(-2));
    CHECK(leading_principal_minor(m, 0) == q(1));
    CHECK_THROWS_AS(leading_principal_minor(m, 3), AlgebraError);
}

TEST_CASE("bareiss equals cofactor expansion on random rational matrices")
{
    SplitMix64 rng(5);
    for (int size = 1; size <= 5; ++size)
        for (int t = 0; t < 40; ++t) {
            RingMatrix<Rational> m(size, size);
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j)
                    m(i, j) = rng.uniform(0, 3) == 0 ? q(0) : random_rational(rng, 6);
            CHECK(bareiss_det(m) == test::cofactor_det(m));
        }
}

TEST_CASE("bareiss equals cofactor expansion on random polynomial matrices")
{
    SplitMix64 rng(6);
    const std::vector<Var> vars{Var::a(0), Var::x()};
    for (int size = 1; size <= 4; ++size)
        for (int t = 0; t < 10; ++t) {
            RingMatrix<MPoly> m(size, size);
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j)
                    m(i, j) = test::random_poly(rng, vars, 2, 2);
            CHECK(bareiss_det(m) == test::cofactor_det(m));
        }
}

TEST_CASE("sylvester resultant examples")
{
    const Var x = Var::x();
    CHECK(sylvester_resultant(P("x^2 - 1"), P("x - 1"), x).is_zero());
    CHECK(sylvester_resultant(P("x - a0"), P("x - a1"), x) == P("a0 - a1"));
    CHECK(sylvester_resultant(P("x^3 + a2*x^2 + a1*x + a0"), P("3*x + a2"), x) == P("-2*a2^3 + 9*a1*a2 - 27*a0"));
    CHECK(sylvester_resultant(P("x^2 + 1"), P("x^2 - 1"), x) == MPoly(4));
    CHECK(sylvester_resultant(MPoly(3), MPoly(5), x) == MPoly(1));
    CHECK(sylvester_resultant(MPoly(2), P("x^2 + 1"), x) == MPoly(4));
    CHECK(sylvester_resultant(MPoly(), P("x + 1"), x).is_zero());
    CHECK_THROWS_AS(sylvester_resultant(MPoly(), MPoly(), x), AlgebraError);
}

TEST_CASE("bezout resultant examples")
{
    const Var x = Var::x();
    for (auto [p, r] : std::vector<std::pair<const char *, const char *>>{
             {"x^2 - 1", "x - 1"}, {"x - a0", "x - a1"}, {"x^3 + a2*x^2 + a1*x + a0", "3*x + a2"}, {"x^2 + 1", "x^2 - 1"}})
        CHECK(bezout_resultant(P(p), P(r), x) == sylvester_resultant(P(p), P(r), x));
    CHECK(bezout_resultant(P("x^2 + 1"), P("x^2 - 1"), x) == MPoly(4));
    MPoly p = P("x^3 - a0*x + 2");
    CHECK(bezout_resultant(p, p, x).is_zero());
    CHECK(sylvester_resultant(p, p, x).is_zero());
    CHECK_THROWS_AS(bezout_resultant(MPoly(), MPoly(), x), AlgebraError);
}

namespace {

MPoly random_uni(SplitMix64 &rng, int deg)
{
    MPoly p;
    for (int i = 0; i <= deg; ++i) {
        Rational c = random_rational(rng, 6);
        if (i == deg && c.is_zero())
            c = q(1);
        p += MPoly(Monomial::var(Var::x(), static_cast<unsigned>(i)), c);
    }
    return p;
}

} // namespace

TEST_CASE("swapping resultant operands")
{
    SplitMix64 rng(8);
    for (int t = 0; t < 60; ++t) {
        int m = static_cast<int>(rng.uniform(0, 6));
        int k = static_cast<int>(rng.uniform(0, 6));
        MPoly p = random_uni(rng, m);
        MPoly r = random_uni(rng, k);
        MPoly pr = sylvester_resultant(p, r, Var::x());
        MPoly rp = sylvester_resultant(r, p, Var::x());
        CHECK(pr == ((m * k) % 2 ? -rp : rp));
        CHECK(bezout_resultant(p, r, Var::x()) == pr);
    }
}

TEST_CASE("resultant of a split monic polynomial is the product of values")
{
    SplitMix64 rng(9);
    for (int t = 0; t < 60; ++t) {
        int d = static_cast<int>(rng.uniform(1, 5));
        auto roots = random_rational_roots(d, rng.next(), 8);
        MPoly p = from_roots(roots).in(Var::x());
        MPoly r = random_uni(rng, static_cast<int>(rng.uniform(0, 5)));
        Rational prod(1);
        for (const auto &root : roots)
            prod *= r.evaluate({{Var::x(), root}}).constant_value();
        CHECK(sylvester_resultant(p, r, Var::x()) == MPoly(prod));
        CHECK(monic_resultant(p, r, Var::x()) == MPoly(prod));
    }
}

TEST_CASE("resultants with symbolic coefficients agree across constructions")
{
    SplitMix64 rng(10);
    const std::vector<Var> coeff_vars{Var::a(0), Var::a(1)};
    for (int t = 0; t < 20; ++t) {
        MPoly p = P("x^3") + test::random_poly(rng, {Var::a(0), Var::x()}, 3, 2);
        MPoly r = test::random_poly(rng, {Var::a(1), Var::x()}, 4, 3);
        if (univariate_view(p, Var::x()).degree() != 3 || r.is_zero())
            continue;
        MPoly s = sylvester_resultant(p, r, Var::x());
        CHECK(bezout_resultant(p, r, Var::x()) == s);
        if (univariate_view(p, Var::x()).leading() == MPoly(1))
            CHECK(monic_resultant(p, r, Var::x()) == s);
    }
}
