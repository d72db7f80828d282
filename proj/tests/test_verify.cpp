#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace sdisc;
using sdisc::test::q;
using sdisc::test::qs;

TEST_CASE("splitmix64 reference values")
{
    // First outputs for seed 0 of the published reference generator.
    SplitMix64 g(0);
    CHECK(g.next() == 0xE220A8397B1DCDAFULL);
    CHECK(g.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(g.next() == 0x06C45D188009454FULL);
}

TEST_CASE("random roots are deterministic")
{
    CHECK(random_rational_roots(3, 42, 10) == random_rational_roots(3, 42, 10));
    CHECK(random_rational_roots(3, 42, 10) != random_rational_roots(3, 43, 10));
    for (std::uint64_t s = 0; s < 50; ++s)
        for (const auto &r : random_rational_roots(4, s, 1))
            CHECK((r == q(-1) || r == q(0) || r == q(1)));
    for (const auto &r : random_rational_roots(20, 9, 7)) {
        CHECK(r.den() <= Integer(7));
        CHECK(r.num().abs() <= Integer(7));
    }
    CHECK_THROWS_AS(random_rational_roots(0, 1, 1), AlgebraError);
}

TEST_CASE("exact triple and repeat detection")
{
    CHECK(has_symmetric_triple(qs({1, 0, -1})));
    CHECK(has_symmetric_triple(qs({5, 1, 9, 3})));
    CHECK_FALSE(has_symmetric_triple(qs({0, 1, 3})));
    CHECK(has_repeated_root(qs({2, 5, 2})));
    CHECK_FALSE(has_repeated_root(qs({2, 5, 3})));
}

TEST_CASE("oracle-equivalence suite")
{
    SuiteOptions opt;
    opt.n_list = {3};
    opt.trials = 10;
    opt.seed = 1;
    opt.checks = {"oracle-equivalence"};
    auto reports = run_suite(opt);
    REQUIRE(reports.size() == 10);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].trial == static_cast<int>(i));
        CHECK(reports[i].pass());
        CHECK(reports[i].checks.size() == 1);
    }
}

TEST_CASE("planted instances")
{
    SuiteOptions opt;
    opt.n_list = {3, 4, 5};
    opt.trials = 10;
    auto reports = run_suite(opt);
    int triples = 0, doubles = 0;
    for (const auto &r : reports) {
        CAPTURE(r.to_json().dump());
        CHECK(r.pass());
        auto value = [&](const std::string &k) {
            for (const auto &[key, v] : r.values)
                if (key == k)
                    return v;
            return std::string();
        };
        if (r.kind == "planted-triple") {
            ++triples;
            CHECK(value("D2") == "0");
        }
        if (r.kind == "planted-double") {
            ++doubles;
            CHECK(value("D1") == "0");
            CHECK(d1d2_zero_test(from_roots(r.roots)));
        }
    }
    CHECK(triples == 3);
    CHECK(doubles == 3);
}

TEST_CASE("reports are independent of thread count")
{
    SuiteOptions opt;
    opt.n_list = {3, 4};
    opt.trials = 8;
    opt.seed = 99;
    opt.threads = 1;
    auto a = run_suite(opt);
    opt.threads = 4;
    auto b = run_suite(opt);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i].to_json().dump() == b[i].to_json().dump());
}

TEST_CASE("unknown checks and small degrees are rejected")
{
    SuiteOptions opt;
    opt.checks = {"no-such-check"};
    CHECK_THROWS_AS(run_suite(opt), AlgebraError);
    SuiteOptions low;
    low.n_list = {2};
    CHECK_THROWS_AS(run_suite(low), AlgebraError);
}

TEST_CASE("exploratory residue probe never fails")
{
    SuiteOptions opt;
    opt.n_list = {4};
    opt.trials = 5;
    opt.checks = {"d2-mod4"};
    for (const auto &r : run_suite(opt))
        CHECK(r.pass());
}
