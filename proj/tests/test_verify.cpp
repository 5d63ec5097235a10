#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chvar/errors.hpp"
#include "chvar/verify.hpp"

using namespace chvar;
using namespace chvar::verify;

TEST_CASE("overall pass is the conjunction of checks") {
    VerifyReport r;
    CHECK(r.overall_pass());
    r.add("a", "x=1", true);
    CHECK(r.overall_pass());
    r.add("b", "x=2", false, "broken");
    CHECK(!r.overall_pass());
    VerifyReport other;
    other.add("c", "", true);
    other.append(r);
    CHECK(other.checks.size() == 3);
    CHECK(!other.overall_pass());
}

TEST_CASE("suite names") {
    CHECK(parse_suite("all") == Suite::All);
    CHECK(parse_suite("f2") == Suite::F2);
    CHECK(parse_suite("ko") == Suite::KO);
    CHECK(parse_suite("symbolic") == Suite::Symbolic);
    CHECK(parse_suite("census") == Suite::Census);
    CHECK_THROWS_AS(parse_suite("everything"), ParameterOutOfRange);
}

TEST_CASE("every suite passes at the default bounds") {
    const Bounds b;
    for (auto suite : {Suite::F2, Suite::KO, Suite::Symbolic, Suite::Census}) {
        const auto r = run(suite, b);
        CHECK(!r.checks.empty());
        for (const auto &c : r.checks) {
            INFO(c.name << " " << c.parameters << " " << c.details);
            CHECK(c.pass);
        }
    }
    const auto all = run(Suite::All, b);
    CHECK(all.overall_pass());
    CHECK(all.checks.size() == run_f2(b).checks.size() + run_ko(b).checks.size() +
                                   run_symbolic(b).checks.size() + run_census(b).checks.size());
}

TEST_CASE("the symbolic suite names the Bezout comparison") {
    const auto r = run_symbolic(Bounds{});
    bool found = false;
    for (const auto &c : r.checks) {
        found = found || (c.name == "bezout==direct" && c.parameters == "n=2..7" && c.pass);
    }
    CHECK(found);
}

TEST_CASE("reports are reproducible for a seed and pass for other seeds") {
    Bounds a;
    a.seed = 7;
    const auto r1 = run(Suite::F2, a);
    const auto r2 = run(Suite::F2, a);
    REQUIRE(r1.checks.size() == r2.checks.size());
    for (std::size_t i = 0; i < r1.checks.size(); ++i) {
        CHECK(r1.checks[i].name == r2.checks[i].name);
        CHECK(r1.checks[i].details == r2.checks[i].details);
    }
    for (std::uint64_t seed : {1ULL, 99ULL, 123456789ULL}) {
        Bounds b;
        b.seed = seed;
        CHECK(run(Suite::All, b).overall_pass());
    }
}

TEST_CASE("smaller bounds still pass") {
    Bounds b;
    b.max_g = 3;
    b.max_rank = 3;
    b.max_symbolic_n = 4;
    CHECK(run(Suite::All, b).overall_pass());
}
