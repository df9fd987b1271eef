#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ahdet/verify.hpp"

#include <set>

using namespace ahdet;

TEST_CASE("default grid bounds") {
    CHECK(default_max_ell(2) == 8);
    CHECK(default_max_ell(3) == 6);
    CHECK(default_max_ell(5) == 4);
    CHECK(default_max_ell(7) == 4);
}

TEST_CASE("the suite passes on a correct build") {
    VerifyOptions options;
    options.primes = {2, 3};
    options.max_ell = 3;
    const auto summary = run_verification(options);
    CHECK(summary.all_passed());
    CHECK(summary.cases_run() == summary.cases_passed());
    CHECK(summary.cases_run() > 0);

    std::set<std::string> names;
    for (const auto& c : summary.cases)
        names.insert(c.name);
    CHECK(static_cast<int>(names.size()) == summary.cases_run());
}

TEST_CASE("the suite is deterministic for a fixed seed") {
    VerifyOptions options;
    options.primes = {2};
    options.max_ell = 2;
    options.seed = 99;
    const auto a = run_verification(options);
    const auto b = run_verification(options);
    REQUIRE(a.cases_run() == b.cases_run());
    for (int i = 0; i < a.cases_run(); ++i) {
        CHECK(a.cases[i].name == b.cases[i].name);
        CHECK(a.cases[i].passed == b.cases[i].passed);
    }
}

TEST_CASE("an injected coefficient fault is caught and named") {
    VerifyOptions options;
    options.primes = {2};
    options.max_ell = 3;
    options.fault_index = 3;
    const auto summary = run_verification(options);
    CHECK_FALSE(summary.all_passed());

    std::set<std::string> failed;
    for (const auto& c : summary.cases)
        if (!c.passed)
            failed.insert(c.name);
    CHECK(failed.count("recurrence-vs-exponential(p=2)") == 1);
    CHECK(failed.count("determinant-closed-form(p=2)") == 1);
    CHECK(failed.count("p-element-count-agreement(p=2)") == 1);
    // identities that never consume the coefficient table stay green
    bool binomial_power_passed = false;
    for (const auto& c : summary.cases)
        if (c.name == "binomial-determinant-power(p=2)")
            binomial_power_passed = c.passed;
    CHECK(binomial_power_passed);
}

TEST_CASE("faults at other indices are caught too") {
    for (long idx : {1L, 5L}) {
        VerifyOptions options;
        options.primes = {2};
        options.max_ell = 3;
        options.fault_index = idx;
        CHECK_FALSE(run_verification(options).all_passed());
    }
}

TEST_CASE("option validation") {
    VerifyOptions options;
    options.primes = {};
    CHECK_THROWS_AS(run_verification(options), std::invalid_argument);

    options.primes = {4};
    CHECK_THROWS_AS(run_verification(options), std::invalid_argument);

    options.primes = {2};
    options.fault_index = -1;
    CHECK_THROWS_AS(run_verification(options), std::invalid_argument);
}
