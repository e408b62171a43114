#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "sptough/errors.hpp"
#include "sptough/verify.hpp"

using namespace sptough;

// ==================== SUITE REGISTRY ====================

TEST_CASE("suite names are distinct and stable") {
    auto names = suite_names();
    CHECK(names.size() == 24);
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    CHECK(std::find(names.begin(), names.end(), "golden_values") != names.end());
    CHECK(std::find(names.begin(), names.end(), "classifier_oracle") != names.end());
}

TEST_CASE("unknown suite selection is rejected") {
    verify_options options;
    options.suites = {"no_such_suite"};
    CHECK_THROWS_AS(run_verify(options), domain_error);
}

// ==================== RUNS ====================

TEST_CASE("a tiny budget passes every suite") {
    verify_options options;
    options.max_leaves = 3;
    verify_report report = run_verify(options);
    CHECK(report.all_passed());
    CHECK(report.suites.size() == 24);
    for (const suite_result& s : report.suites) {
        CHECK(s.failed == 0);
        CHECK(s.checked >= 0);
        CHECK(s.seconds >= 0.0);
    }
}

TEST_CASE("suite selection runs exactly the chosen suites") {
    verify_options options;
    options.max_leaves = 3;
    options.suites = {"mediant_inequality", "golden_values"};
    verify_report report = run_verify(options);
    REQUIRE(report.suites.size() == 2);
    // canonical execution order, not selection order
    CHECK(report.suites[0].name == "golden_values");
    CHECK(report.suites[1].name == "mediant_inequality");
    CHECK(report.all_passed());
}

TEST_CASE("universe size reports the configured flavor") {
    verify_options options;
    options.max_leaves = 4;
    options.simple_only = true;
    options.suites = {"mediant_inequality"};
    verify_report simple_report = run_verify(options);
    CHECK(simple_report.universe_size == 8);  // simple classes at 1..4 leaves

    options.simple_only = false;
    verify_report full_report = run_verify(options);
    CHECK(full_report.universe_size == 18);  // all classes at 1..4 leaves
}
