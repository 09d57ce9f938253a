#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>

#include "asm3/verify.hpp"

namespace checks = asm3::checks;

TEST_CASE("suite catalogue") {
  const auto names = checks::suite_names();
  CHECK(names.size() == 6);
  const std::set<std::string> set(names.begin(), names.end());
  CHECK(set.count("oracle") == 1);
  CHECK(set.count("recurrence") == 1);
  CHECK(set.count("genfun") == 1);
  CHECK(set.count("kernel") == 1);
  CHECK(set.count("special-points") == 1);
  CHECK(set.count("ratio-identity") == 1);
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(checks::run_suite("bogus", checks::Bounds{}),
                  std::invalid_argument);
}

TEST_CASE("ratio identity suite enumerates one case per index") {
  const auto results = checks::run_suite("ratio-identity", {5, 3});
  CHECK(results.size() == 6);
  for (const auto& r : results) {
    CHECK(r.suite == "ratio-identity");
    CHECK(r.passed);
  }
}

TEST_CASE("every suite passes at reduced bounds") {
  const checks::Bounds bounds{2, 4};
  for (const auto& name : checks::suite_names()) {
    const auto results = checks::run_suite(name, bounds);
    CHECK(!results.empty());
    for (const auto& r : results) {
      INFO(r.suite, " ", r.case_id, ": ", r.detail);
      CHECK(r.passed);
      CHECK(r.suite == name);
    }
  }
}

TEST_CASE("recurrence suite holds at depth sixteen") {
  for (const auto& r : checks::run_suite("recurrence", {16, 4})) {
    INFO(r.case_id, ": ", r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("the umbrella suite covers all six") {
  const auto results = checks::run_suite("all", {1, 3});
  std::set<std::string> seen;
  for (const auto& r : results) seen.insert(r.suite);
  CHECK(seen.size() == 6);
}
