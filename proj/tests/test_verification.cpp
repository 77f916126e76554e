#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "apmean/verification.hpp"

using namespace apmean;

TEST_CASE("suite name registry is complete and stable") {
  const auto& names = suite_names();
  std::set<std::string> have(names.begin(), names.end());
  for (const char* n :
       {"identities", "ergodic_rates", "bohr_recovery", "chirp_orthogonality",
        "ergodic_separation", "bohl_bohr", "tauberian_logosc", "distributions",
        "hierarchy_witness", "eps_periods", "ma_nesting"})
    CHECK(have.count(n) == 1);
}

TEST_CASE("unknown suite throws") {
  CHECK_THROWS_AS(run_suite("bogus"), UnknownName);
}

TEST_CASE("fast suites pass") {
  for (const char* n : {"identities", "ergodic_rates", "chirp_orthogonality", "bohl_bohr",
                        "eps_periods", "distributions"}) {
    SuiteReport rep = run_suite(n);
    CHECK(rep.suite == n);
    CHECK(!rep.checks.empty());
    CHECK(rep.all_pass());
  }
}

TEST_CASE("suite reports are deterministic") {
  SuiteReport a = run_suite("eps_periods");
  SuiteReport b = run_suite("eps_periods");
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].description == b.checks[i].description);
    CHECK(a.checks[i].observed == b.checks[i].observed);
    CHECK(a.checks[i].pass == b.checks[i].pass);
  }
}

TEST_CASE("json and text emitters include every check") {
  SuiteReport rep = run_suite("ergodic_rates");
  std::string j = suite_report_json(rep);
  std::string t = suite_report_text(rep);
  CHECK(j == suite_report_json(rep));
  for (const auto& c : rep.checks) {
    CHECK(j.find(c.description) != std::string::npos);
    CHECK(t.find(c.description) != std::string::npos);
  }
}
