#include <doctest.h>

#include "chipfire/errors.hpp"
#include "chipfire/verify.hpp"

using namespace chipfire;

TEST_CASE("exhaustive checks pass on small catalog trees") {
  auto report = run_exhaustive_checks(4, 4);
  CHECK(report.passed());
  CHECK(report.checks.size() == 5);
  for (const auto& check : report.checks) CHECK(check.cases > 0);
  CHECK(report.to_text().find("all checks passed") != std::string::npos);
  CHECK_THROWS_AS(run_exhaustive_checks(8, 2), InputError);
}

TEST_CASE("property checks pass and are reproducible") {
  PropertyOptions options;
  options.cases = 60;
  auto a = run_property_checks(options);
  auto b = run_property_checks(options);
  CHECK(a.passed());
  CHECK(a.to_text() == b.to_text());
  CHECK(a.to_json() == b.to_json());

  options.seed = 2;
  auto c = run_property_checks(options);
  CHECK(c.passed());
  CHECK(c.to_text() != a.to_text());
}

TEST_CASE("report text marks failures") {
  VerifyReport report;
  CheckResult ok;
  ok.name = "good";
  ok.cases = 3;
  CheckResult bad;
  bad.name = "bad";
  bad.cases = 2;
  bad.failures = 1;
  bad.first_failure = "example";
  report.checks = {ok, bad};
  CHECK_FALSE(report.passed());
  const auto text = report.to_text();
  CHECK(text.find("PASS good") != std::string::npos);
  CHECK(text.find("FAIL bad") != std::string::npos);
  CHECK(text.find("1 check(s) failed") != std::string::npos);
}
