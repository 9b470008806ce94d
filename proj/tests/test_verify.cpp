#include <doctest.h>

#include "cspace/verify.hpp"

using namespace cspace;

TEST_CASE("a2 <= a3 sweeps") {
  VerifyConfig cfg;
  const auto r4 = verify_a2_le_a3(4, "full", cfg);
  CHECK(r4.expect_counterexample);
  CHECK(r4.checked == 203);
  CHECK(r4.passed());
  CHECK(!r4.violations.empty());
  CHECK(r4.counters.at("rainbow_k4_found") == 1);

  const auto r5 = verify_a2_le_a3(5, "full", cfg);
  CHECK(r5.checked == 115975);
  CHECK(r5.violations.empty());
  CHECK(r5.passed());
  CHECK(r5.exit_code() == 0);
}

TEST_CASE("reports do not depend on the worker count") {
  VerifyConfig one, four;
  one.samples = four.samples = 3000;
  four.exec = Exec{4};
  const auto a = verify_a2_le_a3(6, "sampled", one);
  const auto b = verify_a2_le_a3(6, "sampled", four);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.fingerprint == b.fingerprint);
  const auto c = verify_lemmas(5, "full", one);
  four.samples = one.samples;
  const auto d = verify_lemmas(5, "full", four);
  CHECK(c.to_json().dump() == d.to_json().dump());
}

TEST_CASE("fingerprints change with the configuration") {
  VerifyConfig a, b;
  b.seed = 2;
  CHECK(verify_a2_le_a3(4, "full", a).fingerprint != verify_a2_le_a3(4, "full", b).fingerprint);
  CHECK(fingerprint_of(nlohmann::json{{"x", 1}}).size() == 16);
}

TEST_CASE("mode and size guards") {
  VerifyConfig cfg;
  CHECK_THROWS_AS(verify_a2_le_a3(6, "full", cfg), Error);
  CHECK_THROWS_AS(verify_a2_le_a3(7, "full", cfg), Error);
  CHECK_THROWS_AS(verify_a2_le_a3(5, "bogus", cfg), Error);
  CHECK_THROWS_AS(run_job("nope", 5, "full", cfg), Error);
}

TEST_CASE("expect-counterexample guards against vacuous passes") {
  VerificationReport r;
  r.expect_counterexample = true;
  CHECK(!r.passed());
  CHECK(r.exit_code() == 2);
  r.budget_exceeded = true;
  CHECK(r.exit_code() == 3);
}

TEST_CASE("key cross-check") {
  VerifyConfig cfg;
  cfg.samples = 2000;
  cfg.space_samples = 200;
  const auto r = cross_check_keys(cfg);
  CHECK(r.violations.empty());
  CHECK(r.counters.at("subsets.isometric") > 0);
  CHECK(r.counters.at("spaces.isomorphic") > 0);
  CHECK(r.counters.at("spaces.not_isomorphic") > 0);
}

TEST_CASE("classification job to n=9") {
  VerifyConfig cfg;
  cfg.samples = 2000;
  const auto r = verify_classification(9, cfg);
  CHECK(r.violations.empty());
  CHECK(r.counters.at("reached_n") == 9);
  CHECK(r.counters.at("a2=a3=4") == 10);
  CHECK(r.counters.at("sentinel.ok") == 10);
}
