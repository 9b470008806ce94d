#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cspace/core.hpp"
#include "cspace/enumerate.hpp"
#include "cspace/parallel.hpp"

namespace cspace {

/// One failing space with enough data to replay it.
struct Violation {
  std::string key;  // isomorphism key, hex
  std::string space;  // text record
  std::string detail;
  nlohmann::json inputs;  // arguments of the failing predicate
};

/// Knobs shared by the verification jobs. Everything except `exec` and
/// `checkpoint` enters the fingerprint.
struct VerifyConfig {
  Exec exec{};
  std::uint64_t seed = 1;
  std::uint64_t samples = 100000;
  std::uint64_t space_samples = 1000;  // cross_check_keys: space pairs
  int max_colors = 4;                  // constrained universes
  Budget budget{};
  bool allow_slow = false;             // n = 6 full sweep
  std::string checkpoint;              // path for the slow sweep, empty = none
};

struct VerificationReport {
  std::string job_id;
  std::string universe;
  std::string mode;  // full | constrained | sampled
  std::uint64_t checked = 0;
  std::optional<std::uint64_t> predicted;  // analytic universe size in full mode
  bool expect_counterexample = false;
  bool budget_exceeded = false;
  std::vector<Violation> violations;
  /// Exact side counters (applicability, fallback use, ...), key-sorted.
  std::map<std::string, std::uint64_t> counters;
  std::vector<std::string> notes;
  nlohmann::json config;
  std::string fingerprint;
  double elapsed_seconds = 0;

  bool coverage_complete() const { return !predicted || *predicted == checked; }
  bool passed() const;
  /// Deterministic document (no timing).
  nlohmann::ordered_json to_json() const;
  /// Human-readable table.
  std::string summary() const;
  /// 0 pass, 2 violations (or missing expected counterexample), 3 budget.
  int exit_code() const;
};

/// FNV-1a 64 of the compact JSON dump, as 16 hex digits.
std::string fingerprint_of(const nlohmann::json& config);

/// a_2 <= a_3. n = 4 runs in expect-counterexample mode. Modes:
/// full (n <= 5, or n = 6 with allow_slow), constrained (isomorph-free with
/// max_colors), sampled (random spaces with seeded color counts).
VerificationReport verify_a2_le_a3(int n, const std::string& mode, const VerifyConfig& config);

/// Exactly-4-color, a_3 <= 4 universe up to n: every a_2 = a_3 = 4 space at n
/// must get a pattern; forbidden A_3 shapes must be absent past their bounds;
/// family sentinels and perturbed family members are classified.
VerificationReport verify_classification(int n, const VerifyConfig& config);

/// All lemma checkers plus three closedness implementations on every
/// non-empty color set (sampled sets when there are more than 10 colors).
VerificationReport verify_lemmas(int n, const std::string& mode, const VerifyConfig& config);

/// Both fusion finders on every space meeting their hypotheses, and the full
/// fusion chain.
VerificationReport verify_fusion(int n, const std::string& mode, const VerifyConfig& config);

/// Canonical keys against the brute-force oracles on random subset pairs
/// (config.samples, n <= 8, k <= 5) and space pairs (config.space_samples, n <= 6).
VerificationReport cross_check_keys(const VerifyConfig& config);

/// Job names accepted by run_job: a2le3, classify, lemmas, fusion, keys.
VerificationReport run_job(const std::string& job, int n, const std::string& mode,
                           const VerifyConfig& config);

}  // namespace cspace
