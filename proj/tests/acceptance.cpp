// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cspace/enumerate.hpp"
#include "cspace/examples.hpp"
#include "cspace/io.hpp"
#include "cspace/isometry.hpp"
#include "cspace/structure.hpp"
#include "cspace/verify.hpp"

using namespace cspace;

namespace {

// Pinned limits. Runtime limits are wall-clock seconds; all value checks are
// exact integer or set equality.
constexpr double kLimitSequences = 1;
constexpr double kLimitExtremes = 10;
constexpr double kLimitTightness = 120;
constexpr double kLimitExtended = 30 * 60;
constexpr double kLimitLemmas = 30 * 60;
constexpr double kLimitFusion = 30 * 60;
constexpr double kLimitClassification = 60 * 60;
constexpr double kLimitExamples = 60;
constexpr double kLimitEdgeApex = 1;
constexpr double kLimitKeys = 120;
constexpr double kLimitEngine = 30 * 60;

constexpr std::uint64_t kSeed = 20240601;
constexpr std::uint64_t kExtendedSamples = 10'000'000;
constexpr std::uint64_t kLemmaSamples = 100'000;
constexpr std::uint64_t kKeySubsetPairs = 10'000;
constexpr std::uint64_t kKeySpacePairs = 1'000;
// Frozen output of the brute-force dedup over the 203 colorings of K_4.
constexpr std::size_t kClassesN4 = 25;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void info(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

int failures = 0;

void criterion(int id, const char* name, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs <= limit, "runtime over limit");
  if (!o.ok) ++failures;
  std::printf("[%s] %2d %s (%.2f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, secs, limit,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

std::string summary_of(const VerificationReport& r) {
  std::ostringstream os;
  os << r.job_id << " " << r.mode << " checked=" << r.checked << " violations=" << r.violations.size();
  return os.str();
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

int main() {
  Exec exec{0};

  criterion(1, "octahedron and hexagon sequences", kLimitSequences, [&](Outcome& o) {
    const auto oct = isometric_sequence(examples::octahedron(), exec);
    const auto hex = isometric_sequence(examples::hexagon(), exec);
    o.require(oct.values == std::vector<int>{1, 2, 2, 2, 1, 1}, "octahedron " + oct.to_string());
    o.require(hex.values == std::vector<int>{1, 3, 3, 3, 1, 1}, "hexagon " + hex.to_string());
  });

  criterion(2, "monochromatic and rainbow extremes, n=4..8", kLimitExtremes, [&](Outcome& o) {
    for (int n = 4; n <= 8; ++n) {
      const auto mono = isometric_sequence(examples::monochromatic(n), exec);
      o.require(mono.values == std::vector<int>(n, 1), "monochromatic n=" + std::to_string(n));
      const auto rb = isometric_sequence(examples::rainbow(n), exec);
      bool ok = rb[1] == 1 && rb[n] == 1;
      for (int k = 2; k < n; ++k) ok = ok && rb[k] == binom(n, k);
      o.require(ok, "rainbow n=" + std::to_string(n) + " " + rb.to_string());
    }
  });

  criterion(3, "a2 <= a3 tightness at n=4, holds at n=5 (single worker)", kLimitTightness, [&](Outcome& o) {
    VerifyConfig cfg;
    cfg.exec = Exec{1};
    const auto r4 = verify_a2_le_a3(4, "full", cfg);
    o.require(r4.checked == 203, "n=4 checked " + std::to_string(r4.checked));
    o.require(r4.counters.count("rainbow_k4_found") && r4.counters.at("rainbow_k4_found") == 1,
              "rainbow K_4 not among the violations");
    o.require(r4.passed(), "n=4 found no violation");
    const auto r5 = verify_a2_le_a3(5, "full", cfg);
    o.require(r5.checked == 115975, "n=5 checked " + std::to_string(r5.checked));
    o.require(r5.violations.empty(), "n=5 violations " + std::to_string(r5.violations.size()));
    o.info("n=4 violating classes " + std::to_string(r4.violations.size()) + ", n=5 checked " +
           std::to_string(r5.checked));
  });

  criterion(4, "a2 <= a3 at n=6: constrained universe and 10^7 samples", kLimitExtended, [&](Outcome& o) {
    VerifyConfig cfg;
    cfg.exec = exec;
    cfg.seed = kSeed;
    cfg.max_colors = 4;
    const auto c = verify_a2_le_a3(6, "constrained", cfg);
    o.require(c.passed(), summary_of(c));
    cfg.samples = kExtendedSamples;
    const auto s = verify_a2_le_a3(6, "sampled", cfg);
    o.require(s.checked == kExtendedSamples && s.passed(), summary_of(s));
    o.info("constrained classes " + std::to_string(c.checked) + ", samples " + std::to_string(s.checked));
  });

  criterion(5, "lemma suite over n=5 full and n=6 constrained", kLimitLemmas, [&](Outcome& o) {
    VerifyConfig cfg;
    cfg.exec = exec;
    cfg.seed = kSeed;
    for (const auto& [n, mode] : std::vector<std::pair<int, std::string>>{{5, "full"}, {6, "constrained"}}) {
      const auto r = verify_lemmas(n, mode, cfg);
      o.require(r.passed(), summary_of(r) + (r.violations.empty() ? "" : " first: " + r.violations.front().detail));
      o.info(summary_of(r) + " closed.sets=" + std::to_string(r.counters.count("closed.sets") ? r.counters.at("closed.sets") : 0));
    }
    cfg.samples = kLemmaSamples;
    const auto s = verify_lemmas(7, "sampled", cfg);
    o.require(s.passed(), summary_of(s));
  });

  criterion(6, "fusion finders over the n=5 universe", kLimitFusion, [&](Outcome& o) {
    VerifyConfig cfg;
    cfg.exec = exec;
    const auto r = verify_fusion(5, "full", cfg);
    o.require(r.passed(), summary_of(r) + (r.violations.empty() ? "" : " first: " + r.violations.front().detail));
    auto get = [&](const char* k) { return r.counters.count(k) ? r.counters.at(k) : 0; };
    o.require(get("reducing.found") > 0 && get("matching.found") > 0, "a finder was never exercised");
    o.info("reducing " + std::to_string(get("reducing.found")) + " (fallback " +
           std::to_string(get("reducing.fallback")) + "), matching " + std::to_string(get("matching.found")) +
           " (fallback " + std::to_string(get("matching.fallback")) + ")");
  });

  criterion(7, "classification of the a3 <= 4 universe to n=9", kLimitClassification, [&](Outcome& o) {
    VerifyConfig cfg;
    cfg.exec = exec;
    cfg.seed = kSeed;
    cfg.budget.max_seconds = kLimitClassification;
    const auto r = verify_classification(9, cfg);
    const auto reached = r.counters.count("reached_n") ? r.counters.at("reached_n") : 0;
    o.require(reached == 9, "downgraded to n=" + std::to_string(reached));
    o.require(r.passed(), summary_of(r) + (r.violations.empty() ? "" : " first: " + r.violations.front().detail));
    o.info("a2=a3=4 spaces at n=9: " +
           std::to_string(r.counters.count("a2=a3=4") ? r.counters.at("a2=a3=4") : 0));
  });

  criterion(8, "subset A_3 claims of the four constructions", kLimitExamples, [&](Outcome& o) {
    for (const auto& claim : examples::subset_claims()) {
      int qualifying = 0;
      std::vector<std::string> bad;
      for (PointMask w = 0; w < (1u << claim.space.size()); ++w) {
        if (!claim.qualifies(w)) continue;
        ++qualifying;
        const auto got = a3_set_of(claim.space, w);
        if (!(got == claim.expected)) {
          std::string pts;
          for (Point p : points_of(w)) pts += std::to_string(p);
          bad.push_back("W={" + pts + "} A_3=" + got.to_string());
        }
      }
      std::string msg = claim.name + ": " + std::to_string(qualifying - static_cast<int>(bad.size())) + "/" +
                        std::to_string(qualifying) + " match";
      for (const auto& b : bad) msg += ", " + b;
      o.require(bad.empty(), msg);
      if (bad.empty()) o.info(msg);
    }
  });

  criterion(9, "edge-apex family has a2 = a3 = 4 for n=9..12", kLimitEdgeApex, [&](Outcome& o) {
    for (int n = 9; n <= 12; ++n) {
      const auto s = examples::family_edge_apex(n);
      o.require(s.color_count() == 4 && a3_count(s) == 4, "n=" + std::to_string(n));
    }
  });

  criterion(10, "canonical keys against brute force", kLimitKeys, [&](Outcome& o) {
    VerifyConfig cfg;
    cfg.exec = exec;
    cfg.seed = kSeed;
    cfg.samples = kKeySubsetPairs;
    cfg.space_samples = kKeySpacePairs;
    const auto r = cross_check_keys(cfg);
    o.require(r.checked == kKeySubsetPairs + kKeySpacePairs, "checked " + std::to_string(r.checked));
    o.require(r.violations.empty(), summary_of(r));
  });

  criterion(11, "engine counts and determinism", kLimitEngine, [&](Outcome& o) {
    EnumerationConstraints c;
    c.n_target = 3;
    const auto n3 = enumerate_classes(c).size();
    c.n_target = 4;
    const auto n4 = enumerate_classes(c).size();
    o.require(n3 == 3, "n=3 gives " + std::to_string(n3));
    o.require(n4 == kClassesN4, "n=4 gives " + std::to_string(n4));

    auto dump = [](const std::vector<ColoredSpace>& v) {
      std::string out;
      for (const auto& s : v) out += "key " + isomorphism_key(s).hex() + "\n" + serialize_space(s, Format::Text);
      return out;
    };
    EnumerationConstraints d;
    d.n_target = 6;
    d.max_colors = 4;
    const auto a = dump(enumerate_classes(d, EnumerationOptions{Exec{1}}));
    const auto b = dump(enumerate_classes(d, EnumerationOptions{Exec{4}}));
    o.require(a == b, "serial and 4-worker outputs differ");
    o.info("n=6, <=4 colors: " + std::to_string(std::count(a.begin(), a.end(), 'k')) + " records identical");
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
