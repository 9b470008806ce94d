#include "cspace/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cspace/examples.hpp"
#include "cspace/fusion.hpp"
#include "cspace/io.hpp"
#include "cspace/isometry.hpp"
#include "cspace/oracle.hpp"
#include "cspace/structure.hpp"

namespace cspace {

bool VerificationReport::passed() const {
  if (budget_exceeded || !coverage_complete()) return false;
  return expect_counterexample ? !violations.empty() : violations.empty();
}

int VerificationReport::exit_code() const {
  if (budget_exceeded) return 3;
  return passed() ? 0 : 2;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["job_id"] = job_id;
  j["universe"] = universe;
  j["mode"] = mode;
  j["checked"] = checked;
  j["predicted"] = predicted ? nlohmann::ordered_json(*predicted) : nlohmann::ordered_json();
  j["expect_counterexample"] = expect_counterexample;
  j["budget_exceeded"] = budget_exceeded;
  j["passed"] = passed();
  j["fingerprint"] = fingerprint;
  j["config"] = config;
  j["counters"] = counters;
  j["notes"] = notes;
  auto& vs = j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    nlohmann::ordered_json e;
    e["key"] = v.key;
    e["detail"] = v.detail;
    e["inputs"] = v.inputs;
    e["space"] = v.space;
    e["replay"] = "cspace seq - <<'EOF'\n" + v.space + "EOF";
    vs.push_back(e);
  }
  return j;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << std::left;
  os << std::setw(14) << "job" << job_id << "\n";
  os << std::setw(14) << "universe" << universe << " (" << mode << ")\n";
  os << std::setw(14) << "checked" << checked;
  if (predicted) os << " / predicted " << *predicted;
  os << "\n";
  os << std::setw(14) << "violations" << violations.size()
     << (expect_counterexample ? " (counterexample expected)" : "") << "\n";
  for (const auto& [k, v] : counters) os << "  " << std::setw(34) << k << v << "\n";
  for (const auto& n : notes) os << "  note: " << n << "\n";
  for (std::size_t i = 0; i < violations.size() && i < 5; ++i)
    os << "  violation " << violations[i].key << ": " << violations[i].detail << "\n";
  if (violations.size() > 5) os << "  ... " << violations.size() - 5 << " more\n";
  os << std::setw(14) << "fingerprint" << fingerprint << "\n";
  os << std::setw(14) << "result"
     << (budget_exceeded ? "BUDGET EXCEEDED" : passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string fingerprint_of(const nlohmann::json& config) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : config.dump()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Seed of sample i; independent of how samples are split among workers.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i) { return splitmix(splitmix(seed) ^ splitmix(i)); }

std::uint64_t below(std::uint64_t bound, std::uint64_t& state) {
  state = splitmix(state);
  return state % bound;
}

struct Accum {
  std::uint64_t checked = 0;
  std::map<std::string, std::uint64_t> counters;
  std::vector<Violation> violations;

  void count(const std::string& name, std::uint64_t by = 1) { counters[name] += by; }

  void violate(const ColoredSpace& space, std::string detail, nlohmann::json inputs = {}) {
    violations.push_back(Violation{isomorphism_key(space).hex(), serialize_space(space, Format::Text),
                                   std::move(detail), std::move(inputs)});
  }

  void merge(Accum&& o) {
    checked += o.checked;
    for (auto& [k, v] : o.counters) counters[k] += v;
    violations.insert(violations.end(), std::make_move_iterator(o.violations.begin()),
                      std::make_move_iterator(o.violations.end()));
  }
};

int thread_index() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

using SpaceFn = std::function<void(const ColoredSpace&, Accum&)>;

nlohmann::json base_config(const std::string& job, int n, const std::string& mode, const VerifyConfig& c) {
  nlohmann::ordered_json j;
  j["job"] = job;
  j["n"] = n;
  j["mode"] = mode;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["space_samples"] = c.space_samples;
  j["max_colors"] = c.max_colors;
  j["max_nodes"] = c.budget.max_nodes ? nlohmann::ordered_json(*c.budget.max_nodes) : nlohmann::ordered_json();
  j["max_seconds"] = c.budget.max_seconds ? nlohmann::ordered_json(*c.budget.max_seconds) : nlohmann::ordered_json();
  return nlohmann::json::parse(j.dump());
}

VerificationReport make_report(const std::string& job, int n, const std::string& mode, const VerifyConfig& c) {
  VerificationReport r;
  r.job_id = job;
  r.mode = mode;
  r.config = base_config(job, n, mode, c);
  r.fingerprint = fingerprint_of(r.config);
  return r;
}

void finish(VerificationReport& r, Accum&& acc, Clock::time_point start) {
  r.checked += acc.checked;
  for (auto& [k, v] : acc.counters) r.counters[k] += v;
  auto& vs = acc.violations;
  std::sort(vs.begin(), vs.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.key, a.detail) < std::tie(b.key, b.detail);
  });
  const auto raw = vs.size();
  vs.erase(std::unique(vs.begin(), vs.end(),
                       [](const Violation& a, const Violation& b) { return a.key == b.key && a.detail == b.detail; }),
           vs.end());
  if (raw) r.counters["violations.raw"] += raw;
  r.violations = std::move(vs);
  r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
}

bool out_of_time(const VerifyConfig& c, Clock::time_point start) {
  return c.budget.max_seconds &&
         std::chrono::duration<double>(Clock::now() - start).count() > *c.budget.max_seconds;
}

// Runs fn over a list of items, in parallel when asked; per-worker
// accumulators are merged in worker order and sorted later.
template <class Item>
Accum run_items(const std::vector<Item>& items, const Exec& exec,
                const std::function<void(const Item&, Accum&)>& fn) {
  const int workers = resolve_jobs(exec);
  if (workers <= 1) {
    Accum acc;
    for (const auto& it : items) fn(it, acc);
    return acc;
  }
  std::vector<Accum> per(workers);
  const long count = static_cast<long>(items.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) fn(items[i], per[thread_index()]);
  Accum acc;
  for (auto& a : per) acc.merge(std::move(a));
  return acc;
}

// Shard checkpoint for long full sweeps.
struct SweepState {
  std::size_t next_shard = 0;
  Accum acc;
};

void save_sweep(const std::string& path, const std::string& fingerprint, const SweepState& s) {
  nlohmann::ordered_json j;
  j["format"] = "cspace-sweep-checkpoint";
  j["version"] = 1;
  j["fingerprint"] = fingerprint;
  j["next_shard"] = s.next_shard;
  j["checked"] = s.acc.checked;
  j["counters"] = s.acc.counters;
  auto& vs = j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : s.acc.violations) vs.push_back({{"key", v.key}, {"space", v.space}, {"detail", v.detail}, {"inputs", v.inputs}});
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

std::optional<SweepState> load_sweep(const std::string& path, const std::string& fingerprint) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  const auto j = nlohmann::json::parse(in);
  if (j.value("format", std::string()) != "cspace-sweep-checkpoint" || j.value("version", 0) != 1)
    throw Error(ErrorKind::SyntaxError, "not a sweep checkpoint: " + path);
  if (j.at("fingerprint").get<std::string>() != fingerprint)
    throw Error(ErrorKind::PreconditionFailed, "checkpoint belongs to another configuration: " + path);
  SweepState s;
  s.next_shard = j.at("next_shard").get<std::size_t>();
  s.acc.checked = j.at("checked").get<std::uint64_t>();
  s.acc.counters = j.at("counters").get<std::map<std::string, std::uint64_t>>();
  for (const auto& v : j.at("violations"))
    s.acc.violations.push_back(Violation{v.at("key"), v.at("space"), v.at("detail"), v.at("inputs")});
  return s;
}

// Every coloring of K_n, sharded by restricted-growth prefix.
void sweep_full(VerificationReport& r, int n, const VerifyConfig& cfg, const SpaceFn& fn, Clock::time_point start) {
  const auto shards = coloring_shards(n, std::min(pair_count(n), n <= 4 ? 2 : 7));
  SweepState state;
  if (!cfg.checkpoint.empty())
    if (auto s = load_sweep(cfg.checkpoint, r.fingerprint)) state = std::move(*s);

  const std::size_t batch = cfg.checkpoint.empty() ? shards.size() : 64;
  while (state.next_shard < shards.size()) {
    const auto end = std::min(shards.size(), state.next_shard + batch);
    std::vector<ColoringShard> part(shards.begin() + state.next_shard, shards.begin() + end);
    state.acc.merge(run_items<ColoringShard>(part, cfg.exec, [&](const ColoringShard& sh, Accum& acc) {
      enumerate_shard(n, sh, [&](const ColoredSpace& s) {
        ++acc.checked;
        fn(s, acc);
      });
    }));
    state.next_shard = end;
    if (!cfg.checkpoint.empty()) save_sweep(cfg.checkpoint, r.fingerprint, state);
    if (state.next_shard < shards.size() && out_of_time(cfg, start)) {
      r.budget_exceeded = true;
      r.notes.push_back("stopped after shard " + std::to_string(state.next_shard) + " of " +
                        std::to_string(shards.size()));
      break;
    }
  }
  r.predicted = bell(pair_count(n));
  r.universe = "all colorings of K_" + std::to_string(n);
  finish(r, std::move(state.acc), start);
  if (!r.budget_exceeded && !r.coverage_complete())
    throw Error(ErrorKind::PreconditionFailed, "stream count does not match the Bell number");
}

void sweep_constrained(VerificationReport& r, int n, const VerifyConfig& cfg, const SpaceFn& fn,
                       Clock::time_point start) {
  EnumerationConstraints cons;
  cons.n_target = n;
  cons.max_colors = cfg.max_colors;
  EnumerationOptions opt;
  opt.exec = cfg.exec;
  opt.budget = cfg.budget;
  r.universe = "isomorphism classes on " + std::to_string(n) + " points, " + cons.describe();
  std::vector<ColoredSpace> spaces;
  try {
    spaces = enumerate_classes(cons, opt);
  } catch (const BudgetExceededError& e) {
    r.budget_exceeded = true;
    r.notes.push_back(e.what());
    finish(r, Accum{}, start);
    return;
  }
  auto acc = run_items<ColoredSpace>(spaces, cfg.exec, [&](const ColoredSpace& s, Accum& a) {
    ++a.checked;
    fn(s, a);
  });
  r.predicted = spaces.size();
  finish(r, std::move(acc), start);
}

// Random spaces: sample i has seed sample_seed(seed, i) and color count drawn
// uniformly from 1..C(n,2).
ColoredSpace sample_space(int n, std::uint64_t seed, std::uint64_t i) {
  std::uint64_t st = sample_seed(seed, i);
  const int c = 1 + static_cast<int>(below(pair_count(n), st));
  return random_space(n, c, st);
}

void sweep_sampled(VerificationReport& r, int n, const VerifyConfig& cfg, const SpaceFn& fn,
                   Clock::time_point start) {
  r.universe = std::to_string(cfg.samples) + " random spaces on " + std::to_string(n) +
               " points, seed " + std::to_string(cfg.seed);
  const std::uint64_t block = 4096;
  std::vector<std::uint64_t> starts;
  for (std::uint64_t b = 0; b < cfg.samples; b += block) starts.push_back(b);
  auto acc = run_items<std::uint64_t>(starts, cfg.exec, [&](const std::uint64_t& b, Accum& a) {
    const auto end = std::min(cfg.samples, b + block);
    for (std::uint64_t i = b; i < end; ++i) {
      ++a.checked;
      fn(sample_space(n, cfg.seed, i), a);
    }
  });
  r.predicted = cfg.samples;
  finish(r, std::move(acc), start);
}

void sweep(VerificationReport& r, int n, const std::string& mode, const VerifyConfig& cfg, const SpaceFn& fn) {
  const auto start = Clock::now();
  if (mode == "full") {
    if (n > 6) throw Error(ErrorKind::TooLarge, "full mode is limited to n <= 6");
    if (n == 6 && !cfg.allow_slow)
      throw Error(ErrorKind::PreconditionFailed, "the n=6 full sweep is opt-in (allow slow jobs)");
    sweep_full(r, n, cfg, fn, start);
  } else if (mode == "constrained") {
    sweep_constrained(r, n, cfg, fn, start);
  } else if (mode == "sampled") {
    sweep_sampled(r, n, cfg, fn, start);
  } else {
    throw Error(ErrorKind::SyntaxError, "unknown mode '" + mode + "'");
  }
}

}  // namespace

// ---------------------------------------------------------------------------

VerificationReport verify_a2_le_a3(int n, const std::string& mode, const VerifyConfig& cfg) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "need n >= 3");
  auto r = make_report("a2le3", n, mode, cfg);
  r.expect_counterexample = n == 4;
  sweep(r, n, mode, cfg, [](const ColoredSpace& s, Accum& acc) {
    const int a2 = s.color_count();
    const int a3 = a3_count(s);
    if (a2 < a3) acc.count("a2<a3");
    else if (a2 == a3) acc.count("a2=a3");
    else acc.violate(s, "a_2 > a_3", {{"a2", a2}, {"a3", a3}});
  });
  if (n == 4) {
    const auto rk = isomorphism_key(examples::rainbow(4)).hex();
    const bool found = std::any_of(r.violations.begin(), r.violations.end(),
                                   [&](const Violation& v) { return v.key == rk; });
    r.notes.push_back(std::string("rainbow K_4 ") + (found ? "is" : "is NOT") + " among the violations");
    r.counters["rainbow_k4_found"] = found ? 1 : 0;
  }
  return r;
}

namespace {

void check_shapes(const ColoredSpace& s, int n, Accum& acc) {
  const auto a3 = a3_set(s);
  if (a3.size() != 4) return;
  struct Bound {
    const char* name;
    TriangleTypeSet shape;
    int max_n;
  };
  static const std::vector<Bound> bounds = {
      {"m3_case1", shapes::m3_case1(), 8},
      {"m3_case2", shapes::m3_case2(), 6},
      {"m3_case3", shapes::m3_case3(), 6},
      {"closed_loop1", shapes::closed_loop1(), 6},
  };
  for (const auto& b : bounds) {
    if (!same_shape(a3, b.shape)) continue;
    acc.count(std::string("shape.") + b.name + ".n" + std::to_string(n));
    if (n > b.max_n)
      acc.violate(s, std::string("A_3 shape ") + b.name + " beyond its point bound",
                  {{"shape", b.name}, {"n", n}, {"bound", b.max_n}});
  }
}

void check_classified(const ColoredSpace& s, Accum& acc, const char* prefix) {
  const auto matches = classify_theorem1(s);
  if (matches.empty()) {
    acc.violate(s, "a_2 = a_3 >= 4 but no pattern matches", {{"a2", s.color_count()}});
    return;
  }
  for (const auto& m : matches) {
    if (!validate_pattern(s, m)) acc.violate(s, "pattern fails pair-by-pair validation", to_json(m));
  }
  acc.count(std::string(prefix) + pattern_name(matches.front()));
}

bool has_pattern(const ColoredSpace& s, const std::string& name) {
  for (const auto& m : classify_theorem1(s))
    if (name == pattern_name(m)) return true;
  return false;
}

struct Sentinel {
  std::string label;
  ColoredSpace space;
  std::string pattern;
};

std::vector<Sentinel> sentinels() {
  using namespace examples;
  std::vector<Sentinel> out;
  // a_2 = 4 members.
  out.push_back({"matchings n=9, three single edges", family_matchings(9, {{{0, 1}}, {{2, 3}}, {{4, 5}}}),
                 "matchings-plus-remainder"});
  out.push_back({"two-cliques 5+5, two cross matchings",
                 family_two_cliques(5, 5, {{{0, 5}, {1, 6}}, {{2, 7}}}),
                 "two-cliques-cross-matchings"});
  for (int n = 9; n <= 12; ++n)
    out.push_back({"edge-apex n=" + std::to_string(n), family_edge_apex(n), "edge-apex"});
  // a_2 >= 5 members.
  out.push_back({"matchings n=10, four matchings",
                 family_matchings(10, {{{0, 1}, {2, 3}}, {{4, 5}}, {{6, 7}}, {{8, 9}}}),
                 "matchings-plus-remainder"});
  out.push_back({"matchings n=12, five matchings",
                 family_matchings(12, {{{0, 1}}, {{2, 3}, {4, 5}}, {{6, 7}}, {{8, 9}}, {{10, 11}}}),
                 "matchings-plus-remainder"});
  out.push_back({"two-cliques 6+6, three cross matchings",
                 family_two_cliques(6, 6, {{{0, 6}, {1, 7}}, {{2, 8}}, {{3, 9}, {4, 10}}}),
                 "two-cliques-cross-matchings"});
  out.push_back({"two-cliques 5+4, two cross matchings",
                 family_two_cliques(5, 4, {{{0, 5}}, {{1, 6}, {2, 7}}}),
                 "two-cliques-cross-matchings"});
  return out;
}

// One pair recolored to an existing color or a fresh one.
ColoredSpace perturb(const ColoredSpace& s, std::uint64_t& st) {
  auto colors = s.pair_colors();
  const auto p = below(colors.size(), st);
  const auto c = below(s.color_count() + 1, st);
  colors[p] = static_cast<Color>(c);
  std::vector<Color> matrix(s.size() * s.size(), 0);
  std::size_t k = 0;
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j) {
      matrix[i * s.size() + j] = matrix[j * s.size() + i] = colors[k++];
    }
  return ColoredSpace::from_matrix_renumbered(s.size(), matrix);
}

}  // namespace

VerificationReport verify_classification(int n, const VerifyConfig& cfg) {
  if (n < 4) throw Error(ErrorKind::TooSmall, "need n >= 4");
  auto r = make_report("classify", n, "constrained", cfg);
  const auto start = Clock::now();
  EnumerationConstraints cons;
  cons.n_target = n;
  cons.max_a3 = 4;
  cons.exact_colors = 4;
  r.universe = "isomorphism classes with 4 colors and a_3 <= 4 up to n=" + std::to_string(n);
  r.notes.push_back("coverage: a_2 = 4 exhaustive via constrained enumeration; a_2 >= 5 only on family "
                    "instances and random perturbations of them");

  Accum acc;
  std::vector<ColoredSpace> top;
  int reached = n;
  EnumerationOptions opt;
  opt.exec = cfg.exec;
  opt.budget = cfg.budget;
  opt.on_level = [&](const Frontier& f) {
    Accum level_acc;
    for (const auto& k : f.level.keys) check_shapes(decode_key(f.level.n, k), f.level.n, level_acc);
    acc.merge(std::move(level_acc));
    acc.count("level.n" + std::to_string(f.level.n), f.level.size());
  };
  try {
    top = enumerate_classes(cons, opt);
  } catch (const BudgetExceededError& e) {
    r.budget_exceeded = true;
    reached = e.frontier().level.n;
    r.notes.push_back(std::string(e.what()) + "; downgraded to n=" + std::to_string(reached));
    for (const auto& k : e.frontier().level.keys) top.push_back(decode_key(reached, k));
  }
  r.counters["reached_n"] = reached;

  for (const auto& s : top) {
    ++acc.checked;
    if (s.color_count() == 4 && a3_count(s) == 4) {
      acc.count("a2=a3=4");
      if (reached >= 9) check_classified(s, acc, "pattern.");
    }
  }
  r.predicted = top.size();

  // Family sentinels.
  for (const auto& sen : sentinels()) {
    const int a2 = sen.space.color_count();
    const int a3 = a3_count(sen.space);
    if (a2 == a3) acc.count("converse.a2=a3");
    else acc.count("converse.a2!=a3");
    if (!has_pattern(sen.space, sen.pattern))
      acc.violate(sen.space, "sentinel '" + sen.label + "' not classified as " + sen.pattern);
    else acc.count("sentinel.ok");
  }

  // Random perturbations of the family members; any perturbed space still in
  // the regime must be classified.
  const auto base = sentinels();
  const std::uint64_t rounds = std::min<std::uint64_t>(cfg.samples, 20000);
  for (std::uint64_t i = 0; i < rounds; ++i) {
    std::uint64_t st = sample_seed(cfg.seed, i);
    const auto& sen = base[below(base.size(), st)];
    auto s = perturb(sen.space, st);
    if (below(2, st)) s = perturb(s, st);
    if (s.size() < 9 || s.color_count() < 4 || s.color_count() != a3_count(s)) continue;
    acc.count("perturbed.in_regime");
    check_classified(s, acc, "perturbed.pattern.");
  }
  finish(r, std::move(acc), start);
  return r;
}

VerificationReport verify_lemmas(int n, const std::string& mode, const VerifyConfig& cfg) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "need n >= 3");
  auto r = make_report("lemmas", n, mode, cfg);
  const bool sampled = mode == "sampled";
  const std::uint64_t seed = cfg.seed;
  sweep(r, n, mode, cfg, [&](const ColoredSpace& s, Accum& acc) {
    for (const auto& rep : check_all_lemmas(s)) {
      if (!rep.applicable) continue;
      acc.count("lemma." + rep.lemma_id + ".applicable");
      if (!rep.holds) acc.violate(s, "lemma " + rep.lemma_id + " fails", {{"witness", rep.witness}});
    }
    if (!check_a3_bound(s)) acc.violate(s, "a_3 outside [1, C(a_2+2,3)]");

    const int c = s.color_count();
    const auto a3 = a3_set(s);
    auto test = [&](std::uint64_t mask) {
      ColorSet g;
      for (int x = 0; x < c; ++x)
        if ((mask >> x) & 1) g.insert(static_cast<Color>(x));
      const bool by_types = is_closed(s, a3, g);
      const bool by_cliques = is_closed_via_cliques(s, g);
      const bool by_oracle = oracle::union_is_equivalence(s, g);
      acc.count("closed.sets");
      if (by_types) acc.count("closed.true");
      if (by_types != by_cliques || by_types != by_oracle)
        acc.violate(s, "closedness implementations disagree",
                    {{"mask", mask}, {"types", by_types}, {"cliques", by_cliques}, {"oracle", by_oracle}});
    };
    if (!sampled && c <= 10) {
      for (std::uint64_t mask = 1; mask < (1ull << c); ++mask) test(mask);
    } else {
      // One random non-empty set per space, drawn from the space's own key.
      std::uint64_t st = splitmix(seed ^ std::hash<std::string>{}(serialize_space(s, Format::Text)));
      std::uint64_t mask = 0;
      while (!mask)
        for (int x = 0; x < std::min(c, 63); ++x)
          if (below(2, st)) mask |= 1ull << x;
      test(mask);
    }
  });
  return r;
}

VerificationReport verify_fusion(int n, const std::string& mode, const VerifyConfig& cfg) {
  if (n < 5) throw Error(ErrorKind::TooSmall, "the fusion lemmas need n >= 5");
  auto r = make_report("fusion", n, mode, cfg);
  sweep(r, n, mode, cfg, [n](const ColoredSpace& s, Accum& acc) {
    const int a2 = s.color_count();
    const int m2 = m_stats(s, 2).count;
    auto record = [&](const char* which, const FinderResult& res) {
      if (const auto* found = std::get_if<FoundFusion>(&res)) {
        acc.count(std::string(which) + ".found");
        if (!found->proof_guided) acc.count(std::string(which) + ".fallback");
      } else {
        const auto& cx = std::get<CounterexampleToLemma>(res);
        acc.violate(s, std::string(which) + " finder found no fusion", to_json(cx));
      }
    };
    if (a2 >= 2 && m2 > 0) record("reducing", find_reducing_fusion(s));
    if (m2 == 0 && a2 < pair_count(n)) record("matching", find_matching_fusion(s));

    const auto chain = fusion_chain(s);
    acc.count("chain.steps", chain.steps.size());
    if (chain.counterexample) acc.violate(s, "fusion chain stopped: " + chain.counterexample->lemma);
    if (chain.falsified) acc.violate(s, "fusion chain reached a_2 > a_3", to_json(chain));
  });

  // Hexagon sentinel.
  const auto hex = examples::hexagon();
  const auto res = find_reducing_fusion(hex);
  if (std::holds_alternative<FoundFusion>(res)) r.counters["sentinel.hexagon.reducing"] = 1;
  else {
    const auto& s = hex;
    r.violations.push_back(Violation{isomorphism_key(s).hex(), serialize_space(s, Format::Text),
                                     "hexagon sentinel: no reducing fusion", {}});
  }
  return r;
}

VerificationReport cross_check_keys(const VerifyConfig& cfg) {
  auto r = make_report("keys", 0, "sampled", cfg);
  const auto start = Clock::now();
  r.universe = std::to_string(cfg.samples) + " subset pairs (n <= 8, k <= 5) and " +
               std::to_string(cfg.space_samples) + " space pairs (n <= 6), seed " + std::to_string(cfg.seed);

  // Subset pairs. Few colors so that isometric pairs are common.
  std::vector<std::uint64_t> idx(cfg.samples);
  for (std::uint64_t i = 0; i < cfg.samples; ++i) idx[i] = i;
  auto acc = run_items<std::uint64_t>(idx, cfg.exec, [&](const std::uint64_t& i, Accum& a) {
    std::uint64_t st = sample_seed(cfg.seed, i);
    const int n = 4 + static_cast<int>(below(5, st));
    const int c = 1 + static_cast<int>(below(3, st));
    const auto s = random_space(n, c, splitmix(st));
    const int k = 2 + static_cast<int>(below(std::min(5, n) - 1, st));
    auto pick = [&] {
      std::vector<Point> pts(n);
      for (int x = 0; x < n; ++x) pts[x] = x;
      for (int x = 0; x < k; ++x) std::swap(pts[x], pts[x + below(n - x, st)]);
      pts.resize(k);
      std::sort(pts.begin(), pts.end());
      return pts;
    };
    const auto y = pick();
    const auto z = pick();
    const bool by_key = isometry_key(s, y) == isometry_key(s, z);
    const bool by_oracle = oracle::isometric(s, y, z);
    ++a.checked;
    a.count(by_oracle ? "subsets.isometric" : "subsets.not_isometric");
    if (by_key != by_oracle)
      a.violate(s, "isometry key disagrees with brute force", {{"y", y}, {"z", z}, {"key", by_key}});
  });

  // Space pairs: half relabeled copies, half independent draws.
  std::vector<std::uint64_t> idx2(cfg.space_samples);
  for (std::uint64_t i = 0; i < cfg.space_samples; ++i) idx2[i] = i;
  acc.merge(run_items<std::uint64_t>(idx2, cfg.exec, [&](const std::uint64_t& i, Accum& a) {
    std::uint64_t st = sample_seed(cfg.seed ^ 0x5ace5ull, i);
    const int n = 3 + static_cast<int>(below(4, st));
    const int c = 1 + static_cast<int>(below(std::min(5, pair_count(n)), st));
    const auto s = random_space(n, c, splitmix(st));
    ColoredSpace t = s;
    if (below(2, st)) {
      std::vector<int> perm(n), cperm(c);
      for (int x = 0; x < n; ++x) perm[x] = x;
      for (int x = 0; x < c; ++x) cperm[x] = x;
      for (int x = n - 1; x > 0; --x) std::swap(perm[x], perm[below(x + 1, st)]);
      for (int x = c - 1; x > 0; --x) std::swap(cperm[x], cperm[below(x + 1, st)]);
      std::vector<Color> matrix(n * n, 0);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (x != y) matrix[perm[x] * n + perm[y]] = static_cast<Color>(cperm[s.at(x, y)]);
      t = ColoredSpace::from_matrix_renumbered(n, matrix);
      a.count("spaces.relabeled");
      if (!isomorphic(s, t)) a.violate(s, "relabeled copy not isomorphic by key");
    } else {
      t = random_space(n, c, splitmix(st ^ 1));
    }
    const bool by_key = isomorphic(s, t);
    const bool by_oracle = oracle::isomorphic(s, t);
    ++a.checked;
    a.count(by_oracle ? "spaces.isomorphic" : "spaces.not_isomorphic");
    if (by_key != by_oracle)
      a.violate(s, "isomorphism key disagrees with brute force",
                {{"other", serialize_space(t, Format::Text)}, {"key", by_key}});
  }));

  for (int n = 3; n <= 8; ++n) {
    if (isomorphic(examples::rainbow(n), examples::monochromatic(n)))
      acc.violate(examples::rainbow(n), "rainbow isomorphic to monochromatic");
  }
  r.predicted = cfg.samples + cfg.space_samples;
  finish(r, std::move(acc), start);
  return r;
}

VerificationReport run_job(const std::string& job, int n, const std::string& mode, const VerifyConfig& cfg) {
  if (job == "a2le3") return verify_a2_le_a3(n, mode, cfg);
  if (job == "classify") return verify_classification(n, cfg);
  if (job == "lemmas") return verify_lemmas(n, mode, cfg);
  if (job == "fusion") return verify_fusion(n, mode, cfg);
  if (job == "keys") return cross_check_keys(cfg);
  throw Error(ErrorKind::SyntaxError, "unknown job '" + job + "' (a2le3, classify, lemmas, fusion, keys)");
}

}  // namespace cspace
