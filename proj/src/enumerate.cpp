#include "cspace/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cspace {

const char* to_string(Predicate p) {
  switch (p) {
    case Predicate::None: return "none";
    case Predicate::NoRainbowTriangle: return "no-rainbow-triangle";
    case Predicate::AllMatchings: return "all-matchings";
  }
  return "?";
}

Predicate parse_predicate(const std::string& name) {
  for (Predicate p : {Predicate::None, Predicate::NoRainbowTriangle, Predicate::AllMatchings})
    if (name == to_string(p)) return p;
  throw Error(ErrorKind::SyntaxError, "unknown predicate '" + name + "'");
}

std::string EnumerationConstraints::describe() const {
  std::ostringstream os;
  os << "n=" << n_target;
  if (max_colors) os << " max_colors=" << *max_colors;
  if (max_a3) os << " max_a3=" << *max_a3;
  if (exact_colors) os << " exact_colors=" << *exact_colors;
  if (predicate != Predicate::None) os << " predicate=" << to_string(predicate);
  return os.str();
}

namespace {

nlohmann::json opt(const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

std::optional<int> opt_from(const nlohmann::json& j, const char* name) {
  if (!j.contains(name) || j.at(name).is_null()) return std::nullopt;
  return j.at(name).get<int>();
}

}  // namespace

nlohmann::json EnumerationConstraints::to_json() const {
  nlohmann::ordered_json j;
  j["n_target"] = n_target;
  j["max_colors"] = opt(max_colors);
  j["max_a3"] = opt(max_a3);
  j["exact_colors"] = opt(exact_colors);
  j["predicate"] = to_string(predicate);
  return nlohmann::json::parse(j.dump());
}

EnumerationConstraints EnumerationConstraints::from_json(const nlohmann::json& j) {
  EnumerationConstraints c;
  c.n_target = j.at("n_target").get<int>();
  c.max_colors = opt_from(j, "max_colors");
  c.max_a3 = opt_from(j, "max_a3");
  c.exact_colors = opt_from(j, "exact_colors");
  c.predicate = parse_predicate(j.value("predicate", std::string("none")));
  return c;
}

bool CanonicalStore::insert(const IsomorphismKey& key, std::uint64_t count) {
  auto [it, fresh] = counts_.try_emplace(key, 0);
  it->second += count;
  return fresh;
}

void CanonicalStore::merge(const CanonicalStore& other) {
  for (const auto& [k, v] : other.counts_) insert(k, v);
}

std::vector<IsomorphismKey> CanonicalStore::sorted_keys() const {
  std::vector<IsomorphismKey> out;
  out.reserve(counts_.size());
  for (const auto& kv : counts_) out.push_back(kv.first);
  return out;
}

std::uint64_t CanonicalStore::count(const IsomorphismKey& key) const {
  auto it = counts_.find(key);
  return it == counts_.end() ? 0 : it->second;
}

namespace {

IsomorphismKey key_from_hex(const std::string& hex) {
  if (hex.size() % 2) throw Error(ErrorKind::SyntaxError, "odd-length key '" + hex + "'");
  IsomorphismKey key;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    unsigned v = 0;
    for (int d = 0; d < 2; ++d) {
      char ch = hex[i + d];
      v <<= 4;
      if (ch >= '0' && ch <= '9') v |= ch - '0';
      else if (ch >= 'a' && ch <= 'f') v |= ch - 'a' + 10;
      else throw Error(ErrorKind::SyntaxError, "bad hex digit in key '" + hex + "'");
    }
    key.bytes.push_back(static_cast<Color>(v));
  }
  return key;
}

}  // namespace

nlohmann::json checkpoint_to_json(const Frontier& f) {
  nlohmann::ordered_json j;
  j["format"] = "cspace-checkpoint";
  j["version"] = 1;
  j["constraints"] = f.constraints.to_json();
  j["n"] = f.level.n;
  j["nodes"] = f.nodes;
  auto& keys = j["keys"] = nlohmann::ordered_json::array();
  for (const auto& k : f.level.keys) keys.push_back(k.hex());
  return nlohmann::json::parse(j.dump());
}

Frontier checkpoint_from_json(const nlohmann::json& j) {
  if (j.value("format", std::string()) != "cspace-checkpoint")
    throw Error(ErrorKind::SyntaxError, "not a checkpoint document");
  if (j.value("version", 0) != 1)
    throw Error(ErrorKind::SyntaxError, "unsupported checkpoint version");
  Frontier f;
  f.constraints = EnumerationConstraints::from_json(j.at("constraints"));
  f.level.n = j.at("n").get<int>();
  f.nodes = j.value("nodes", std::uint64_t{0});
  for (const auto& h : j.at("keys")) {
    auto key = key_from_hex(h.get<std::string>());
    if (static_cast<int>(key.bytes.size()) != pair_count(f.level.n))
      throw Error(ErrorKind::SizeMismatch, "checkpoint key length does not match n");
    f.level.keys.push_back(std::move(key));
  }
  return f;
}

bool descent_forced(int c, int m) {
  if (c < 1 || m < 3) return false;
  const int pairs = pair_count(m);
  for (int s = 0; s <= c; ++s)
    for (int t = 0; s + t <= c; ++t) {
      const int o = c - s - t;
      if (2 * s + t < m) continue;
      if (o >= 1) return false;
      if (s + t * (m - 1) >= pairs) return false;
    }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetState {
  Budget budget;
  Clock::time_point start = Clock::now();
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};

  void flush(std::uint64_t& local) {
    if (!local) return;
    const auto total = nodes.fetch_add(local) + local;
    local = 0;
    if (budget.max_nodes && total > *budget.max_nodes) stop = true;
    if (budget.max_seconds &&
        std::chrono::duration<double>(Clock::now() - start).count() > *budget.max_seconds)
      stop = true;
  }
};

// Extends one parent by a point. New pairs (i, m) are colored for
// i = 0..m-1; a fresh color is always the next unused number.
class Extender {
 public:
  Extender(const EnumerationConstraints& cons, int cap, bool keep_exact_only, BudgetState& budget)
      : cons_(cons), cap_(cap), exact_only_(keep_exact_only), budget_(budget) {}

  void run(const ColoredSpace& parent, std::vector<std::string>& out) {
    p_ = &parent;
    m_ = parent.size();
    out_ = &out;
    types_.clear();
    if (cons_.max_a3) {
      for (int a = 0; a < m_; ++a)
        for (int b = a + 1; b < m_; ++b)
          for (int c = b + 1; c < m_; ++c)
            add_type(code(parent.at(a, b), parent.at(a, c), parent.at(b, c)));
    }
    if (cons_.predicate == Predicate::AllMatchings) {
      at_vertex_.assign(m_, ColorSet{});
      for (int a = 0; a < m_; ++a)
        for (int b = 0; b < m_; ++b)
          if (a != b) at_vertex_[a].insert(parent.at(a, b));
    }
    used_new_ = ColorSet{};
    col_.assign(m_, 0);
    dfs(0, parent.color_count());
  }

  std::uint64_t local_nodes = 0;

 private:
  static std::uint32_t code(Color a, Color b, Color c) { return TriangleType::of(a, b, c).code(); }

  bool add_type(std::uint32_t t) {
    for (auto& e : types_)
      if (e.first == t) {
        ++e.second;
        return false;
      }
    types_.emplace_back(t, 1);
    return true;
  }
  void remove_type(std::uint32_t t) {
    for (std::size_t i = 0; i < types_.size(); ++i)
      if (types_[i].first == t) {
        if (--types_[i].second == 0) {
          types_[i] = types_.back();
          types_.pop_back();
        }
        return;
      }
  }

  // Adds the triangles (j, i, m) for j < i; returns how many were added so
  // they can be undone even when the cap is exceeded midway.
  int add_triangles(int i, Color x) {
    int added = 0;
    for (int j = 0; j < i; ++j) {
      add_type(code(p_->at(j, i), col_[j], x));
      ++added;
      if (static_cast<int>(types_.size()) > *cons_.max_a3) break;
    }
    return added;
  }
  void remove_triangles(int i, Color x, int added) {
    for (int j = 0; j < added; ++j) remove_type(code(p_->at(j, i), col_[j], x));
  }

  bool predicate_ok(int i, Color x) const {
    switch (cons_.predicate) {
      case Predicate::None: return true;
      case Predicate::NoRainbowTriangle:
        for (int j = 0; j < i; ++j) {
          const Color a = p_->at(j, i), b = col_[j];
          if (a != b && a != x && b != x) return false;
        }
        return true;
      case Predicate::AllMatchings:
        return !at_vertex_[i].contains(x) && !used_new_.contains(x);
    }
    return true;
  }

  void dfs(int i, int colors) {
    if (budget_.stop.load(std::memory_order_relaxed)) return;
    if (++local_nodes >= 4096) budget_.flush(local_nodes);
    if (i == m_) {
      emit(colors);
      return;
    }
    const int limit = std::min(colors + 1, cap_);
    for (int x = 0; x < limit; ++x) {
      const Color cx = static_cast<Color>(x);
      if (!predicate_ok(i, cx)) continue;
      int added = 0;
      if (cons_.max_a3) {
        added = add_triangles(i, cx);
        if (static_cast<int>(types_.size()) > *cons_.max_a3) {
          remove_triangles(i, cx, added);
          continue;
        }
      }
      col_[i] = cx;
      const bool fresh_at_v = !used_new_.contains(cx);
      if (fresh_at_v) used_new_.insert(cx);
      dfs(i + 1, x == colors ? colors + 1 : colors);
      if (fresh_at_v) used_new_.erase(cx);
      if (cons_.max_a3) remove_triangles(i, cx, added);
    }
  }

  void emit(int colors) {
    if (exact_only_ && colors != *cons_.exact_colors) return;
    const int n = m_ + 1;
    buf_.clear();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) buf_.push_back(b == m_ ? col_[a] : p_->at(a, b));
    const auto child = ColoredSpace::trusted_from_pair_colors(n, colors, buf_);
    const auto key = isomorphism_key(child);
    out_->emplace_back(key.bytes.begin(), key.bytes.end());
  }

  const EnumerationConstraints& cons_;
  int cap_;
  bool exact_only_;
  BudgetState& budget_;

  const ColoredSpace* p_ = nullptr;
  int m_ = 0;
  std::vector<std::string>* out_ = nullptr;
  std::vector<std::pair<std::uint32_t, int>> types_;
  std::vector<ColorSet> at_vertex_;
  ColorSet used_new_;
  std::vector<Color> col_;
  std::vector<Color> buf_;
};

void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

Level extend_level(const Level& prev, const EnumerationConstraints& cons, const Exec& exec,
                   BudgetState& budget) {
  const int m = prev.n;
  const int n = m + 1;
  int cap = kMaxColors;
  if (cons.max_colors) cap = std::min(cap, *cons.max_colors);
  if (cons.exact_colors) cap = std::min(cap, *cons.exact_colors);

  const bool forced = cons.exact_colors && descent_forced(*cons.exact_colors, n);
  const bool final_level = n == cons.n_target;
  const bool exact_only = cons.exact_colors && (forced || final_level);

  std::vector<ColoredSpace> parents;
  parents.reserve(prev.keys.size());
  for (const auto& k : prev.keys) {
    auto p = decode_key(m, k);
    if (forced && p.color_count() != *cons.exact_colors) continue;
    parents.push_back(p);
  }

  std::vector<std::string> merged;
  const int workers = resolve_jobs(exec);
  if (workers <= 1) {
    Extender ext(cons, cap, exact_only, budget);
    for (const auto& p : parents) {
      ext.run(p, merged);
      if (merged.size() > (1u << 20)) sort_unique(merged);
      if (budget.stop) break;
    }
    budget.flush(ext.local_nodes);
    sort_unique(merged);
  } else {
    std::vector<std::vector<std::string>> per_thread(workers);
    const long count = static_cast<long>(parents.size());
#pragma omp parallel num_threads(workers)
    {
#ifdef _OPENMP
      auto& out = per_thread[omp_get_thread_num()];
#else
      auto& out = per_thread[0];
#endif
      Extender ext(cons, cap, exact_only, budget);
#pragma omp for schedule(dynamic, 1)
      for (long i = 0; i < count; ++i) {
        if (budget.stop.load(std::memory_order_relaxed)) continue;
        ext.run(parents[i], out);
        if (out.size() > (1u << 20)) sort_unique(out);
      }
      budget.flush(ext.local_nodes);
      sort_unique(out);
    }
    std::size_t total = 0;
    for (auto& v : per_thread) total += v.size();
    merged.reserve(total);
    for (auto& v : per_thread) {
      merged.insert(merged.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
      v.clear();
      v.shrink_to_fit();
    }
    sort_unique(merged);
  }

  Level next;
  next.n = n;
  next.keys.reserve(merged.size());
  for (const auto& s : merged) next.keys.push_back(IsomorphismKey{std::vector<Color>(s.begin(), s.end())});
  return next;
}

void check_constraints(const EnumerationConstraints& c) {
  if (c.n_target < 2 || c.n_target > kMaxPoints)
    throw Error(ErrorKind::BadArity, "n_target must be in 2.." + std::to_string(kMaxPoints));
  if ((c.max_colors && *c.max_colors < 1) || (c.max_a3 && *c.max_a3 < 1) ||
      (c.exact_colors && *c.exact_colors < 1))
    throw Error(ErrorKind::BadArity, "caps must be positive");
}

}  // namespace

std::vector<ColoredSpace> enumerate_classes(const EnumerationConstraints& cons,
                                            const EnumerationOptions& options,
                                            EnumerationStats* stats) {
  check_constraints(cons);
  BudgetState budget;
  budget.budget = options.budget;

  Level level;
  std::uint64_t base_nodes = 0;
  if (options.resume) {
    if (options.resume->constraints.to_json() != cons.to_json())
      throw Error(ErrorKind::PreconditionFailed, "checkpoint was written for different constraints");
    level = options.resume->level;
    base_nodes = options.resume->nodes;
    if (level.n > cons.n_target) throw Error(ErrorKind::PreconditionFailed, "checkpoint is past n_target");
  } else {
    level.n = 2;
    if (!cons.exact_colors || cons.n_target > 2 || *cons.exact_colors == 1)
      level.keys.push_back(IsomorphismKey{{0}});
  }
  if (stats) {
    stats->level_sizes.assign(cons.n_target + 1, 0);
    stats->level_sizes[level.n] = level.size();
  }

  while (level.n < cons.n_target) {
    Level next = extend_level(level, cons, options.exec, budget);
    if (budget.stop) {
      Frontier f{cons, std::move(level), base_nodes + budget.nodes.load()};
      throw BudgetExceededError("budget exhausted while building level n=" + std::to_string(f.level.n + 1),
                                std::move(f));
    }
    level = std::move(next);
    if (stats) stats->level_sizes[level.n] = level.size();
    if (options.on_level) options.on_level(Frontier{cons, level, base_nodes + budget.nodes.load()});
  }
  if (stats) stats->nodes = base_nodes + budget.nodes.load();

  std::vector<ColoredSpace> out;
  out.reserve(level.size());
  for (const auto& k : level.keys) out.push_back(decode_key(level.n, k));
  return out;
}

std::uint64_t enumerate_spaces(const EnumerationConstraints& constraints,
                               const std::function<void(const ColoredSpace&)>& sink,
                               const EnumerationOptions& options) {
  const auto spaces = enumerate_classes(constraints, options);
  for (const auto& s : spaces) sink(s);
  return spaces.size();
}

std::uint64_t bell(int k) {
  if (k < 0 || k > 25) throw Error(ErrorKind::TooLarge, "Bell number index out of range");
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < k; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

namespace {

void check_coloring_n(int n) {
  if (n < 1) throw Error(ErrorKind::TooSmall, "need at least one point");
  if (n > 6) throw Error(ErrorKind::TooLarge, "full colorings are capped at n=6");
}

// Restricted-growth strings over the pair slots, starting from a prefix.
struct RgsWalker {
  int n;
  int slots;
  std::vector<Color> a;
  const std::function<void(const ColoredSpace&)>* sink;
  std::uint64_t count = 0;

  void walk(int i, int max_color) {
    if (i == slots) {
      ++count;
      (*sink)(ColoredSpace::trusted_from_pair_colors(n, max_color + 1, a));
      return;
    }
    for (int x = 0; x <= max_color + 1; ++x) {
      a[i] = static_cast<Color>(x);
      walk(i + 1, std::max(max_color, x));
    }
  }
};

void prefixes(int len, std::vector<Color>& cur, int max_color, std::vector<ColoringShard>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(ColoringShard{cur, max_color});
    return;
  }
  for (int x = 0; x <= max_color + 1; ++x) {
    cur.push_back(static_cast<Color>(x));
    prefixes(len, cur, std::max(max_color, x), out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ColoringShard> coloring_shards(int n, int prefix_length) {
  check_coloring_n(n);
  const int len = std::clamp(prefix_length, 0, pair_count(n));
  std::vector<ColoringShard> out;
  std::vector<Color> cur;
  prefixes(len, cur, -1, out);
  return out;
}

std::uint64_t enumerate_shard(int n, const ColoringShard& shard,
                              const std::function<void(const ColoredSpace&)>& sink) {
  check_coloring_n(n);
  RgsWalker w{n, pair_count(n), std::vector<Color>(pair_count(n), 0), &sink};
  std::copy(shard.prefix.begin(), shard.prefix.end(), w.a.begin());
  w.walk(static_cast<int>(shard.prefix.size()), shard.max_color);
  return w.count;
}

std::uint64_t enumerate_all_colorings(int n, const std::function<void(const ColoredSpace&)>& sink) {
  return enumerate_shard(n, coloring_shards(n, 0).front(), sink);
}

namespace {

// Unbiased draw from [0, bound) by rejection.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

ColoredSpace random_space(int n, int c, std::uint64_t seed) {
  if (n < 2 || n > kMaxPoints) throw Error(ErrorKind::BadArity, "n out of range");
  const int pairs = pair_count(n);
  if (c < 1 || c > pairs || c > kMaxColors)
    throw Error(ErrorKind::BadArity, "need 1 <= c <= C(n,2)");
  std::mt19937_64 rng(seed);
  std::vector<Color> colors(pairs);
  std::vector<int> used(c, 0);
  for (auto& x : colors) {
    x = static_cast<Color>(draw(rng, c));
    ++used[x];
  }
  // One reassigned pair per missing color, taken from a class of size >= 2.
  for (int miss = 0; miss < c; ++miss) {
    if (used[miss]) continue;
    std::vector<int> donors;
    for (int p = 0; p < pairs; ++p)
      if (used[colors[p]] >= 2) donors.push_back(p);
    const int p = donors[draw(rng, donors.size())];
    --used[colors[p]];
    colors[p] = static_cast<Color>(miss);
    ++used[miss];
  }
  return ColoredSpace::from_pair_colors(n, c, colors);
}

}  // namespace cspace
