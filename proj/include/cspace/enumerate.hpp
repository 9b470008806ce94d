#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cspace/core.hpp"
#include "cspace/isometry.hpp"
#include "cspace/parallel.hpp"

namespace cspace {

/// Extra hereditary filters understood by the generator.
enum class Predicate {
  None,
  NoRainbowTriangle,  // no triangle with three distinct colors
  AllMatchings,       // every color class is a matching (m_2 = 0)
};

const char* to_string(Predicate p);
Predicate parse_predicate(const std::string& name);

struct EnumerationConstraints {
  int n_target = 2;
  std::optional<int> max_colors;
  std::optional<int> max_a3;
  Predicate predicate = Predicate::None;
  /// Keep only spaces with exactly this many colors at n_target. Levels below
  /// the target are still generated in full, except where every c-colored
  /// space is known to contain a c-colored subspace one point smaller (see
  /// descent_forced).
  std::optional<int> exact_colors;

  std::string describe() const;
  nlohmann::json to_json() const;
  static EnumerationConstraints from_json(const nlohmann::json& j);
};

struct Budget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> max_seconds;
};

/// Deduplicated level: one canonical space per isomorphism class, sorted by key.
struct Level {
  int n = 0;
  std::vector<IsomorphismKey> keys;

  std::size_t size() const { return keys.size(); }
};

/// Set of isomorphism keys with multiplicities. Inserts from several workers go
/// to private stores that are merged afterwards, so the result does not depend
/// on insertion order.
class CanonicalStore {
 public:
  /// True when the key was new.
  bool insert(const IsomorphismKey& key, std::uint64_t count = 1);
  void merge(const CanonicalStore& other);
  std::size_t size() const { return counts_.size(); }
  bool contains(const IsomorphismKey& key) const { return counts_.count(key) != 0; }
  /// Keys in ascending order.
  std::vector<IsomorphismKey> sorted_keys() const;
  std::uint64_t count(const IsomorphismKey& key) const;

 private:
  std::map<IsomorphismKey, std::uint64_t> counts_;
};

/// Resumable state: the last completed level.
struct Frontier {
  EnumerationConstraints constraints;
  Level level;
  std::uint64_t nodes = 0;
};

/// Thrown when a budget runs out; carries the last completed level.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, Frontier frontier)
      : Error(ErrorKind::BudgetExceeded, what), frontier_(std::move(frontier)) {}
  const Frontier& frontier() const { return frontier_; }

 private:
  Frontier frontier_;
};

/// Checkpoint JSON, format "cspace-checkpoint" version 1:
/// {"format","version","constraints":{...},"n","nodes","keys":[hex,...]}.
nlohmann::json checkpoint_to_json(const Frontier& frontier);
Frontier checkpoint_from_json(const nlohmann::json& j);

struct EnumerationStats {
  std::vector<std::size_t> level_sizes;  // index = n
  std::uint64_t nodes = 0;
};

struct EnumerationOptions {
  Exec exec{};
  Budget budget{};
  /// Called after each completed level (for checkpointing).
  std::function<void(const Frontier&)> on_level;
  /// Start from a saved level instead of n = 2.
  std::optional<Frontier> resume;
};

/// All isomorphism classes at n_target, as canonical spaces sorted by key.
/// Throws BadArity for n_target < 2 or > kMaxPoints, BudgetExceededError.
std::vector<ColoredSpace> enumerate_classes(const EnumerationConstraints& constraints,
                                            const EnumerationOptions& options = {},
                                            EnumerationStats* stats = nullptr);

/// Streams the classes in key order; returns how many were emitted.
std::uint64_t enumerate_spaces(const EnumerationConstraints& constraints,
                               const std::function<void(const ColoredSpace&)>& sink,
                               const EnumerationOptions& options = {});

/// Whether every space with exactly c colors on m points has an (m-1)-point
/// subspace that still uses c colors. Sufficient test: no mix of single-edge,
/// star and other color classes can make every point removal lose a color.
bool descent_forced(int c, int m);

/// Bell number B(k), exact for k <= 25.
std::uint64_t bell(int k);

/// Streams every coloring of the C(n,2) pairs up to color renaming (set
/// partitions of the pairs, colors numbered by first use). Throws TooLarge for
/// n > 6.
std::uint64_t enumerate_all_colorings(int n, const std::function<void(const ColoredSpace&)>& sink);

/// The same universe split into shards (restricted-growth prefixes of fixed
/// length) so workers can own disjoint branches.
struct ColoringShard {
  std::vector<Color> prefix;
  int max_color = -1;  // largest color in the prefix
};
std::vector<ColoringShard> coloring_shards(int n, int prefix_length);
std::uint64_t enumerate_shard(int n, const ColoringShard& shard,
                              const std::function<void(const ColoredSpace&)>& sink);

/// Uniform color per pair, then a deterministic repair so all c colors occur.
/// Throws BadArity unless 1 <= c <= C(n,2).
ColoredSpace random_space(int n, int c, std::uint64_t seed);

}  // namespace cspace
