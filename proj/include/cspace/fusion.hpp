#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cspace/core.hpp"

namespace cspace {

/// Surjection from the colors of a space onto a coarser color set. Target
/// colors are numbered by their smallest source preimage.
class FusionMap {
 public:
  /// Normalizes an arbitrary color map (values need not be contiguous).
  static FusionMap from_image(std::span<const int> image);
  static FusionMap identity(int colors);
  /// Identifies each listed pair of colors (pairs may chain).
  static FusionMap merging(int colors, std::span<const std::pair<Color, Color>> merges);
  /// Parses "[t0,t1,...]".
  static FusionMap parse(const std::string& text);

  int source_colors() const { return static_cast<int>(map_.size()); }
  int target_colors() const { return targets_; }
  Color operator()(Color c) const { return map_.at(c); }
  const std::vector<Color>& image() const { return map_; }

  /// "[t0,t1,...]"
  std::string to_string() const;

  friend bool operator==(const FusionMap&, const FusionMap&) = default;

 private:
  std::vector<Color> map_;
  int targets_ = 0;
};

/// Recolors every pair through the map. Throws ArityMismatch when the map's
/// source size differs from the space's color count.
ColoredSpace apply_fusion(const ColoredSpace& space, const FusionMap& map);

/// True iff every color class of `fine` lies inside one class of `coarse`.
/// Throws SizeMismatch for different point counts.
bool is_fusion_of(const ColoredSpace& coarse, const ColoredSpace& fine);

struct FusionAttempt {
  FusionMap map;
  int drop_a2 = 0;
  int drop_a3 = 0;
  bool satisfies = false;
};

/// A space meeting a finder's hypotheses on which no candidate fusion meets
/// its contract. Never expected; kept as data so a sweep can report it.
struct CounterexampleToLemma {
  std::string lemma;
  ColoredSpace space;
  std::string constraints;
  std::vector<FusionAttempt> attempts;
};

struct FoundFusion {
  FusionMap map;
  int a2_before = 0, a3_before = 0;
  int a2_after = 0, a3_after = 0;
  bool proof_guided = false;  // false when the exhaustive fallback found it
};

using FinderResult = std::variant<FoundFusion, CounterexampleToLemma>;

/// One merge of two colors dropping a_2 by exactly 1 and a_3 by at least 1.
/// Requires a_2 >= 2, m_2 > 0, n >= 5 (PreconditionFailed otherwise).
FinderResult find_reducing_fusion(const ColoredSpace& space);

/// One or two disjoint pair merges with 1 <= drop(a_2) <= 2 and
/// drop(a_2) <= drop(a_3). Requires a_2 < C(n,2), m_2 = 0, n >= 5.
FinderResult find_matching_fusion(const ColoredSpace& space);

struct ChainStep {
  std::string rule;  // "reducing", "matching" or "rainbow"
  FusionMap map;
  ColoredSpace space;  // after the step
  int a2_before = 0, a3_before = 0;
  int a2_after = 0, a3_after = 0;
};

struct FusionChain {
  std::vector<ChainStep> steps;
  /// Some step started with a_2 > a_3, or the terminus has a_2 > a_3.
  bool falsified = false;
  std::optional<CounterexampleToLemma> counterexample;
};

/// Applies the finders (chosen by m_2) until a_2 <= 3. A rainbow space, where
/// neither finder applies, first merges colors 0 and 1. Requires n >= 5.
FusionChain fusion_chain(const ColoredSpace& space);

nlohmann::json to_json(const FusionChain& chain);
nlohmann::json to_json(const CounterexampleToLemma& cx);

}  // namespace cspace
