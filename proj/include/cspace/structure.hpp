#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cspace/core.hpp"
#include "cspace/isometry.hpp"

namespace cspace {

// ---------------------------------------------------------------------------
// Closed color sets

/// Γ is closed when every triangle type with two sides colored in Γ has its
/// third side in Γ. Evaluated against A_3. Throws EmptyColorSet.
bool is_closed(const ColoredSpace& space, const ColorSet& colors);
bool is_closed(const ColoredSpace& space, const TriangleTypeSet& a3, const ColorSet& colors);

/// Same predicate via the union graph: every connected component is a clique.
bool is_closed_via_cliques(const ColoredSpace& space, const ColorSet& colors);

/// Components of the union graph, isolated points as singletons, ordered by
/// least member. Throws EmptyColorSet.
std::vector<std::vector<Point>> connected_components(const ColoredSpace& space, const ColorSet& colors);

// ---------------------------------------------------------------------------
// Lemma checkers

struct LemmaReport {
  std::string lemma_id;
  bool applicable = false;
  bool holds = true;  // meaningful only when applicable
  std::string witness;

  bool violated() const { return applicable && !holds; }
};

nlohmann::json to_json(const LemmaReport& report);

/// If no color has a vertex of degree k+1 then n <= 1 + k*a_2, strictly when
/// k is odd and a_2 even. Requires 1 <= k < n.
LemmaReport check_lemma_m0(const ColoredSpace& space, int k);

/// If a_2 = a_3 = m_2 then a_2 <= 2.
LemmaReport check_lemma_m2(const ColoredSpace& space);

/// A color δ that occurs in exactly one triangle type βγδ forces, for every
/// other color α, αβγ ∈ A_3 or both ββα, γγα ∈ A_3; and β, γ ∈ M_2 once n >= 5.
LemmaReport check_lemma_delta(const ColoredSpace& space);

/// With four colors and a closed 3-set {α,β,γ}, the types αδδ, βδδ, γδδ occur
/// for the remaining color δ.
LemmaReport check_lemma_closed_triple(const ColoredSpace& space);

/// For a_2 = a_3 = 4, m_3 > 0 and no monochromatic triangle type: A_3 has one
/// of three shapes, with n <= 8 or n <= 6 respectively.
LemmaReport check_lemma_m3_shapes(const ColoredSpace& space);

/// For a_2 = a_3 = 4 and some ααα with {α} closed: A_3 has one of three shapes
/// (the first only for n <= 6).
LemmaReport check_lemma_closed_loop(const ColoredSpace& space);

/// For a_2 = a_3 = 4 and some ααα with {α} not closed: A_3 ≅ {ααα,ααβ,ααγ,ααδ}.
LemmaReport check_lemma_open_loop(const ColoredSpace& space);

/// 1 <= a_3 <= C(a_2 + 2, 3).
bool check_a3_bound(const ColoredSpace& space);

/// Every lemma checker above (degree bound for every admissible k).
std::vector<LemmaReport> check_all_lemmas(const ColoredSpace& space);

// ---------------------------------------------------------------------------
// Triangle-type shapes up to color renaming

/// Least sorted code list of A_3 over all permutations of the colors that
/// occur in it.
std::vector<std::uint32_t> canonical_shape(const TriangleTypeSet& types);

bool same_shape(const TriangleTypeSet& a, const TriangleTypeSet& b);

/// Builds a type set from role letters, e.g. {"aab","aac","aad","bcd"}.
TriangleTypeSet shape_from_roles(std::initializer_list<const char*> roles);

namespace shapes {
TriangleTypeSet m3_case1();  // {ααβ,ααγ,ααδ,βγδ}, n <= 8
TriangleTypeSet m3_case2();  // {ααβ,ααγ,ββγ,ααδ}, n <= 6
TriangleTypeSet m3_case3();  // {ααβ,ααγ,ββγ,αβδ}, n <= 6
TriangleTypeSet closed_loop1();  // {ααα,αβγ,αγδ,αβδ}, n <= 6
TriangleTypeSet closed_loop2();  // {ααα,αββ,γγα,βγδ}
TriangleTypeSet closed_loop3();  // {ααα,αββ,αβγ,αβδ}
TriangleTypeSet open_loop();     // {ααα,ααβ,ααγ,ααδ}
}  // namespace shapes

// ---------------------------------------------------------------------------
// Partition patterns for a_2 = a_3 >= 4, n >= 9

/// Disjoint matchings (union is a matching) and one remaining color.
struct MatchingsPlusRemainder {
  ColorSet matching_colors;
  Color remainder_color = 0;
};

/// Two cliques sharing one color, cross matchings, one remaining cross color.
struct TwoCliquesCrossMatchings {
  std::vector<Point> part_y;
  std::vector<Point> part_z;
  Color clique_color = 0;
  ColorSet matching_colors;
  Color remainder_color = 0;
};

/// One edge {y,z} alone in its color δ; γ on {y,u}, β on {z,u}, α elsewhere.
struct EdgeApex {
  PointPair edge;
  Color delta = 0, gamma = 0, beta = 0, alpha = 0;
};

using PatternMatch = std::variant<MatchingsPlusRemainder, TwoCliquesCrossMatchings, EdgeApex>;

/// Every instantiation of the three patterns the space realizes.
std::vector<PatternMatch> classify_theorem1(const ColoredSpace& space);

/// Re-checks a match against the space pair by pair.
bool validate_pattern(const ColoredSpace& space, const PatternMatch& match);

const char* pattern_name(const PatternMatch& match);
nlohmann::json to_json(const PatternMatch& match);

}  // namespace cspace
