#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cspace/core.hpp"
#include "cspace/isometry.hpp"

namespace cspace::examples {

// Named constructions. Where a construction has role names, colors are numbered
// alpha=0, beta=1, gamma=2, delta=3.

/// 6 points; 12 side pairs colored 0, 3 antipodal pairs {i,i+3} colored 1.
ColoredSpace octahedron();

/// 6 points on a cycle; sides 0, short diagonals 1, long diagonals 2.
ColoredSpace hexagon();

/// Every pair its own color, numbered in pair order.
ColoredSpace rainbow(int n);

ColoredSpace monochromatic(int n);

/// Two 4-point halves Y={0..3}, Z={4..7}; all Y-Z pairs alpha; inside each half
/// the three perfect matchings of K_4 are beta {01,23}, gamma {02,13},
/// delta {03,12} (and the same pattern on Z).
ColoredSpace halves_with_inner_matchings();

/// Y={0..3}, Z={4,5}; Y-Z pairs alpha; gamma = matching {01,23} on Y; the other
/// four pairs of Y beta; the single pair {4,5} delta.
ColoredSpace quad_with_pendant_edge();

/// Y={0,1,2}, Z={3,4,5} with marked cross pair {0,3} colored delta; other
/// cross pairs alpha; {1,2} and {4,5} gamma; {0,1},{0,2},{3,4},{3,5} beta.
ColoredSpace triangles_with_marked_edge();

/// Y={0,1,2}, Z={3,4,5}; pairs inside Y or Z alpha; cross pairs split into
/// the cyclic perfect matchings y_i z_{i+s} for s = 0 (beta), 1 (gamma), 2 (delta).
ColoredSpace triangles_with_cross_matchings();

/// A construction together with the subsets W on which it is claimed to have a
/// fixed A_3(W).
struct SubsetClaim {
  std::string name;
  ColoredSpace space;
  std::function<bool(PointMask)> qualifies;
  TriangleTypeSet expected;
};

/// The four constructions above with their stated subset claims.
std::vector<SubsetClaim> subset_claims();

/// Pattern with disjoint matchings: pair sets in `matchings` get colors 1, 2, ...;
/// every other pair gets color 0. Throws NotAMatching when a set or the union
/// is not a matching, Overlap when a pair is listed twice.
ColoredSpace family_matchings(int n, const std::vector<std::vector<PointPair>>& matchings);

/// Two cliques Y={0..p-1}, Z={p..p+q-1} colored 0; listed cross matchings get
/// colors 2, 3, ...; remaining cross pairs color 1. Requires p, q >= 2.
ColoredSpace family_two_cliques(int p, int q, const std::vector<std::vector<PointPair>>& matchings);

/// Edge {0,1} colored delta, pairs {0,u} gamma, {1,u} beta, pairs among
/// u >= 2 alpha. Requires n >= 4.
ColoredSpace family_edge_apex(int n);

/// Cyclic cross matching y_i -> p + ((i + shift) mod q) between the two
/// cliques of family_two_cliques, restricted to i < min(p, q).
std::vector<PointPair> cross_matching(int p, int q, int shift);

/// Names accepted by by_name(): octahedron, hexagon, rainbow, monochromatic,
/// edge-apex, halves-inner-matchings, quad-pendant-edge,
/// triangles-marked-edge, triangles-cross-matchings, two-cliques, matchings.
std::vector<std::string> names();

/// Builds a named construction; `n` is used by the sized families.
ColoredSpace by_name(const std::string& name, int n);

}  // namespace cspace::examples
