#pragma once

#include <span>

#include "cspace/core.hpp"

// Brute-force reference decisions, deliberately independent of the canonical
// key code. Exponential; meant for n <= 8.
namespace cspace::oracle {

/// Tries every point bijection and checks that it induces a color bijection.
bool isomorphic(const ColoredSpace& a, const ColoredSpace& b);

/// Isometry of two subsets by trying all |Y|! bijections without pruning.
bool isometric(const ColoredSpace& space, std::span<const Point> y, std::span<const Point> z);

/// a_k by pairwise isometry tests against one representative per class.
int a_k(const ColoredSpace& space, int k);

/// Union graph of a color set is a disjoint union of cliques, via transitivity
/// of the reflexive closure (x~y, y~z => x~z).
bool union_is_equivalence(const ColoredSpace& space, const ColorSet& colors);

}  // namespace cspace::oracle
