#include <doctest.h>

#include <bit>
#include <map>

#include "cspace/examples.hpp"
#include "cspace/structure.hpp"

using namespace cspace;
using namespace cspace::examples;

namespace {

// Qualifying subsets whose A_3 differs from the claimed set.
std::vector<PointMask> exceptions(const SubsetClaim& claim) {
  std::vector<PointMask> out;
  for (PointMask w = 0; w < (1u << claim.space.size()); ++w)
    if (claim.qualifies(w) && !(a3_set_of(claim.space, w) == claim.expected)) out.push_back(w);
  return out;
}

int qualifying(const SubsetClaim& claim) {
  int q = 0;
  for (PointMask w = 0; w < (1u << claim.space.size()); ++w) q += claim.qualifies(w);
  return q;
}

}  // namespace

TEST_CASE("named constructions") {
  CHECK(octahedron().color_count() == 2);
  CHECK(is_matching(octahedron(), ColorSet{1}));
  CHECK(hexagon().class_sizes() == std::vector<int>{6, 6, 3});
  CHECK(rainbow(6).color_count() == 15);
  CHECK(monochromatic(7).color_count() == 1);
  CHECK(halves_with_inner_matchings().size() == 8);
  CHECK(quad_with_pendant_edge().size() == 6);
  CHECK(triangles_with_marked_edge().class_sizes() == std::vector<int>{8, 4, 2, 1});
  CHECK(triangles_with_cross_matchings().class_sizes() == std::vector<int>{6, 3, 3, 3});
  for (const auto& name : names()) CHECK_NOTHROW(by_name(name, 9));
  CHECK_THROWS_AS(by_name("dodecahedron", 9), Error);
}

TEST_CASE("subset claims") {
  std::map<std::string, SubsetClaim> claims;
  for (auto& c : subset_claims()) claims.emplace(c.name, c);
  REQUIRE(claims.size() == 4);

  // Frozen from an exhaustive run: the claimed set holds on every qualifying W
  // except the two halves (4 points, A_3 = {βγδ}).
  const auto& halves = claims.at("halves-inner-matchings");
  CHECK(qualifying(halves) == 97);
  CHECK(exceptions(halves) == std::vector<PointMask>{0x0F, 0xF0});
  CHECK(a3_set_of(halves.space, 0x0F).to_string() == "[[1,2,3]]");

  const auto& pendant = claims.at("quad-pendant-edge");
  CHECK(qualifying(pendant) == 5);
  CHECK(exceptions(pendant).empty());

  // Y ∪ {z0} and {y0} ∪ Z have no ααβ triangle.
  const auto& marked = claims.at("triangles-marked-edge");
  CHECK(qualifying(marked) == 5);
  CHECK(exceptions(marked) == std::vector<PointMask>{0x0F, 0x39});
  CHECK(!a3_set_of(marked.space, 0x0F).contains(0, 0, 1));

  const auto& cross = claims.at("triangles-cross-matchings");
  CHECK(qualifying(cross) == 10);
  CHECK(exceptions(cross).empty());
}

TEST_CASE("families") {
  const auto oct_like = family_matchings(6, {{{0, 3}, {1, 4}, {2, 5}}});
  CHECK(isomorphic(oct_like, octahedron()));
  CHECK_THROWS_AS(family_matchings(6, {{{0, 1}, {0, 2}}}), Error);
  try {
    family_matchings(6, {{{0, 1}}, {{0, 1}}});
    FAIL("overlap accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overlap);
  }
  try {
    family_matchings(6, {{{0, 1}}, {{1, 2}}});
    FAIL("union accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAMatching);
  }

  for (int n = 9; n <= 12; ++n) {
    const auto s = family_edge_apex(n);
    CHECK(s.color_count() == 4);
    CHECK(a3_count(s) == 4);
  }
  CHECK_THROWS_AS(family_edge_apex(3), Error);

  const auto tc = family_two_cliques(5, 5, {{{0, 5}, {1, 6}}, {{2, 7}}});
  CHECK(tc.color_count() == 4);
  CHECK(a3_count(tc) == 4);
  bool found = false;
  for (const auto& m : classify_theorem1(tc)) found |= std::holds_alternative<TwoCliquesCrossMatchings>(m);
  CHECK(found);
  CHECK_THROWS_AS(family_two_cliques(5, 5, {cross_matching(5, 5, 0), cross_matching(5, 5, 1)}), Error);
  CHECK(cross_matching(3, 4, 1) == std::vector<PointPair>{{0, 4}, {1, 5}, {2, 6}});
}
