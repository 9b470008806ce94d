#include <doctest.h>

#include "cspace/enumerate.hpp"
#include "cspace/examples.hpp"
#include "cspace/oracle.hpp"
#include "cspace/structure.hpp"

using namespace cspace;
using namespace cspace::examples;

TEST_CASE("closed sets") {
  const auto oct = octahedron();
  // Antipodal pairs form a matching: closed. Sides alone are not.
  CHECK(is_closed(oct, ColorSet{1}));
  CHECK(!is_closed(oct, ColorSet{0}));
  CHECK(is_closed(oct, ColorSet{0, 1}));
  CHECK(is_closed_via_cliques(oct, ColorSet{1}));
  CHECK(!is_closed_via_cliques(oct, ColorSet{0}));
  CHECK_THROWS_AS(is_closed(oct, ColorSet{}), Error);

  const auto comps = connected_components(oct, ColorSet{1});
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<Point>{0, 3});

  // Two cliques joined by cross colors: the clique color is closed.
  const auto tc = family_two_cliques(4, 4, {cross_matching(4, 4, 0)});
  CHECK(is_closed(tc, ColorSet{0}));
  CHECK(connected_components(tc, ColorSet{0}).size() == 2);
}

TEST_CASE("three closedness implementations agree") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    const int c = 1 + static_cast<int>(seed % std::min(5, pair_count(n)));
    const auto s = random_space(n, c, seed);
    for (unsigned mask = 1; mask < (1u << c); ++mask) {
      ColorSet g;
      for (int x = 0; x < c; ++x)
        if ((mask >> x) & 1) g.insert(static_cast<Color>(x));
      const bool a = is_closed(s, g);
      CHECK(a == is_closed_via_cliques(s, g));
      CHECK(a == oracle::union_is_equivalence(s, g));
    }
  }
}

TEST_CASE("degree bound") {
  // rainbow(4), k=1: no color has degree 2; a2 = 6 even, k odd: strict 4 < 7.
  const auto r = check_lemma_m0(rainbow(4), 1);
  CHECK(r.applicable);
  CHECK(r.holds);
  // octahedron has a degree-4 color; k=1 is not applicable.
  CHECK(!check_lemma_m0(octahedron(), 1).applicable);
  CHECK(check_lemma_m0(octahedron(), 4).applicable);
  CHECK_THROWS_AS(check_lemma_m0(octahedron(), 6), Error);
  CHECK_THROWS_AS(check_lemma_m0(octahedron(), 0), Error);
  // Perfect matching of K_2 with one color: n = 2 = 1 + 1, not strict (a2 odd).
  CHECK(check_lemma_m0(monochromatic(2), 1).holds);
}

TEST_CASE("lemmas hold on the named spaces") {
  for (const auto& s : {octahedron(), hexagon(), rainbow(5), monochromatic(6), family_edge_apex(9),
                        halves_with_inner_matchings(), quad_with_pendant_edge(), triangles_with_marked_edge(),
                        triangles_with_cross_matchings()}) {
    for (const auto& r : check_all_lemmas(s)) CHECK_MESSAGE(!r.violated(), r.lemma_id << " " << r.witness);
    CHECK(check_a3_bound(s));
  }
}

TEST_CASE("m2 collapse") {
  // hexagon: a2 = a3 = 3 but the long diagonals form a matching, so m2 = 2.
  CHECK(!check_lemma_m2(hexagon()).applicable);
  const auto r = check_lemma_m2(monochromatic(4));
  CHECK(r.applicable);
  CHECK(r.holds);
}

TEST_CASE("shapes are compared up to renaming") {
  CHECK(same_shape(shapes::m3_case1(), shape_from_roles({"ddc", "dda", "ddb", "abc"})));
  CHECK(!same_shape(shapes::m3_case1(), shapes::m3_case2()));
  CHECK(same_shape(a3_set(halves_with_inner_matchings()), shapes::m3_case1()));
  CHECK(same_shape(a3_set(triangles_with_cross_matchings()), shapes::closed_loop1()));
  CHECK(same_shape(a3_set(quad_with_pendant_edge()), shapes::m3_case2()));
  CHECK(same_shape(a3_set(triangles_with_marked_edge()), shapes::m3_case3()));
  CHECK(same_shape(a3_set(family_edge_apex(9)), shape_from_roles({"aaa", "abc", "aab", "aac"})) == false);
}

TEST_CASE("classification of the three families") {
  auto names_of = [](const ColoredSpace& s) {
    std::vector<std::string> out;
    for (const auto& m : classify_theorem1(s)) {
      out.push_back(pattern_name(m));
      CHECK(validate_pattern(s, m));
    }
    return out;
  };
  auto has = [](const std::vector<std::string>& v, const char* n) {
    return std::find(v.begin(), v.end(), n) != v.end();
  };
  CHECK(has(names_of(family_edge_apex(9)), "edge-apex"));
  CHECK(has(names_of(family_matchings(9, {{{0, 1}}, {{2, 3}}, {{4, 5}}})), "matchings-plus-remainder"));
  CHECK(has(names_of(family_two_cliques(5, 5, {{{0, 5}, {1, 6}}, {{2, 7}}})),
            "two-cliques-cross-matchings"));
  // Distance-2 edges form two triangles and the long diagonals a matching between them.
  CHECK(names_of(hexagon()) == std::vector<std::string>{"two-cliques-cross-matchings"});
  CHECK(names_of(rainbow(5)).empty());

  const auto apex = classify_theorem1(family_edge_apex(9));
  const auto& e = std::get<EdgeApex>(apex.front());
  CHECK(e.edge == PointPair(0, 1));
  CHECK(to_json(apex.front())["variant"] == "edge-apex");

  // A broken witness is rejected.
  EdgeApex bad = e;
  bad.alpha = bad.beta;
  CHECK(!validate_pattern(family_edge_apex(9), PatternMatch{bad}));
}
