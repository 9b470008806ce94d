#include <doctest.h>

#include "cspace/enumerate.hpp"
#include "cspace/examples.hpp"
#include "cspace/fusion.hpp"

using namespace cspace;
using namespace cspace::examples;

TEST_CASE("fusion maps") {
  const std::vector<int> image = {5, 2, 5, 7};
  const auto f = FusionMap::from_image(image);
  CHECK(f.image() == std::vector<Color>{0, 1, 0, 2});
  CHECK(f.target_colors() == 3);
  CHECK(f.to_string() == "[0,1,0,2]");
  CHECK(FusionMap::parse("[0, 1,0,2]") == f);
  CHECK_THROWS_AS(FusionMap::parse("[0,,1]"), Error);
  CHECK_THROWS_AS(FusionMap::parse("0,1"), Error);
  const std::vector<std::pair<Color, Color>> merges = {{3, 1}, {1, 2}};
  CHECK(FusionMap::merging(4, merges).image() == std::vector<Color>{0, 1, 1, 1});
  CHECK(FusionMap::identity(3).target_colors() == 3);
}

TEST_CASE("apply and recognize fusions") {
  const auto hex = hexagon();
  const auto fused = apply_fusion(hex, FusionMap::parse("[0,0,1]"));
  CHECK(fused.color_count() == 2);
  CHECK(is_fusion_of(fused, hex));
  CHECK(!is_fusion_of(hex, fused));
  CHECK(is_fusion_of(monochromatic(6), hex));
  CHECK_THROWS_AS(apply_fusion(hex, FusionMap::identity(2)), Error);
  CHECK_THROWS_AS(is_fusion_of(monochromatic(5), hex), Error);
}

TEST_CASE("fusion never increases a_3") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto s = random_space(6, 2 + static_cast<int>(seed % 8), seed);
    const int c = s.color_count();
    const std::vector<std::pair<Color, Color>> m = {{static_cast<Color>(seed % c), static_cast<Color>((seed + 1) % c)}};
    const auto f = apply_fusion(s, FusionMap::merging(c, m));
    CHECK(a3_count(f) <= a3_count(s));
  }
}

TEST_CASE("reducing fusion on the hexagon") {
  const auto res = find_reducing_fusion(hexagon());
  REQUIRE(std::holds_alternative<FoundFusion>(res));
  const auto& f = std::get<FoundFusion>(res);
  CHECK(f.a2_before - f.a2_after == 1);
  CHECK(f.a3_before - f.a3_after >= 1);
  CHECK(f.a2_before == 3);
  CHECK_THROWS_AS(find_reducing_fusion(rainbow(5)), Error);    // m_2 = 0
  CHECK_THROWS_AS(find_reducing_fusion(family_edge_apex(4)), Error);
}

TEST_CASE("matching fusion") {
  // m_2 = 0 with a2 < C(n,2) needs a repeated matching color.
  const auto s = family_matchings(6, {{{0, 1}, {2, 3}}, {{4, 5}}});
  CHECK_THROWS_AS(find_matching_fusion(s), Error);  // remainder color has degree >= 2
  const auto r = rainbow(6);
  CHECK_THROWS_AS(find_matching_fusion(r), Error);  // a2 = C(n,2)

  int tried = 0;
  for (std::uint64_t seed = 1; seed <= 3000 && tried < 20; ++seed) {
    const auto t = random_space(6, 12 + static_cast<int>(seed % 3), seed);
    if (m_stats(t, 2).count != 0) continue;
    ++tried;
    const auto res = find_matching_fusion(t);
    REQUIRE(std::holds_alternative<FoundFusion>(res));
    const auto& f = std::get<FoundFusion>(res);
    const int d2 = f.a2_before - f.a2_after, d3 = f.a3_before - f.a3_after;
    CHECK(d2 >= 1);
    CHECK(d2 <= 2);
    CHECK(d2 <= d3);
  }
  CHECK(tried > 0);
}

TEST_CASE("fusion chains end with a_2 <= a_3") {
  for (const auto& s : {hexagon(), octahedron(), rainbow(6), family_edge_apex(9), halves_with_inner_matchings()}) {
    const auto chain = fusion_chain(s);
    CHECK(!chain.falsified);
    CHECK(!chain.counterexample);
    const auto& last = chain.steps.empty() ? s : chain.steps.back().space;
    CHECK(last.color_count() <= 3);
    for (const auto& st : chain.steps) CHECK(st.a2_after < st.a2_before);
  }
  // Already at a_2 = 3: the chain stops before any merge.
  CHECK(fusion_chain(hexagon()).steps.empty());
  const auto rb = fusion_chain(rainbow(5));
  REQUIRE(!rb.steps.empty());
  CHECK(rb.steps.front().rule == "rainbow");
  CHECK(to_json(rb)["steps"].size() == rb.steps.size());
}
