#include <doctest.h>

#include "cspace/core.hpp"
#include "cspace/examples.hpp"

using namespace cspace;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::SyntaxError;
}

}  // namespace

TEST_CASE("create validates every pair") {
  using A = ColoredSpace::Assignment;
  std::vector<A> ok = {{{0, 1}, 0}, {{0, 2}, 1}, {{1, 2}, 0}};
  const auto s = ColoredSpace::create(3, 2, ok);
  CHECK(s.size() == 3);
  CHECK(s.color_count() == 2);
  CHECK(s.color_of(2, 0) == 1);
  CHECK(s.color_of(1, 0) == 0);

  std::vector<A> missing = {{{0, 1}, 0}, {{0, 2}, 1}};
  CHECK(kind_of([&] { ColoredSpace::create(3, 2, missing); }) == ErrorKind::MissingPair);
  std::vector<A> dup = {{{0, 1}, 0}, {{1, 0}, 1}, {{0, 2}, 1}, {{1, 2}, 0}};
  CHECK(kind_of([&] { ColoredSpace::create(3, 2, dup); }) == ErrorKind::DuplicatePair);
  std::vector<A> range = {{{0, 1}, 0}, {{0, 2}, 2}, {{1, 2}, 0}};
  CHECK(kind_of([&] { ColoredSpace::create(3, 2, range); }) == ErrorKind::ColorOutOfRange);
  std::vector<A> unused = {{{0, 1}, 0}, {{0, 2}, 0}, {{1, 2}, 0}};
  CHECK(kind_of([&] { ColoredSpace::create(3, 2, unused); }) == ErrorKind::UnusedColor);
  std::vector<A> outside = {{{0, 3}, 0}, {{0, 2}, 0}, {{1, 2}, 0}};
  CHECK(kind_of([&] { ColoredSpace::create(3, 1, outside); }) == ErrorKind::PointOutOfRange);
  CHECK(kind_of([&] { s.color_of(1, 1); }) == ErrorKind::SamePoint);
  CHECK(kind_of([&] { s.color_of(0, 3); }) == ErrorKind::PointOutOfRange);
}

TEST_CASE("single point space has no colors") {
  const auto s = ColoredSpace::from_pair_colors(1, 0, {});
  CHECK(s.size() == 1);
  CHECK(s.color_count() == 0);
}

TEST_CASE("class sizes and pair order") {
  const auto oct = examples::octahedron();
  CHECK(oct.class_sizes() == std::vector<int>{12, 3});
  const auto pairs = all_pairs(4);
  REQUIRE(pairs.size() == 6);
  CHECK(pairs.front() == PointPair(0, 1));
  CHECK(pairs[2] == PointPair(0, 3));
  CHECK(pairs.back() == PointPair(2, 3));
  CHECK(PointPair(3, 1) == PointPair(1, 3));
}

TEST_CASE("induced subspace renumbers by first use") {
  const auto hex = examples::hexagon();
  const std::vector<Point> w = {0, 2, 4};
  const auto view = induced_subspace(hex, w);
  CHECK(view.space.size() == 3);
  CHECK(view.space.color_count() == 1);
  CHECK(view.renorm[1] == 0);
  CHECK(view.renorm[0] == -1);
  const std::vector<Point> one = {3};
  CHECK(kind_of([&] { induced_subspace(hex, one); }) == ErrorKind::TooSmall);
  CHECK(points_of(mask_of(w)) == w);
}

TEST_CASE("color graphs and M_k") {
  const auto oct = examples::octahedron();
  const ColorGraph side(oct, ColorSet{0});
  CHECK(side.edge_count() == 12);
  CHECK(side.max_degree() == 4);
  CHECK(degree(oct, 1, 0) == 1);
  CHECK(side.has_edge(0, 1));
  CHECK(!side.has_edge(0, 3));

  const auto m1 = m_stats(oct, 1);
  CHECK(m1.count == 2);
  const auto m2 = m_stats(oct, 2);
  CHECK(m2.count == 1);
  CHECK(m2.colors.contains(0));
  CHECK(kind_of([&] { m_stats(oct, 0); }) == ErrorKind::BadK);
  CHECK(kind_of([&] { m_stats(oct, 7); }) == ErrorKind::BadK);

  CHECK(is_matching(oct, ColorSet{1}));
  CHECK(!is_matching(oct, ColorSet{0}));
  CHECK(kind_of([&] { is_matching(oct, ColorSet{}); }) == ErrorKind::EmptyColorSet);
}

TEST_CASE("rainbow has every class a matching") {
  const auto r = examples::rainbow(5);
  CHECK(r.color_count() == 10);
  CHECK(m_stats(r, 2).count == 0);
  CHECK(is_matching(r, ColorSet{0}));
}
