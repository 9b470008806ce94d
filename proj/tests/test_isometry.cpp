#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cspace/enumerate.hpp"
#include "cspace/examples.hpp"
#include "cspace/isometry.hpp"
#include "cspace/oracle.hpp"

using namespace cspace;

namespace {

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("sequences of the octahedron and the hexagon") {
  CHECK(isometric_sequence(examples::octahedron()).to_string() == "1,2,2,2,1,1");
  CHECK(isometric_sequence(examples::hexagon()).to_string() == "1,3,3,3,1,1");
  CHECK(isometric_sequence(examples::hexagon()).unimodal());
}

TEST_CASE("extremes") {
  for (int n = 2; n <= 8; ++n) {
    const auto mono = isometric_sequence(examples::monochromatic(n));
    CHECK(mono.values == std::vector<int>(n, 1));
    const auto rb = isometric_sequence(examples::rainbow(n));
    CHECK(rb[1] == 1);
    CHECK(rb[n] == 1);
    for (int k = 2; k < n; ++k) CHECK(rb[k] == binom(n, k));
  }
}

TEST_CASE("triangle types") {
  const auto t = TriangleType::of(2, 0, 1);
  CHECK(t.colors == std::array<Color, 3>{0, 1, 2});
  CHECK(TriangleType::from_code(t.code()) == t);
  const auto oct = a3_set(examples::octahedron());
  CHECK(oct.size() == 2);
  CHECK(oct.contains(0, 0, 0));
  CHECK(oct.contains(0, 1, 0));
  CHECK(oct.to_string() == "[[0,0,0],[0,0,1]]");
  CHECK(a3_count(examples::hexagon()) == 3);
  CHECK(a3_count(examples::rainbow(4)) == 4);
  CHECK_THROWS_AS(a3_set(examples::monochromatic(2)), Error);
}

TEST_CASE("isometry keys agree with brute force on a hexagon") {
  const auto hex = examples::hexagon();
  for (PointMask a = 0; a < 64; ++a)
    for (PointMask b = a; b < 64; ++b) {
      if (std::popcount(a) != std::popcount(b) || std::popcount(a) < 2) continue;
      const auto pa = points_of(a), pb = points_of(b);
      const bool key = isometry_key(hex, a) == isometry_key(hex, b);
      CHECK(key == oracle::isometric(hex, pa, pb));
      CHECK(key == isometric(hex, pa, pb));
    }
  const std::vector<Point> y = {0, 1}, z = {0, 1, 2};
  CHECK_THROWS_AS(isometric(hex, y, z), Error);
}

TEST_CASE("colors are not renamed by isometry keys") {
  // {0,1} and {0,3} in the octahedron carry different colors.
  const auto oct = examples::octahedron();
  CHECK(isometry_key(oct, PointMask{0b11}) != isometry_key(oct, PointMask{0b1001}));
  // but isomorphism keys of the induced 2-point spaces agree.
  const std::vector<Point> a = {0, 1}, b = {0, 3};
  CHECK(isomorphic(induced_subspace(oct, a).space, induced_subspace(oct, b).space));
}

TEST_CASE("a_k matches the oracle and the parallel path") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 4 + static_cast<int>(seed % 4);
    const auto s = random_space(n, 1 + static_cast<int>(seed % 4), seed);
    for (int k = 1; k <= n; ++k) {
      const auto serial = a_k(s, k, Exec{1});
      const auto par = a_k(s, k, Exec{4});
      CHECK(serial.count == oracle::a_k(s, k));
      CHECK(serial.count == par.count);
      CHECK(serial.representatives == par.representatives);
    }
  }
  CHECK_THROWS_AS(a_k(examples::hexagon(), 0), Error);
  CHECK_THROWS_AS(a_k(examples::hexagon(), 7), Error);
}

TEST_CASE("isomorphism keys survive relabeling") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    const int c = 1 + static_cast<int>(seed % std::min(6, pair_count(n)));
    const auto s = random_space(n, c, seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::rotate(perm.begin(), perm.begin() + static_cast<long>(seed % n), perm.end());
    std::swap(perm[0], perm[n - 1]);
    std::vector<Color> m(n * n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y) m[perm[x] * n + perm[y]] = static_cast<Color>((s.at(x, y) + seed) % c);
    const auto t = ColoredSpace::from_matrix_renumbered(n, m);
    CHECK(isomorphism_key(s) == isomorphism_key(t));
    CHECK(canonical_form(s) == canonical_form(t));
    CHECK(decode_key(n, isomorphism_key(s)) == canonical_form(s));
    if (n <= 6) CHECK(oracle::isomorphic(s, t));
  }
  CHECK(!isomorphic(examples::rainbow(5), examples::monochromatic(5)));
}

TEST_CASE("keys stay cheap on symmetric spaces") {
  // Monochromatic and rainbow inputs would make a plain permutation search blow up.
  CHECK(isomorphism_key(examples::monochromatic(16)).bytes.size() == 120);
  CHECK(isomorphism_key(examples::rainbow(16)).bytes.size() == 120);
  CHECK(a_k(examples::monochromatic(14), 7).count == 1);
}
