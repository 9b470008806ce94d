#include "cspace/examples.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace cspace::examples {

namespace {

constexpr Color kAlpha = 0, kBeta = 1, kGamma = 2, kDelta = 3;

template <class ColorFn>
ColoredSpace build(int n, int colors, ColorFn color) {
  std::vector<ColoredSpace::Assignment> as;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) as.emplace_back(PointPair(i, j), static_cast<Color>(color(i, j)));
  return ColoredSpace::create(n, colors, as);
}

// Perfect matchings of K_4 on {b, b+1, b+2, b+3}: 0 -> {01,23}, 1 -> {02,13}, 2 -> {03,12}.
int k4_matching(int i, int j) {
  const int a = i % 4, b = j % 4;
  if ((a ^ b) == 1) return 0;
  if ((a ^ b) == 2) return 1;
  return 2;
}

void require_size(int n, int lo, const char* what) {
  if (n < lo || n > kMaxPoints)
    throw Error(ErrorKind::BadArity, std::string(what) + " needs " + std::to_string(lo) + ".." +
                                         std::to_string(kMaxPoints) + " points, got " + std::to_string(n));
}

}  // namespace

ColoredSpace octahedron() {
  return build(6, 2, [](int i, int j) { return j - i == 3 ? 1 : 0; });
}

ColoredSpace hexagon() {
  return build(6, 3, [](int i, int j) {
    const int d = std::min(j - i, 6 - (j - i));
    return d - 1;
  });
}

ColoredSpace rainbow(int n) {
  require_size(n, 2, "rainbow");
  int next = 0;
  return build(n, pair_count(n), [&next](int, int) { return next++; });
}

ColoredSpace monochromatic(int n) {
  require_size(n, 2, "monochromatic");
  return build(n, 1, [](int, int) { return 0; });
}

ColoredSpace halves_with_inner_matchings() {
  return build(8, 4, [](int i, int j) -> int {
    if ((i < 4) != (j < 4)) return kAlpha;
    return kBeta + k4_matching(i, j);
  });
}

ColoredSpace quad_with_pendant_edge() {
  return build(6, 4, [](int i, int j) -> int {
    if (i >= 4) return kDelta;
    if (j >= 4) return kAlpha;
    return (i ^ j) == 1 ? kGamma : kBeta;
  });
}

ColoredSpace triangles_with_marked_edge() {
  return build(6, 4, [](int i, int j) -> int {
    const bool cross = (i < 3) != (j < 3);
    if (cross) return (i == 0 && j == 3) ? kDelta : kAlpha;
    if (i == 0 || i == 3) return kBeta;
    return kGamma;
  });
}

ColoredSpace triangles_with_cross_matchings() {
  return build(6, 4, [](int i, int j) -> int {
    if ((i < 3) == (j < 3)) return kAlpha;
    const int shift = ((j - 3) - i + 3) % 3;
    return kBeta + shift;
  });
}

std::vector<SubsetClaim> subset_claims() {
  const PointMask y4 = 0x0F;
  const PointMask y3 = 0x07;
  const PointMask z2 = 0x30;
  auto tset = [](std::initializer_list<std::array<Color, 3>> ts) {
    std::vector<TriangleType> v;
    for (const auto& t : ts) v.push_back(TriangleType::of(t[0], t[1], t[2]));
    return TriangleTypeSet(std::move(v));
  };
  std::vector<SubsetClaim> claims;
  claims.push_back({"halves-inner-matchings", halves_with_inner_matchings(),
                    [=](PointMask w) { return std::popcount(w) >= 4 && std::popcount(w & y4) != 2; },
                    tset({{kAlpha, kAlpha, kBeta}, {kAlpha, kAlpha, kGamma}, {kAlpha, kAlpha, kDelta},
                          {kBeta, kGamma, kDelta}})});
  claims.push_back({"quad-pendant-edge", quad_with_pendant_edge(),
                    [=](PointMask w) { return std::popcount(w) >= 5 && (w & z2) == z2; },
                    tset({{kAlpha, kAlpha, kBeta}, {kAlpha, kAlpha, kGamma}, {kBeta, kBeta, kGamma},
                          {kAlpha, kAlpha, kDelta}})});
  claims.push_back({"triangles-marked-edge", triangles_with_marked_edge(),
                    [=](PointMask w) {
                      const PointMask marked = (1u << 0) | (1u << 3);
                      return std::popcount(w) >= 4 && (w & marked) == marked && std::popcount(w & y3) != 2;
                    },
                    tset({{kAlpha, kAlpha, kBeta}, {kAlpha, kAlpha, kGamma}, {kBeta, kBeta, kGamma},
                          {kAlpha, kBeta, kDelta}})});
  claims.push_back({"triangles-cross-matchings", triangles_with_cross_matchings(),
                    [=](PointMask w) { return std::popcount(w) >= 4 && std::popcount(w & y3) != 2; },
                    tset({{kAlpha, kAlpha, kAlpha}, {kAlpha, kBeta, kGamma}, {kAlpha, kGamma, kDelta},
                          {kAlpha, kDelta, kBeta}})});
  return claims;
}

namespace {

void check_union_matching(int n, const std::vector<std::vector<PointPair>>& matchings) {
  std::set<PointPair> seen;
  std::vector<int> deg(n, 0);
  for (std::size_t m = 0; m < matchings.size(); ++m) {
    std::vector<int> own(n, 0);
    if (matchings[m].empty())
      throw Error(ErrorKind::NotAMatching, "matching " + std::to_string(m) + " is empty");
    for (const auto& p : matchings[m]) {
      if (p.first == p.second) throw Error(ErrorKind::SamePoint, "matching pair repeats a point");
      if (p.first < 0 || p.second >= n) throw Error(ErrorKind::PointOutOfRange, "matching pair outside space");
      if (!seen.insert(p).second)
        throw Error(ErrorKind::Overlap, "pair {" + std::to_string(p.first) + "," + std::to_string(p.second) +
                                            "} listed twice");
      if (++own[p.first] > 1 || ++own[p.second] > 1)
        throw Error(ErrorKind::NotAMatching, "matching " + std::to_string(m) + " has a vertex of degree 2");
      if (++deg[p.first] > 1 || ++deg[p.second] > 1)
        throw Error(ErrorKind::NotAMatching, "union of the matchings has a vertex of degree 2");
    }
  }
}

}  // namespace

ColoredSpace family_matchings(int n, const std::vector<std::vector<PointPair>>& matchings) {
  require_size(n, 2, "family_matchings");
  check_union_matching(n, matchings);
  std::vector<int> color(n * n, 0);
  for (std::size_t m = 0; m < matchings.size(); ++m)
    for (const auto& p : matchings[m]) color[p.first * n + p.second] = static_cast<int>(m) + 1;
  return build(n, static_cast<int>(matchings.size()) + 1, [&](int i, int j) { return color[i * n + j]; });
}

ColoredSpace family_two_cliques(int p, int q, const std::vector<std::vector<PointPair>>& matchings) {
  if (p < 2 || q < 2) throw Error(ErrorKind::BadArity, "both cliques need at least 2 points");
  const int n = p + q;
  require_size(n, 4, "family_two_cliques");
  check_union_matching(n, matchings);
  std::vector<int> color(n * n, -1);
  for (std::size_t m = 0; m < matchings.size(); ++m)
    for (const auto& e : matchings[m]) {
      if ((e.first < p) == (e.second < p))
        throw Error(ErrorKind::Overlap, "matching pair {" + std::to_string(e.first) + "," +
                                            std::to_string(e.second) + "} lies inside a clique");
      color[e.first * n + e.second] = static_cast<int>(m) + 2;
    }
  return build(n, static_cast<int>(matchings.size()) + 2, [&](int i, int j) {
    if ((i < p) == (j < p)) return 0;
    return color[i * n + j] < 0 ? 1 : color[i * n + j];
  });
}

ColoredSpace family_edge_apex(int n) {
  require_size(n, 4, "family_edge_apex");
  return build(n, 4, [](int i, int j) -> int {
    if (i == 0 && j == 1) return kDelta;
    if (i == 0) return kGamma;
    if (i == 1) return kBeta;
    return kAlpha;
  });
}

std::vector<PointPair> cross_matching(int p, int q, int shift) {
  std::vector<PointPair> out;
  for (int i = 0; i < std::min(p, q); ++i) out.emplace_back(i, p + (i + shift) % q);
  return out;
}

std::vector<std::string> names() {
  return {"octahedron", "hexagon", "rainbow", "monochromatic", "edge-apex", "halves-inner-matchings",
          "quad-pendant-edge", "triangles-marked-edge", "triangles-cross-matchings", "two-cliques", "matchings"};
}

ColoredSpace by_name(const std::string& name, int n) {
  if (name == "octahedron") return octahedron();
  if (name == "hexagon") return hexagon();
  if (name == "rainbow") return rainbow(n);
  if (name == "monochromatic") return monochromatic(n);
  if (name == "edge-apex") return family_edge_apex(n);
  if (name == "halves-inner-matchings") return halves_with_inner_matchings();
  if (name == "quad-pendant-edge") return quad_with_pendant_edge();
  if (name == "triangles-marked-edge") return triangles_with_marked_edge();
  if (name == "triangles-cross-matchings") return triangles_with_cross_matchings();
  if (name == "two-cliques") {
    // Two cliques of sizes floor(n/2), ceil(n/2); the shift-0 cross matching
    // split into two colors.
    const int p = n / 2, q = n - p;
    auto full = cross_matching(p, q, 0);
    std::vector<PointPair> first(full.begin(), full.begin() + (full.size() + 1) / 2);
    std::vector<PointPair> second(full.begin() + (full.size() + 1) / 2, full.end());
    std::vector<std::vector<PointPair>> ms{first};
    if (!second.empty()) ms.push_back(second);
    return family_two_cliques(p, q, ms);
  }
  if (name == "matchings") {
    // Pairs {2i, 2i+1} spread over up to three matching colors.
    require_size(n, 3, "matchings");
    std::vector<std::vector<PointPair>> ms(std::min(3, n / 2));
    for (int i = 0; 2 * i + 1 < n; ++i) ms[i % ms.size()].emplace_back(2 * i, 2 * i + 1);
    return family_matchings(n, ms);
  }
  throw Error(ErrorKind::BadArity, "unknown construction '" + name + "'");
}

}  // namespace cspace::examples
