#include "cspace/structure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace cspace {

namespace {

std::string color_name(Color c) { return std::to_string(static_cast<int>(c)); }

std::string type_name(const TriangleType& t) {
  return "(" + color_name(t.colors[0]) + "," + color_name(t.colors[1]) + "," + color_name(t.colors[2]) + ")";
}

void require_colors(const ColorSet& colors) {
  if (colors.empty()) throw Error(ErrorKind::EmptyColorSet, "closed-set tests need a non-empty color set");
}

}  // namespace

bool is_closed(const ColoredSpace& space, const TriangleTypeSet& a3, const ColorSet& colors) {
  require_colors(colors);
  (void)space;
  for (const auto& t : a3.members()) {
    const int inside = colors.contains(t.colors[0]) + colors.contains(t.colors[1]) + colors.contains(t.colors[2]);
    if (inside == 2) return false;
  }
  return true;
}

bool is_closed(const ColoredSpace& space, const ColorSet& colors) {
  require_colors(colors);
  if (space.size() < 3) return true;
  return is_closed(space, a3_set(space), colors);
}

std::vector<std::vector<Point>> connected_components(const ColoredSpace& space, const ColorSet& colors) {
  require_colors(colors);
  const ColorGraph g(space, colors);
  const int n = space.size();
  std::vector<std::vector<Point>> parts;
  PointMask unseen = n == 32 ? ~PointMask{0} : (PointMask{1} << n) - 1;
  while (unseen) {
    const int start = std::countr_zero(unseen);
    PointMask comp = PointMask{1} << start, frontier = comp;
    while (frontier) {
      const int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const PointMask fresh = g.neighbors(x) & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    unseen &= ~comp;
    parts.push_back(points_of(comp));
  }
  return parts;
}

bool is_closed_via_cliques(const ColoredSpace& space, const ColorSet& colors) {
  const ColorGraph g(space, colors);
  for (const auto& part : connected_components(space, colors))
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a + 1; b < part.size(); ++b)
        if (!g.has_edge(part[a], part[b])) return false;
  return true;
}

nlohmann::json to_json(const LemmaReport& report) {
  return {{"lemma", report.lemma_id},
          {"applicable", report.applicable},
          {"holds", report.holds},
          {"witness", report.witness}};
}

LemmaReport check_lemma_m0(const ColoredSpace& space, int k) {
  const int n = space.size();
  if (k < 1 || k >= n) throw Error(ErrorKind::BadK, "degree bound needs 1 <= k < n");
  LemmaReport r{"degree-bound", false, true, ""};
  r.applicable = m_stats(space, k + 1).count == 0;
  if (!r.applicable) return r;
  const int a2 = space.color_count();
  const int bound = 1 + k * a2;
  const bool strict = (k % 2 == 1) && (a2 % 2 == 0);
  r.holds = strict ? n < bound : n <= bound;
  std::ostringstream w;
  w << "k=" << k << " n=" << n << " a2=" << a2 << " bound=" << bound << (strict ? " strict" : "");
  r.witness = w.str();
  return r;
}

LemmaReport check_lemma_m2(const ColoredSpace& space) {
  LemmaReport r{"m2-collapse", false, true, ""};
  if (space.size() < 3) return r;
  const int a2 = space.color_count(), a3 = a3_count(space), m2 = m_stats(space, 2).count;
  r.applicable = a2 == a3 && a3 == m2;
  if (r.applicable) {
    r.holds = a2 <= 2;
    r.witness = "a2=a3=m2=" + std::to_string(a2);
  }
  return r;
}

LemmaReport check_lemma_delta(const ColoredSpace& space) {
  LemmaReport r{"unique-delta", false, true, ""};
  if (space.size() < 3) return r;
  const auto a3 = a3_set(space);
  const auto m2 = m_stats(space, 2).colors;
  const int c = space.color_count();
  for (int d = 0; d < c; ++d) {
    const auto delta = static_cast<Color>(d);
    const TriangleType* unique = nullptr;
    int seen = 0;
    for (const auto& t : a3.members())
      if (t.colors[0] == delta || t.colors[1] == delta || t.colors[2] == delta) {
        unique = &t;
        ++seen;
      }
    if (seen != 1) continue;
    r.applicable = true;
    // Remove one occurrence of δ; the other two entries are β and γ.
    std::array<Color, 3> rest = unique->colors;
    std::vector<Color> bg;
    bool dropped = false;
    for (Color x : rest) {
      if (!dropped && x == delta) {
        dropped = true;
        continue;
      }
      bg.push_back(x);
    }
    const Color beta = bg[0], gamma = bg[1];
    for (int a = 0; a < c; ++a) {
      const auto alpha = static_cast<Color>(a);
      if (alpha == beta || alpha == gamma || alpha == delta) continue;
      const bool direct = a3.contains(alpha, beta, gamma);
      const bool pair = a3.contains(beta, beta, alpha) && a3.contains(gamma, gamma, alpha);
      if (!direct && !pair) {
        r.holds = false;
        r.witness = "delta=" + color_name(delta) + " unique type " + type_name(*unique) + " alpha=" + color_name(alpha);
        return r;
      }
    }
    if (space.size() >= 5 && (!m2.contains(beta) || !m2.contains(gamma))) {
      r.holds = false;
      r.witness = "delta=" + color_name(delta) + " unique type " + type_name(*unique) + " but beta/gamma not in M_2";
      return r;
    }
  }
  return r;
}

LemmaReport check_lemma_closed_triple(const ColoredSpace& space) {
  LemmaReport r{"closed-triple", false, true, ""};
  if (space.color_count() != 4 || space.size() < 3) return r;
  const auto a3 = a3_set(space);
  for (int d = 0; d < 4; ++d) {
    ColorSet triple;
    for (int x = 0; x < 4; ++x)
      if (x != d) triple.insert(static_cast<Color>(x));
    if (!is_closed(space, a3, triple)) continue;
    r.applicable = true;
    const auto delta = static_cast<Color>(d);
    for (Color x : triple.members())
      if (!a3.contains(x, delta, delta)) {
        r.holds = false;
        r.witness = "closed triple without delta=" + color_name(delta) + " misses " +
                    type_name(TriangleType::of(x, delta, delta));
        return r;
      }
  }
  return r;
}

std::vector<std::uint32_t> canonical_shape(const TriangleTypeSet& types) {
  std::vector<Color> present;
  for (const auto& t : types.members())
    for (Color c : t.colors) present.push_back(c);
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());
  std::array<Color, 256> slot{};
  std::vector<int> perm(present.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best, codes;
  do {
    for (std::size_t i = 0; i < present.size(); ++i) slot[present[i]] = static_cast<Color>(perm[i]);
    codes.clear();
    for (const auto& t : types.members())
      codes.push_back(TriangleType::of(slot[t.colors[0]], slot[t.colors[1]], slot[t.colors[2]]).code());
    std::sort(codes.begin(), codes.end());
    if (best.empty() || codes < best) best = codes;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool same_shape(const TriangleTypeSet& a, const TriangleTypeSet& b) {
  return a.size() == b.size() && canonical_shape(a) == canonical_shape(b);
}

TriangleTypeSet shape_from_roles(std::initializer_list<const char*> roles) {
  std::vector<TriangleType> types;
  for (const char* r : roles)
    types.push_back(TriangleType::of(static_cast<Color>(r[0] - 'a'), static_cast<Color>(r[1] - 'a'),
                                     static_cast<Color>(r[2] - 'a')));
  return TriangleTypeSet(std::move(types));
}

namespace shapes {
TriangleTypeSet m3_case1() { return shape_from_roles({"aab", "aac", "aad", "bcd"}); }
TriangleTypeSet m3_case2() { return shape_from_roles({"aab", "aac", "bbc", "aad"}); }
TriangleTypeSet m3_case3() { return shape_from_roles({"aab", "aac", "bbc", "abd"}); }
TriangleTypeSet closed_loop1() { return shape_from_roles({"aaa", "abc", "acd", "abd"}); }
TriangleTypeSet closed_loop2() { return shape_from_roles({"aaa", "abb", "acc", "bcd"}); }
TriangleTypeSet closed_loop3() { return shape_from_roles({"aaa", "abb", "abc", "abd"}); }
TriangleTypeSet open_loop() { return shape_from_roles({"aaa", "aab", "aac", "aad"}); }
}  // namespace shapes

namespace {

bool four_equal_four(const ColoredSpace& space) {
  return space.size() >= 4 && space.color_count() == 4 && a3_count(space) == 4;
}

// Colors α with ααα in A_3 whose singleton {α} is (or is not) closed.
std::vector<Color> monochromatic(const ColoredSpace& space, const TriangleTypeSet& a3, bool closed) {
  std::vector<Color> out;
  for (const auto& t : a3.members())
    if (t.colors[0] == t.colors[2] && is_closed(space, a3, ColorSet{t.colors[0]}) == closed)
      out.push_back(t.colors[0]);
  return out;
}

}  // namespace

LemmaReport check_lemma_m3_shapes(const ColoredSpace& space) {
  LemmaReport r{"m3-shapes", false, true, ""};
  if (!four_equal_four(space)) return r;
  const auto a3 = a3_set(space);
  if (m_stats(space, 3).count == 0) return r;
  if (!monochromatic(space, a3, true).empty() || !monochromatic(space, a3, false).empty()) return r;
  r.applicable = true;
  const int n = space.size();
  if (same_shape(a3, shapes::m3_case1())) r.holds = n <= 8;
  else if (same_shape(a3, shapes::m3_case2()) || same_shape(a3, shapes::m3_case3())) r.holds = n <= 6;
  else r.holds = false;
  r.witness = "n=" + std::to_string(n) + " A3=" + a3.to_string();
  return r;
}

LemmaReport check_lemma_closed_loop(const ColoredSpace& space) {
  LemmaReport r{"closed-loop-shapes", false, true, ""};
  if (!four_equal_four(space)) return r;
  const auto a3 = a3_set(space);
  const auto alphas = monochromatic(space, a3, true);
  if (alphas.empty()) return r;
  r.applicable = true;
  const int n = space.size();
  if (same_shape(a3, shapes::closed_loop1())) r.holds = n <= 6;
  else r.holds = same_shape(a3, shapes::closed_loop2()) || same_shape(a3, shapes::closed_loop3());
  r.witness = "n=" + std::to_string(n) + " alpha=" + color_name(alphas.front()) + " A3=" + a3.to_string();
  return r;
}

LemmaReport check_lemma_open_loop(const ColoredSpace& space) {
  LemmaReport r{"open-loop-shape", false, true, ""};
  if (!four_equal_four(space)) return r;
  const auto a3 = a3_set(space);
  const auto alphas = monochromatic(space, a3, false);
  if (alphas.empty()) return r;
  r.applicable = true;
  r.holds = same_shape(a3, shapes::open_loop());
  r.witness = "n=" + std::to_string(space.size()) + " alpha=" + color_name(alphas.front()) + " A3=" + a3.to_string();
  return r;
}

bool check_a3_bound(const ColoredSpace& space) {
  if (space.size() < 3) return true;
  const long a2 = space.color_count();
  const long a3 = a3_count(space);
  const long bound = (a2 + 2) * (a2 + 1) * a2 / 6;
  return 1 <= a3 && a3 <= bound;
}

std::vector<LemmaReport> check_all_lemmas(const ColoredSpace& space) {
  std::vector<LemmaReport> out;
  for (int k = 1; k < space.size(); ++k) out.push_back(check_lemma_m0(space, k));
  out.push_back(check_lemma_m2(space));
  out.push_back(check_lemma_delta(space));
  out.push_back(check_lemma_closed_triple(space));
  out.push_back(check_lemma_m3_shapes(space));
  out.push_back(check_lemma_closed_loop(space));
  out.push_back(check_lemma_open_loop(space));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<PatternMatch> classify_theorem1(const ColoredSpace& space) {
  const int n = space.size();
  const int c = space.color_count();
  if (n < 2) throw Error(ErrorKind::TooSmall, "classification needs at least 2 points");
  std::vector<PatternMatch> out;
  const ColorSet all = ColorSet::all(c);

  // Matchings plus one remaining color.
  for (int rho = 0; rho < c; ++rho) {
    ColorSet others = all;
    others.erase(static_cast<Color>(rho));
    if (others.empty() || is_matching(space, others))
      out.push_back(MatchingsPlusRemainder{others, static_cast<Color>(rho)});
  }

  // Two cliques of one color, cross matchings, one remaining cross color.
  for (int kappa = 0; kappa < c; ++kappa) {
    const ColorSet clique{static_cast<Color>(kappa)};
    const auto parts = connected_components(space, clique);
    if (parts.size() != 2 || parts[0].size() < 2 || parts[1].size() < 2) continue;
    if (!is_closed_via_cliques(space, clique)) continue;
    for (int rho = 0; rho < c; ++rho) {
      if (rho == kappa) continue;
      ColorSet matchings = all;
      matchings.erase(static_cast<Color>(kappa));
      matchings.erase(static_cast<Color>(rho));
      if (!matchings.empty() && !is_matching(space, matchings)) continue;
      out.push_back(TwoCliquesCrossMatchings{parts[0], parts[1], static_cast<Color>(kappa), matchings,
                                             static_cast<Color>(rho)});
    }
  }

  // One edge alone in its color, its two ends each spanning one color.
  if (c == 4 && n >= 4) {
    const auto sizes = space.class_sizes();
    for (int d = 0; d < c; ++d) {
      if (sizes[d] != 1) continue;
      PointPair edge;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (space.at(i, j) == d) edge = PointPair(i, j);
      const int y = edge.first, z = edge.second;
      int u0 = 0;
      while (u0 == y || u0 == z) ++u0;
      const Color gamma = space.at(y, u0), beta = space.at(z, u0);
      int alpha = -1;
      bool ok = gamma != beta && gamma != d && beta != d;
      for (int u = 0; u < n && ok; ++u) {
        if (u == y || u == z) continue;
        ok = space.at(y, u) == gamma && space.at(z, u) == beta;
        for (int v = u + 1; v < n && ok; ++v) {
          if (v == y || v == z) continue;
          if (alpha < 0) alpha = space.at(u, v);
          ok = space.at(u, v) == alpha;
        }
      }
      if (!ok || alpha < 0 || alpha == d || alpha == gamma || alpha == beta) continue;
      out.push_back(EdgeApex{edge, static_cast<Color>(d), gamma, beta, static_cast<Color>(alpha)});
    }
  }
  return out;
}

bool validate_pattern(const ColoredSpace& space, const PatternMatch& match) {
  const int n = space.size();
  const int c = space.color_count();
  return std::visit(
      [&](const auto& m) -> bool {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, MatchingsPlusRemainder>) {
          if (m.matching_colors.contains(m.remainder_color)) return false;
          if (m.matching_colors.size() + 1 != c) return false;
          std::vector<int> deg(n, 0);
          for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
              const Color col = space.at(i, j);
              if (col == m.remainder_color) continue;
              if (!m.matching_colors.contains(col)) return false;
              if (++deg[i] > 1 || ++deg[j] > 1) return false;
            }
          return true;
        } else if constexpr (std::is_same_v<T, TwoCliquesCrossMatchings>) {
          if (m.part_y.size() < 2 || m.part_z.size() < 2) return false;
          if (static_cast<int>(m.part_y.size() + m.part_z.size()) != n) return false;
          const PointMask y = mask_of(m.part_y);
          if (std::popcount(y | mask_of(m.part_z)) != n) return false;
          if (m.matching_colors.contains(m.remainder_color) || m.matching_colors.contains(m.clique_color) ||
              m.remainder_color == m.clique_color)
            return false;
          if (m.matching_colors.size() + 2 != c) return false;
          std::vector<int> deg(n, 0);
          for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
              const bool inside = ((y >> i) & 1u) == ((y >> j) & 1u);
              const Color col = space.at(i, j);
              if (inside != (col == m.clique_color)) return false;
              if (inside || col == m.remainder_color) continue;
              if (!m.matching_colors.contains(col)) return false;
              if (++deg[i] > 1 || ++deg[j] > 1) return false;
            }
          return true;
        } else {
          if (c != 4) return false;
          const int y = m.edge.first, z = m.edge.second;
          const std::array<Color, 4> roles{m.alpha, m.beta, m.gamma, m.delta};
          for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
              if (roles[a] == roles[b]) return false;
          for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
              const Color col = space.at(i, j);
              Color want;
              if (i == y && j == z) want = m.delta;
              else if (i == y || j == y) want = m.gamma;
              else if (i == z || j == z) want = m.beta;
              else want = m.alpha;
              if (col != want) return false;
            }
          return true;
        }
      },
      match);
}

const char* pattern_name(const PatternMatch& match) {
  switch (match.index()) {
    case 0: return "matchings-plus-remainder";
    case 1: return "two-cliques-cross-matchings";
    default: return "edge-apex";
  }
}

namespace {

nlohmann::json colors_json(const ColorSet& s) {
  nlohmann::json a = nlohmann::json::array();
  for (Color c : s.members()) a.push_back(static_cast<int>(c));
  return a;
}

}  // namespace

nlohmann::json to_json(const PatternMatch& match) {
  nlohmann::json j;
  j["variant"] = pattern_name(match);
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, MatchingsPlusRemainder>) {
          j["matchings"] = colors_json(m.matching_colors);
          j["remainder"] = static_cast<int>(m.remainder_color);
        } else if constexpr (std::is_same_v<T, TwoCliquesCrossMatchings>) {
          j["parts"] = {m.part_y, m.part_z};
          j["clique"] = static_cast<int>(m.clique_color);
          j["matchings"] = colors_json(m.matching_colors);
          j["remainder"] = static_cast<int>(m.remainder_color);
        } else {
          j["edge"] = {m.edge.first, m.edge.second};
          j["roles"] = {{"alpha", static_cast<int>(m.alpha)},
                        {"beta", static_cast<int>(m.beta)},
                        {"gamma", static_cast<int>(m.gamma)},
                        {"delta", static_cast<int>(m.delta)}};
        }
      },
      match);
  return j;
}

}  // namespace cspace
