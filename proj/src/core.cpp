#include "cspace/core.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace cspace {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingPair: return "MissingPair";
    case ErrorKind::DuplicatePair: return "DuplicatePair";
    case ErrorKind::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorKind::UnusedColor: return "UnusedColor";
    case ErrorKind::SamePoint: return "SamePoint";
    case ErrorKind::PointOutOfRange: return "PointOutOfRange";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::EmptyColorSet: return "EmptyColorSet";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::BadK: return "BadK";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::BadArity: return "BadArity";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotAMatching: return "NotAMatching";
    case ErrorKind::Overlap: return "Overlap";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

std::vector<PointPair> all_pairs(int n) {
  std::vector<PointPair> pairs;
  pairs.reserve(pair_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

ColorSet ColorSet::all(int color_count) {
  ColorSet s;
  for (int c = 0; c < color_count; ++c) s.insert(static_cast<Color>(c));
  return s;
}

std::vector<Color> ColorSet::members() const {
  std::vector<Color> out;
  for (int c = 0; c < kMaxColors; ++c)
    if (bits_.test(c)) out.push_back(static_cast<Color>(c));
  return out;
}

namespace {

void check_point_count(int n) {
  if (n < 1 || n > kMaxPoints)
    throw Error(ErrorKind::PointOutOfRange,
                "point count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxPoints));
}

void check_color_count(int n, int c) {
  const int lo = n == 1 ? 0 : 1;
  const int hi = pair_count(n);
  if (c < lo || c > hi)
    throw Error(ErrorKind::ColorOutOfRange,
                "color count " + std::to_string(c) + " impossible for " + std::to_string(n) + " points");
}

std::string pair_name(PointPair p) {
  return "{" + std::to_string(p.first) + "," + std::to_string(p.second) + "}";
}

}  // namespace

ColoredSpace ColoredSpace::create(int n, int color_count, std::span<const Assignment> assignments) {
  check_point_count(n);
  ColoredSpace s;
  s.n_ = n;
  s.c_ = color_count;
  std::vector<bool> seen(n * n, false);
  for (const auto& [pair, color] : assignments) {
    if (pair.first < 0 || pair.second >= n)
      throw Error(ErrorKind::PointOutOfRange, "pair " + pair_name(pair) + " outside 0.." + std::to_string(n - 1));
    if (pair.first == pair.second) throw Error(ErrorKind::SamePoint, "pair " + pair_name(pair));
    if (color >= color_count)
      throw Error(ErrorKind::ColorOutOfRange,
                  "pair " + pair_name(pair) + " has color " + std::to_string(color));
    const int idx = pair.first * n + pair.second;
    if (seen[idx]) throw Error(ErrorKind::DuplicatePair, "pair " + pair_name(pair));
    seen[idx] = true;
    s.m_[pair.first * kMaxPoints + pair.second] = color;
    s.m_[pair.second * kMaxPoints + pair.first] = color;
  }
  for (const auto& p : all_pairs(n))
    if (!seen[p.first * n + p.second]) throw Error(ErrorKind::MissingPair, "pair " + pair_name(p));
  check_color_count(n, color_count);
  s.validate_surjective();
  return s;
}

ColoredSpace ColoredSpace::from_pair_colors(int n, int color_count, std::span<const Color> colors) {
  check_point_count(n);
  if (static_cast<int>(colors.size()) != pair_count(n))
    throw Error(colors.size() < static_cast<std::size_t>(pair_count(n)) ? ErrorKind::MissingPair
                                                                          : ErrorKind::DuplicatePair,
                "expected " + std::to_string(pair_count(n)) + " pair colors, got " +
                    std::to_string(colors.size()));
  std::vector<Assignment> as;
  as.reserve(colors.size());
  std::size_t k = 0;
  for (const auto& p : all_pairs(n)) as.emplace_back(p, colors[k++]);
  return create(n, color_count, as);
}

ColoredSpace ColoredSpace::trusted_from_pair_colors(int n, int color_count, std::span<const Color> colors) {
  ColoredSpace s;
  s.n_ = n;
  s.c_ = color_count;
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      s.m_[i * kMaxPoints + j] = colors[k];
      s.m_[j * kMaxPoints + i] = colors[k];
      ++k;
    }
  return s;
}

ColoredSpace ColoredSpace::from_matrix_renumbered(int n, std::span<const Color> matrix) {
  check_point_count(n);
  std::array<int, 256> rename;
  rename.fill(-1);
  int next = 0;
  ColoredSpace s;
  s.n_ = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Color raw = matrix[i * n + j];
      if (rename[raw] < 0) rename[raw] = next++;
      const auto c = static_cast<Color>(rename[raw]);
      s.m_[i * kMaxPoints + j] = c;
      s.m_[j * kMaxPoints + i] = c;
    }
  s.c_ = next;
  return s;
}

void ColoredSpace::validate_surjective() const {
  std::vector<bool> used(c_, false);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) used[at(i, j)] = true;
  for (int c = 0; c < c_; ++c)
    if (!used[c]) throw Error(ErrorKind::UnusedColor, "color " + std::to_string(c) + " labels no pair");
}

Color ColoredSpace::color_of(Point x, Point y) const {
  if (x < 0 || y < 0 || x >= n_ || y >= n_)
    throw Error(ErrorKind::PointOutOfRange, "point outside 0.." + std::to_string(n_ - 1));
  if (x == y) throw Error(ErrorKind::SamePoint, "point " + std::to_string(x));
  return at(x, y);
}

std::vector<Color> ColoredSpace::pair_colors() const {
  std::vector<Color> out;
  out.reserve(pair_count(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) out.push_back(at(i, j));
  return out;
}

std::vector<int> ColoredSpace::class_sizes() const {
  std::vector<int> sizes(c_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) ++sizes[at(i, j)];
  return sizes;
}

bool operator==(const ColoredSpace& a, const ColoredSpace& b) {
  if (a.n_ != b.n_ || a.c_ != b.c_) return false;
  for (int i = 0; i < a.n_; ++i)
    for (int j = i + 1; j < a.n_; ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

PointMask mask_of(std::span<const Point> points) {
  PointMask m = 0;
  for (Point p : points) m |= PointMask{1} << p;
  return m;
}

std::vector<Point> points_of(PointMask mask) {
  std::vector<Point> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

SubspaceView induced_subspace(const ColoredSpace& space, std::span<const Point> points) {
  if (points.size() < 2)
    throw Error(ErrorKind::TooSmall, "induced subspace needs at least 2 points, got " +
                                         std::to_string(points.size()));
  const int n = space.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] < 0 || points[i] >= n)
      throw Error(ErrorKind::PointOutOfRange, "point " + std::to_string(points[i]));
    if (i > 0 && points[i] <= points[i - 1])
      throw Error(ErrorKind::DuplicatePair, "subset points must be sorted and distinct");
  }
  const int k = static_cast<int>(points.size());
  std::vector<int> renorm(space.color_count(), -1);
  int next = 0;
  std::vector<ColoredSpace::Assignment> as;
  as.reserve(pair_count(k));
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const Color parent = space.at(points[a], points[b]);
      if (renorm[parent] < 0) renorm[parent] = next++;
      as.emplace_back(PointPair(a, b), static_cast<Color>(renorm[parent]));
    }
  return SubspaceView{{points.begin(), points.end()}, std::move(renorm), ColoredSpace::create(k, next, as)};
}

ColorGraph::ColorGraph(const ColoredSpace& space, const ColorSet& colors)
    : n_(space.size()), colors_(colors) {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (colors.contains(space.at(i, j))) {
        adj_[i] |= PointMask{1} << j;
        adj_[j] |= PointMask{1} << i;
      }
}

int ColorGraph::degree(Point x) const noexcept { return std::popcount(adj_[x]); }

int ColorGraph::max_degree() const noexcept {
  int d = 0;
  for (int i = 0; i < n_; ++i) d = std::max(d, degree(i));
  return d;
}

int ColorGraph::edge_count() const noexcept {
  int twice = 0;
  for (int i = 0; i < n_; ++i) twice += degree(i);
  return twice / 2;
}

std::vector<PointPair> ColorGraph::edges() const {
  std::vector<PointPair> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

ColorGraph color_graph(const ColoredSpace& space, const ColorSet& colors) { return ColorGraph(space, colors); }

int degree(const ColoredSpace& space, Color color, Point x) {
  if (x < 0 || x >= space.size()) throw Error(ErrorKind::PointOutOfRange, "point " + std::to_string(x));
  int d = 0;
  for (int y = 0; y < space.size(); ++y)
    if (y != x && space.at(x, y) == color) ++d;
  return d;
}

MStats m_stats(const ColoredSpace& space, int k) {
  const int n = space.size();
  if (k < 1 || k > n)
    throw Error(ErrorKind::BadK, "k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
  std::vector<int> max_deg(space.color_count(), 0);
  for (int x = 0; x < n; ++x) {
    std::vector<int> deg(space.color_count(), 0);
    for (int y = 0; y < n; ++y)
      if (y != x) ++deg[space.at(x, y)];
    for (int c = 0; c < space.color_count(); ++c) max_deg[c] = std::max(max_deg[c], deg[c]);
  }
  MStats out;
  for (int c = 0; c < space.color_count(); ++c)
    if (max_deg[c] >= k) out.colors.insert(static_cast<Color>(c));
  out.count = out.colors.size();
  return out;
}

bool is_matching(const ColoredSpace& space, const ColorSet& colors) {
  if (colors.empty()) throw Error(ErrorKind::EmptyColorSet, "is_matching needs a non-empty color set");
  return ColorGraph(space, colors).max_degree() <= 1;
}

}  // namespace cspace
