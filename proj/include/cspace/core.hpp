#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cspace {

/// Largest supported point count. Keeps every point set inside a 32-bit mask
/// and every color inside one byte.
inline constexpr int kMaxPoints = 16;
inline constexpr int kMaxColors = kMaxPoints * (kMaxPoints - 1) / 2;

using Point = int;
using Color = std::uint8_t;
using PointMask = std::uint32_t;

enum class ErrorKind {
  MissingPair,
  DuplicatePair,
  ColorOutOfRange,
  UnusedColor,
  SamePoint,
  PointOutOfRange,
  TooSmall,
  TooLarge,
  EmptyColorSet,
  SyntaxError,
  SizeMismatch,
  BadK,
  ArityMismatch,
  BadArity,
  PreconditionFailed,
  NotAMatching,
  Overlap,
  BudgetExceeded,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Unordered pair of distinct points, stored with first < second.
struct PointPair {
  Point first = 0;
  Point second = 0;

  PointPair() = default;
  PointPair(Point a, Point b) : first(a < b ? a : b), second(a < b ? b : a) {}

  friend bool operator==(const PointPair&, const PointPair&) = default;
  friend auto operator<=>(const PointPair&, const PointPair&) = default;
};

/// Pairs of an n-point space in the fixed traversal order: i ascending, then j > i ascending.
std::vector<PointPair> all_pairs(int n);

/// Set of colors, small enough to pass by value.
class ColorSet {
 public:
  ColorSet() = default;
  ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors) insert(c);
  }

  static ColorSet all(int color_count);

  void insert(Color c) { bits_.set(c); }
  void erase(Color c) { bits_.reset(c); }
  bool contains(Color c) const { return bits_.test(c); }
  int size() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }
  std::vector<Color> members() const;

  ColorSet operator|(const ColorSet& o) const {
    ColorSet r;
    r.bits_ = bits_ | o.bits_;
    return r;
  }
  ColorSet operator&(const ColorSet& o) const {
    ColorSet r;
    r.bits_ = bits_ & o.bits_;
    return r;
  }
  bool subset_of(const ColorSet& o) const { return (bits_ & ~o.bits_).none(); }

  friend bool operator==(const ColorSet&, const ColorSet&) = default;

 private:
  std::bitset<kMaxColors> bits_;
};

/// A finite set of points 0..n-1 with a color on every unordered pair.
///
/// Colors are 0..c-1 and every one of them is used, so the number of colors
/// equals the number of isometry classes of 2-point subspaces. Immutable after
/// construction; the whole value is a fixed-size array, so copies are cheap and
/// it can be shared freely between threads.
class ColoredSpace {
 public:
  using Assignment = std::pair<PointPair, Color>;

  /// Builds and validates a space. Throws Error with MissingPair,
  /// DuplicatePair, ColorOutOfRange, UnusedColor or PointOutOfRange.
  static ColoredSpace create(int n, int color_count, std::span<const Assignment> assignments);

  /// Builds from colors listed in the fixed pair order.
  static ColoredSpace from_pair_colors(int n, int color_count, std::span<const Color> colors);

  /// Skips validation; the caller guarantees every color 0..c-1 occurs.
  /// For generators that produce valid colorings by construction.
  static ColoredSpace trusted_from_pair_colors(int n, int color_count, std::span<const Color> colors);

  /// Builds from a full symmetric matrix (row-major, n*n, diagonal ignored)
  /// whose colors are arbitrary; colors are renumbered by first occurrence in
  /// the fixed pair order.
  static ColoredSpace from_matrix_renumbered(int n, std::span<const Color> matrix);

  int size() const noexcept { return n_; }
  int color_count() const noexcept { return c_; }

  /// Checked access. Throws SamePoint or PointOutOfRange.
  Color color_of(Point x, Point y) const;

  /// Unchecked access for hot loops; x != y assumed.
  Color at(Point x, Point y) const noexcept { return m_[x * kMaxPoints + y]; }

  std::vector<Color> pair_colors() const;

  /// Number of pairs carrying each color.
  std::vector<int> class_sizes() const;

  friend bool operator==(const ColoredSpace& a, const ColoredSpace& b);

 private:
  ColoredSpace() = default;
  void validate_surjective() const;

  int n_ = 0;
  int c_ = 0;
  std::array<Color, kMaxPoints * kMaxPoints> m_{};
};

/// An induced subspace together with the color renumbering that produced it.
struct SubspaceView {
  std::vector<Point> points;
  /// renorm[parent color] = induced color, or -1 when the color is absent.
  std::vector<int> renorm;
  ColoredSpace space;
};

/// Restriction to a point subset (sorted, distinct). Induced colors are numbered
/// by first occurrence under the fixed pair order of the subset. Throws TooSmall
/// when fewer than 2 points are given.
SubspaceView induced_subspace(const ColoredSpace& space, std::span<const Point> points);

PointMask mask_of(std::span<const Point> points);
std::vector<Point> points_of(PointMask mask);

/// Graph on the points whose edges are the pairs colored by a member of a color set.
class ColorGraph {
 public:
  ColorGraph(const ColoredSpace& space, const ColorSet& colors);

  int size() const noexcept { return n_; }
  const ColorSet& colors() const noexcept { return colors_; }
  PointMask neighbors(Point x) const noexcept { return adj_[x]; }
  int degree(Point x) const noexcept;
  int max_degree() const noexcept;
  int edge_count() const noexcept;
  bool has_edge(Point x, Point y) const noexcept { return (adj_[x] >> y) & 1u; }
  std::vector<PointPair> edges() const;

 private:
  int n_;
  ColorSet colors_;
  std::array<PointMask, kMaxPoints> adj_{};
};

ColorGraph color_graph(const ColoredSpace& space, const ColorSet& colors);

/// Degree of x in the graph of one color.
int degree(const ColoredSpace& space, Color color, Point x);

struct MStats {
  ColorSet colors;  // colors whose graph has a vertex of degree >= k
  int count = 0;
};

/// M_k and m_k. Requires 1 <= k <= n (BadK otherwise).
MStats m_stats(const ColoredSpace& space, int k);

/// True iff the union of the given color classes has maximum degree <= 1.
/// Throws EmptyColorSet.
bool is_matching(const ColoredSpace& space, const ColorSet& colors);

}  // namespace cspace
