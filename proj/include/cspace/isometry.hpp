#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "cspace/core.hpp"
#include "cspace/parallel.hpp"

namespace cspace {

/// Canonical certificate of a point subset with colors held fixed.
///
/// The bytes are the lexicographically least color vector of the induced
/// matrix over all orderings of the subset, read in colex pair order
/// (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),... Two subsets of one space get equal
/// keys exactly when some bijection between them preserves every pair color.
struct IsometryKey {
  std::vector<Color> bytes;

  friend bool operator==(const IsometryKey&, const IsometryKey&) = default;
  friend auto operator<=>(const IsometryKey&, const IsometryKey&) = default;
};

/// Canonical certificate of a whole space up to point and color relabeling:
/// the least colex vector over all orderings after renaming colors by first
/// appearance under that ordering.
struct IsomorphismKey {
  std::vector<Color> bytes;

  std::string hex() const;

  friend bool operator==(const IsomorphismKey&, const IsomorphismKey&) = default;
  friend auto operator<=>(const IsomorphismKey&, const IsomorphismKey&) = default;
};

/// Unordered color triple of a 3-point subspace, stored sorted.
struct TriangleType {
  std::array<Color, 3> colors{};

  static TriangleType of(Color a, Color b, Color c);
  std::uint32_t code() const {
    return (std::uint32_t{colors[0]} << 16) | (std::uint32_t{colors[1]} << 8) | colors[2];
  }
  static TriangleType from_code(std::uint32_t code);

  friend bool operator==(const TriangleType&, const TriangleType&) = default;
  friend auto operator<=>(const TriangleType&, const TriangleType&) = default;
};

/// A_3 as a sorted set of triangle types.
class TriangleTypeSet {
 public:
  TriangleTypeSet() = default;
  explicit TriangleTypeSet(std::vector<TriangleType> types);

  int size() const { return static_cast<int>(members_.size()); }
  bool contains(const TriangleType& t) const;
  bool contains(Color a, Color b, Color c) const { return contains(TriangleType::of(a, b, c)); }
  const std::vector<TriangleType>& members() const { return members_; }

  /// "[[0,0,1],[0,1,2]]"
  std::string to_string() const;

  friend bool operator==(const TriangleTypeSet&, const TriangleTypeSet&) = default;

 private:
  std::vector<TriangleType> members_;
};

struct IsometricSequence {
  std::vector<int> values;  // a_1 .. a_n

  int operator[](int k) const { return values.at(k - 1); }
  /// "1,2,2,2,1,1"
  std::string to_string() const;
  bool unimodal() const;

  friend bool operator==(const IsometricSequence&, const IsometricSequence&) = default;
};

struct ClassCount {
  int count = 0;
  /// Lexicographically least subset of each class, ordered by class key.
  std::vector<std::vector<Point>> representatives;
};

/// Decides Y ≃ Z by searching for a color-preserving bijection. Throws
/// SizeMismatch when |Y| != |Z|.
bool isometric(const ColoredSpace& space, std::span<const Point> y, std::span<const Point> z);

IsometryKey isometry_key(const ColoredSpace& space, std::span<const Point> subset);
IsometryKey isometry_key(const ColoredSpace& space, PointMask subset);

IsomorphismKey isomorphism_key(const ColoredSpace& space);
bool isomorphic(const ColoredSpace& a, const ColoredSpace& b);

/// The space relabeled into its canonical form: pair colors equal the
/// isomorphism key. Isomorphic inputs give identical outputs.
ColoredSpace canonical_form(const ColoredSpace& space);

/// Rebuilds the canonical space encoded by a key of an n-point space.
ColoredSpace decode_key(int n, const IsomorphismKey& key);

/// Number of isometry classes of k-subsets with their least representatives.
/// Throws BadK unless 1 <= k <= n.
ClassCount a_k(const ColoredSpace& space, int k, Exec exec = {});

IsometricSequence isometric_sequence(const ColoredSpace& space, Exec exec = {});

/// A_3 from sorted triples. Throws TooSmall for n < 3.
TriangleTypeSet a3_set(const ColoredSpace& space);

/// |A_3|, allocation-light; 0 when n < 3.
int a3_count(const ColoredSpace& space);

/// A_3 of the subspace on a point subset, colors kept as in the parent.
TriangleTypeSet a3_set_of(const ColoredSpace& space, PointMask subset);

}  // namespace cspace
