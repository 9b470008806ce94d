#include "cspace/isometry.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cspace {

TriangleType TriangleType::of(Color a, Color b, Color c) {
  TriangleType t{{a, b, c}};
  std::sort(t.colors.begin(), t.colors.end());
  return t;
}

TriangleType TriangleType::from_code(std::uint32_t code) {
  return TriangleType{{static_cast<Color>(code >> 16), static_cast<Color>(code >> 8), static_cast<Color>(code)}};
}

TriangleTypeSet::TriangleTypeSet(std::vector<TriangleType> types) : members_(std::move(types)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool TriangleTypeSet::contains(const TriangleType& t) const {
  return std::binary_search(members_.begin(), members_.end(), t);
}

std::string TriangleTypeSet::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const auto& c = members_[i].colors;
    out << (i ? "," : "") << '[' << int(c[0]) << ',' << int(c[1]) << ',' << int(c[2]) << ']';
  }
  out << ']';
  return out.str();
}

std::string IsometricSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

bool IsometricSequence::unimodal() const {
  std::size_t i = 1;
  while (i < values.size() && values[i] >= values[i - 1]) ++i;
  while (i < values.size() && values[i] <= values[i - 1]) ++i;
  return i >= values.size();
}

std::string IsomorphismKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (Color b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 15];
  }
  return out;
}

bool isometric(const ColoredSpace& space, std::span<const Point> y, std::span<const Point> z) {
  if (y.size() != z.size())
    throw Error(ErrorKind::SizeMismatch,
                "subsets of sizes " + std::to_string(y.size()) + " and " + std::to_string(z.size()));
  const int k = static_cast<int>(y.size());
  std::vector<Point> image(k);
  std::vector<bool> used(k, false);
  // Assign images of y[0], y[1], ... and check every completed pair.
  auto extend = [&](auto&& self, int depth) -> bool {
    if (depth == k) return true;
    for (int t = 0; t < k; ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) ok = space.at(y[i], y[depth]) == space.at(image[i], z[t]);
      if (!ok) continue;
      used[t] = true;
      image[depth] = z[t];
      if (self(self, depth + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

namespace {

constexpr Color kUnnamed = 0xFF;
constexpr Color kTokenBase = 0x80;

// One node of the level-wise lex-min search: an ordered prefix of the subset
// plus, when colors are renamed, the names handed out so far.
struct Node {
  std::array<std::uint8_t, kMaxPoints> order{};
  PointMask remaining = 0;
  int next_name = 0;
  std::array<Color, 256> names{};
};

struct CanonicalResult {
  std::vector<Color> key;
  std::vector<int> order;  // order[position] = local index
};

// Least colex vector of the subspace on `pts` over all orderings.
//
// Level k extends every surviving prefix by each remaining point and keeps only
// the extensions whose new block (colors to the k placed points) is least. Two
// survivors with the same remaining set and the same view of the remaining
// pairs (colors toward the prefix, with unnamed colors compared up to
// renaming) have identical completions, so only one of them is kept.
CanonicalResult canonical_search(const ColoredSpace& space, std::span<const Point> pts, bool rename) {
  const int m = static_cast<int>(pts.size());
  CanonicalResult result;
  if (m == 0) return result;

  std::array<Color, kMaxPoints * kMaxPoints> local{};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b) local[a * kMaxPoints + b] = space.at(pts[a], pts[b]);
  auto col = [&](int a, int b) { return local[a * kMaxPoints + b]; };

  const PointMask full = m == 32 ? ~PointMask{0} : ((PointMask{1} << m) - 1);
  std::vector<Node> frontier;
  frontier.reserve(m);
  for (int v = 0; v < m; ++v) {
    Node node;
    node.order[0] = static_cast<std::uint8_t>(v);
    node.remaining = full & ~(PointMask{1} << v);
    node.names.fill(kUnnamed);
    frontier.push_back(node);
  }
  // With nothing placed but one point, prefixes differ only by which point
  // is first; the dedup below handles the symmetric cases from level 1 on.

  std::vector<Color> block(m), best(m);
  std::vector<Node> next;
  std::unordered_set<std::string> seen;
  std::string signature;

  for (int k = 1; k < m; ++k) {
    bool have_best = false;
    next.clear();
    seen.clear();
    for (const Node& node : frontier) {
      PointMask rest = node.remaining;
      while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;

        // Build the block for placing v at position k, comparing as we go.
        Node child = node;
        int cmp = have_best ? 0 : -1;
        bool worse = false;
        for (int i = 0; i < k; ++i) {
          Color c = col(node.order[i], v);
          if (rename) {
            if (child.names[c] == kUnnamed) child.names[c] = static_cast<Color>(child.next_name++);
            c = child.names[c];
          }
          block[i] = c;
          if (cmp == 0) {
            if (c < best[i]) cmp = -1;
            else if (c > best[i]) {
              worse = true;
              break;
            }
          }
        }
        if (worse) continue;
        if (cmp < 0) {
          std::copy(block.begin(), block.begin() + k, best.begin());
          have_best = true;
          next.clear();
          seen.clear();
        }
        child.order[k] = static_cast<std::uint8_t>(v);
        child.remaining = node.remaining & ~(PointMask{1} << v);

        signature.clear();
        signature.push_back(static_cast<char>(child.remaining & 0xFF));
        signature.push_back(static_cast<char>((child.remaining >> 8) & 0xFF));
        if (rename) {
          std::array<Color, 256> token;
          token.fill(kUnnamed);
          int next_token = 0;
          auto emit = [&](Color raw) {
            Color c = child.names[raw];
            if (c == kUnnamed) {
              if (token[raw] == kUnnamed) token[raw] = static_cast<Color>(kTokenBase + next_token++);
              c = token[raw];
            }
            signature.push_back(static_cast<char>(c));
          };
          for (PointMask r = child.remaining; r; r &= r - 1) {
            const int u = std::countr_zero(r);
            for (int i = 0; i <= k; ++i) emit(col(child.order[i], u));
          }
          for (PointMask r = child.remaining; r; r &= r - 1) {
            const int u = std::countr_zero(r);
            for (PointMask s = r & (r - 1); s; s &= s - 1) emit(col(u, std::countr_zero(s)));
          }
        } else {
          for (PointMask r = child.remaining; r; r &= r - 1) {
            const int u = std::countr_zero(r);
            for (int i = 0; i <= k; ++i) signature.push_back(static_cast<char>(col(child.order[i], u)));
          }
        }
        if (seen.insert(signature).second) next.push_back(child);
      }
    }
    result.key.insert(result.key.end(), best.begin(), best.begin() + k);
    frontier.swap(next);
  }
  result.order.assign(frontier.front().order.begin(), frontier.front().order.begin() + m);
  return result;
}

}  // namespace

IsometryKey isometry_key(const ColoredSpace& space, std::span<const Point> subset) {
  return IsometryKey{canonical_search(space, subset, false).key};
}

IsometryKey isometry_key(const ColoredSpace& space, PointMask subset) {
  const auto pts = points_of(subset);
  return isometry_key(space, pts);
}

IsomorphismKey isomorphism_key(const ColoredSpace& space) {
  std::vector<Point> pts(space.size());
  for (int i = 0; i < space.size(); ++i) pts[i] = i;
  return IsomorphismKey{canonical_search(space, pts, true).key};
}

bool isomorphic(const ColoredSpace& a, const ColoredSpace& b) {
  if (a.size() != b.size() || a.color_count() != b.color_count()) return false;
  return isomorphism_key(a) == isomorphism_key(b);
}

ColoredSpace decode_key(int n, const IsomorphismKey& key) {
  if (static_cast<int>(key.bytes.size()) != pair_count(n))
    throw Error(ErrorKind::SizeMismatch, "key length does not match point count");
  std::vector<ColoredSpace::Assignment> as;
  as.reserve(key.bytes.size());
  int colors = 0;
  std::size_t idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      const Color c = key.bytes[idx++];
      colors = std::max(colors, c + 1);
      as.emplace_back(PointPair(i, j), c);
    }
  return ColoredSpace::create(n, colors, as);
}

ColoredSpace canonical_form(const ColoredSpace& space) { return decode_key(space.size(), isomorphism_key(space)); }

namespace {

// For equal-size subsets: lexicographic order of the sorted point lists.
bool lex_less(PointMask a, PointMask b) {
  const PointMask diff = a ^ b;
  return diff && (a & (diff & (~diff + 1)));
}

std::vector<PointMask> subsets_of_size(int n, int k) {
  std::vector<PointMask> out;
  if (k == 0) return {0};
  PointMask s = (PointMask{1} << k) - 1;
  const PointMask limit = PointMask{1} << n;
  while (s < limit) {
    out.push_back(s);
    const PointMask c = s & (~s + 1);
    const PointMask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

using ClassMap = std::unordered_map<std::string, PointMask>;

void merge_class(ClassMap& classes, std::string key, PointMask subset) {
  auto [it, inserted] = classes.try_emplace(std::move(key), subset);
  if (!inserted && lex_less(subset, it->second)) it->second = subset;
}

std::string key_string(const ColoredSpace& space, PointMask subset) {
  const auto key = isometry_key(space, subset);
  return std::string(key.bytes.begin(), key.bytes.end());
}

}  // namespace

ClassCount a_k(const ColoredSpace& space, int k, Exec exec) {
  const int n = space.size();
  if (k < 1 || k > n)
    throw Error(ErrorKind::BadK, "k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
  const auto subsets = subsets_of_size(n, k);
  ClassMap classes;

  if (exec.serial()) {
    for (PointMask s : subsets) merge_class(classes, key_string(space, s), s);
  } else {
    const int jobs = resolve_jobs(exec);
    std::vector<ClassMap> partial(jobs);
    const auto count = static_cast<long>(subsets.size());
#pragma omp parallel for num_threads(jobs) schedule(dynamic, 64)
    for (long i = 0; i < count; ++i) {
#ifdef _OPENMP
      auto& mine = partial[omp_get_thread_num()];
#else
      auto& mine = partial[0];
#endif
      merge_class(mine, key_string(space, subsets[i]), subsets[i]);
    }
    for (auto& p : partial)
      for (auto& [key, subset] : p) merge_class(classes, key, subset);
  }

  std::map<std::string, PointMask> ordered(classes.begin(), classes.end());
  ClassCount out;
  out.count = static_cast<int>(ordered.size());
  for (const auto& [key, subset] : ordered) out.representatives.push_back(points_of(subset));
  return out;
}

IsometricSequence isometric_sequence(const ColoredSpace& space, Exec exec) {
  IsometricSequence seq;
  for (int k = 1; k <= space.size(); ++k) seq.values.push_back(a_k(space, k, exec).count);
  return seq;
}

TriangleTypeSet a3_set_of(const ColoredSpace& space, PointMask subset) {
  const auto pts = points_of(subset);
  std::vector<TriangleType> types;
  const int m = static_cast<int>(pts.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        types.push_back(TriangleType::of(space.at(pts[a], pts[b]), space.at(pts[b], pts[c]), space.at(pts[a], pts[c])));
  return TriangleTypeSet(std::move(types));
}

TriangleTypeSet a3_set(const ColoredSpace& space) {
  if (space.size() < 3) throw Error(ErrorKind::TooSmall, "A_3 needs at least 3 points");
  return a3_set_of(space, (PointMask{1} << space.size()) - 1);
}

int a3_count(const ColoredSpace& space) {
  const int n = space.size();
  std::array<std::uint32_t, 560> codes;  // C(16,3)
  int m = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Color ab = space.at(a, b);
      for (int c = b + 1; c < n; ++c) codes[m++] = TriangleType::of(ab, space.at(b, c), space.at(a, c)).code();
    }
  std::sort(codes.begin(), codes.begin() + m);
  return static_cast<int>(std::unique(codes.begin(), codes.begin() + m) - codes.begin());
}

}  // namespace cspace
