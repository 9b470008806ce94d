#include "cspace/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace cspace::oracle {

bool isomorphic(const ColoredSpace& a, const ColoredSpace& b) {
  if (a.size() != b.size() || a.color_count() != b.color_count()) return false;
  const int n = a.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> fwd(a.color_count(), -1), back(b.color_count(), -1);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) {
        const int ca = a.at(i, j), cb = b.at(perm[i], perm[j]);
        if (fwd[ca] < 0 && back[cb] < 0) {
          fwd[ca] = cb;
          back[cb] = ca;
        } else if (fwd[ca] != cb || back[cb] != ca) {
          ok = false;
        }
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool isometric(const ColoredSpace& space, std::span<const Point> y, std::span<const Point> z) {
  if (y.size() != z.size()) return false;
  const int k = static_cast<int>(y.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j) ok = space.at(y[i], y[j]) == space.at(z[perm[i]], z[perm[j]]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

int a_k(const ColoredSpace& space, int k) {
  const int n = space.size();
  std::vector<std::vector<Point>> reps;
  std::vector<Point> subset;
  auto visit = [&](auto&& self, int start) -> void {
    if (static_cast<int>(subset.size()) == k) {
      for (const auto& r : reps)
        if (isometric(space, r, subset)) return;
      reps.push_back(subset);
      return;
    }
    for (int p = start; p < n; ++p) {
      subset.push_back(p);
      self(self, p + 1);
      subset.pop_back();
    }
  };
  visit(visit, 0);
  return static_cast<int>(reps.size());
}

bool union_is_equivalence(const ColoredSpace& space, const ColorSet& colors) {
  const int n = space.size();
  auto related = [&](int x, int y) { return x == y || colors.contains(space.at(x, y)); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (related(x, y) && related(y, z) && !related(x, z)) return false;
  return true;
}

}  // namespace cspace::oracle
