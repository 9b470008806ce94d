#include "cspace/fusion.hpp"

#include <algorithm>
#include <numeric>

#include "cspace/io.hpp"
#include "cspace/isometry.hpp"

namespace cspace {

FusionMap FusionMap::from_image(std::span<const int> image) {
  FusionMap f;
  std::vector<int> rename;
  std::vector<int> seen_values;
  f.map_.reserve(image.size());
  for (int v : image) {
    auto it = std::find(seen_values.begin(), seen_values.end(), v);
    if (it == seen_values.end()) {
      seen_values.push_back(v);
      f.map_.push_back(static_cast<Color>(seen_values.size() - 1));
    } else {
      f.map_.push_back(static_cast<Color>(it - seen_values.begin()));
    }
  }
  f.targets_ = static_cast<int>(seen_values.size());
  return f;
}

FusionMap FusionMap::identity(int colors) {
  std::vector<int> image(colors);
  std::iota(image.begin(), image.end(), 0);
  return from_image(image);
}

FusionMap FusionMap::merging(int colors, std::span<const std::pair<Color, Color>> merges) {
  std::vector<int> parent(colors);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : merges) {
    if (a >= colors || b >= colors) throw Error(ErrorKind::ColorOutOfRange, "merge names an unknown color");
    const int ra = find(a), rb = find(b);
    parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<int> image(colors);
  for (int c = 0; c < colors; ++c) image[c] = find(c);
  return from_image(image);
}

FusionMap FusionMap::parse(const std::string& text) {
  std::vector<int> image;
  std::string digits;
  bool open = false, closed = false;
  for (char ch : text) {
    if (ch == '[') {
      if (open) throw Error(ErrorKind::SyntaxError, "fusion map: nested '['");
      open = true;
    } else if (ch == ']' || ch == ',') {
      if (!open || closed) throw Error(ErrorKind::SyntaxError, "fusion map: expected '[t0,t1,...]'");
      if (!digits.empty()) image.push_back(std::stoi(digits));
      else if (ch == ',' || !image.empty()) throw Error(ErrorKind::SyntaxError, "fusion map: empty entry");
      digits.clear();
      if (ch == ']') closed = true;
    } else if (ch >= '0' && ch <= '9') {
      if (!open || closed) throw Error(ErrorKind::SyntaxError, "fusion map: digit outside brackets");
      digits += ch;
    } else if (ch != ' ' && ch != '\n') {
      throw Error(ErrorKind::SyntaxError, std::string("fusion map: unexpected '") + ch + "'");
    }
  }
  if (!closed) throw Error(ErrorKind::SyntaxError, "fusion map: missing ']'");
  return from_image(image);
}

std::string FusionMap::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(map_[i]);
  }
  return out + "]";
}

ColoredSpace apply_fusion(const ColoredSpace& space, const FusionMap& map) {
  if (map.source_colors() != space.color_count())
    throw Error(ErrorKind::ArityMismatch, "map has " + std::to_string(map.source_colors()) +
                                              " source colors, space has " + std::to_string(space.color_count()));
  std::vector<ColoredSpace::Assignment> as;
  const int n = space.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) as.emplace_back(PointPair(i, j), map(space.at(i, j)));
  return ColoredSpace::create(n, map.target_colors(), as);
}

bool is_fusion_of(const ColoredSpace& coarse, const ColoredSpace& fine) {
  if (coarse.size() != fine.size())
    throw Error(ErrorKind::SizeMismatch, "fusion comparison needs equal point counts");
  std::vector<int> target(fine.color_count(), -1);
  const int n = fine.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int& t = target[fine.at(i, j)];
      if (t < 0) t = coarse.at(i, j);
      else if (t != coarse.at(i, j)) return false;
    }
  return true;
}

namespace {

using Merge = std::pair<Color, Color>;

FusionAttempt evaluate(const ColoredSpace& space, int a3, const std::vector<Merge>& merges, bool matching_rule) {
  FusionAttempt at{FusionMap::merging(space.color_count(), merges), 0, 0, false};
  const ColoredSpace fused = apply_fusion(space, at.map);
  at.drop_a2 = space.color_count() - fused.color_count();
  at.drop_a3 = a3 - a3_count(fused);
  if (matching_rule)
    at.satisfies = at.drop_a2 >= 1 && at.drop_a2 <= 2 && at.drop_a2 <= at.drop_a3;
  else
    at.satisfies = at.drop_a2 == 1 && at.drop_a3 >= 1;
  return at;
}

FoundFusion found(const ColoredSpace& space, int a3, const FusionAttempt& at, bool guided) {
  return FoundFusion{at.map, space.color_count(), a3, space.color_count() - at.drop_a2, a3 - at.drop_a3, guided};
}

void check_common(const ColoredSpace& space, const char* who) {
  if (space.size() < 5) throw Error(ErrorKind::PreconditionFailed, std::string(who) + " needs n >= 5");
}

// Merge candidates read off the case chain for a color with a path x1-x2-x3.
std::vector<Merge> reducing_candidates(const ColoredSpace& s) {
  const int n = s.size();
  std::vector<Merge> out;
  auto add = [&](Color a, Color b) {
    if (a != b) out.emplace_back(std::min(a, b), std::max(a, b));
  };
  int x1 = -1, x2 = -1, x3 = -1;
  for (int v = 0; v < n && x2 < 0; ++v)
    for (int a = 0; a < n && x2 < 0; ++a) {
      if (a == v) continue;
      for (int b = a + 1; b < n; ++b)
        if (b != v && s.at(v, a) == s.at(v, b)) {
          x1 = a, x2 = v, x3 = b;
          break;
        }
    }
  if (x2 < 0) return out;
  const Color base = s.at(x1, x2);
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (v != x1 && v != x2 && v != x3) rest.push_back(v);
  for (int x4 : rest) {
    if (s.at(x4, x1) != s.at(x4, x3)) add(s.at(x4, x1), s.at(x4, x3));
    else if (s.at(x4, x1) != base) add(base, s.at(x1, x4));
    else if (s.at(x1, x3) != s.at(x2, x4)) add(s.at(x1, x3), s.at(x2, x4));
  }
  for (int x4 : rest) add(base, s.at(x2, x4));
  return out;
}

std::vector<std::vector<Merge>> matching_candidates(const ColoredSpace& s) {
  const int n = s.size();
  std::vector<std::vector<Merge>> out;
  const auto sizes = s.class_sizes();
  auto pair_of = [](Color a, Color b) { return Merge(std::min(a, b), std::max(a, b)); };
  for (int alpha = 0; alpha < s.color_count(); ++alpha) {
    if (sizes[alpha] < 2) continue;
    std::vector<PointPair> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (s.at(i, j) == alpha) edges.emplace_back(i, j);
    const int x1 = edges[0].first, x2 = edges[0].second;
    int y1 = edges[1].first, y2 = edges[1].second;
    const Color c11 = s.at(x1, y1), c12 = s.at(x1, y2), c21 = s.at(x2, y1), c22 = s.at(x2, y2);
    std::vector<Color> cross{c11, c12, c21, c22};
    std::sort(cross.begin(), cross.end());
    const auto distinct = std::unique(cross.begin(), cross.end()) - cross.begin();
    if (distinct == 4) {
      out.push_back({pair_of(c11, c22)});
    } else if (distinct == 3) {
      if (c11 == c22) out.push_back({pair_of(c12, c21)});
      else out.push_back({pair_of(c11, c22)});
    } else {
      if (c11 != c22) std::swap(y1, y2);  // now r(x1,y1) = r(x2,y2)
      for (int z = 0; z < n; ++z) {
        if (z == x1 || z == x2 || z == y1 || z == y2) continue;
        out.push_back({pair_of(s.at(z, x1), s.at(z, y2)), pair_of(s.at(z, x2), s.at(z, y1))});
      }
    }
  }
  return out;
}

CounterexampleToLemma counterexample(const char* lemma, const ColoredSpace& space, const char* constraints,
                                     std::vector<FusionAttempt> attempts) {
  return CounterexampleToLemma{lemma, space, constraints, std::move(attempts)};
}

}  // namespace

FinderResult find_reducing_fusion(const ColoredSpace& space) {
  check_common(space, "reducing fusion");
  if (space.color_count() < 2) throw Error(ErrorKind::PreconditionFailed, "reducing fusion needs a_2 >= 2");
  if (m_stats(space, 2).count == 0) throw Error(ErrorKind::PreconditionFailed, "reducing fusion needs m_2 > 0");
  const int a3 = a3_count(space);
  std::vector<FusionAttempt> attempts;
  for (const Merge& m : reducing_candidates(space)) {
    auto at = evaluate(space, a3, {m}, false);
    if (at.satisfies) return found(space, a3, at, true);
    attempts.push_back(std::move(at));
  }
  const int c = space.color_count();
  for (int a = 0; a < c; ++a)
    for (int b = a + 1; b < c; ++b) {
      auto at = evaluate(space, a3, {Merge(a, b)}, false);
      if (at.satisfies) return found(space, a3, at, false);
      attempts.push_back(std::move(at));
    }
  return counterexample("reducing-fusion", space, "a2>=2, m2>0, n>=5", std::move(attempts));
}

FinderResult find_matching_fusion(const ColoredSpace& space) {
  check_common(space, "matching fusion");
  const int c = space.color_count();
  if (c >= pair_count(space.size()))
    throw Error(ErrorKind::PreconditionFailed, "matching fusion needs a_2 < C(n,2)");
  if (m_stats(space, 2).count != 0) throw Error(ErrorKind::PreconditionFailed, "matching fusion needs m_2 = 0");
  const int a3 = a3_count(space);
  std::vector<FusionAttempt> attempts;
  for (const auto& merges : matching_candidates(space)) {
    auto at = evaluate(space, a3, merges, true);
    if (at.satisfies) return found(space, a3, at, true);
    attempts.push_back(std::move(at));
  }
  for (int a = 0; a < c; ++a)
    for (int b = a + 1; b < c; ++b) {
      auto at = evaluate(space, a3, {Merge(a, b)}, true);
      if (at.satisfies) return found(space, a3, at, false);
      attempts.push_back(std::move(at));
    }
  for (int a = 0; a < c; ++a)
    for (int b = a + 1; b < c; ++b)
      for (int d = a + 1; d < c; ++d)
        for (int e = d + 1; e < c; ++e) {
          if (d == b || e == b) continue;
          auto at = evaluate(space, a3, {Merge(a, b), Merge(d, e)}, true);
          if (at.satisfies) return found(space, a3, at, false);
          attempts.push_back(std::move(at));
        }
  return counterexample("matching-fusion", space, "a2<C(n,2), m2=0, n>=5", std::move(attempts));
}

FusionChain fusion_chain(const ColoredSpace& space) {
  if (space.size() < 5) throw Error(ErrorKind::PreconditionFailed, "fusion chain needs n >= 5");
  FusionChain chain;
  ColoredSpace current = space;
  while (current.color_count() > 3) {
    const int a2 = current.color_count();
    const int a3 = a3_count(current);
    if (a2 > a3) chain.falsified = true;
    ChainStep step{"", FusionMap::identity(a2), current, a2, a3, 0, 0};
    if (m_stats(current, 2).count > 0 || a2 < pair_count(current.size())) {
      const bool reducing = m_stats(current, 2).count > 0;
      FinderResult res = reducing ? find_reducing_fusion(current) : find_matching_fusion(current);
      if (auto* cx = std::get_if<CounterexampleToLemma>(&res)) {
        chain.counterexample = *cx;
        chain.falsified = true;
        return chain;
      }
      step.rule = reducing ? "reducing" : "matching";
      step.map = std::get<FoundFusion>(res).map;
    } else {
      const std::vector<Merge> first{Merge(0, 1)};
      step.rule = "rainbow";
      step.map = FusionMap::merging(a2, first);
    }
    current = apply_fusion(current, step.map);
    step.space = current;
    step.a2_after = current.color_count();
    step.a3_after = a3_count(current);
    chain.steps.push_back(std::move(step));
  }
  if (current.color_count() > a3_count(current)) chain.falsified = true;
  return chain;
}

nlohmann::json to_json(const FusionChain& chain) {
  nlohmann::json steps = nlohmann::json::array();
  int index = 0;
  for (const auto& s : chain.steps)
    steps.push_back({{"step", index++},
                     {"rule", s.rule},
                     {"map", s.map.to_string()},
                     {"a2", s.a2_before},
                     {"a3", s.a3_before},
                     {"a2_after", s.a2_after},
                     {"a3_after", s.a3_after}});
  nlohmann::json j = {{"steps", steps}, {"falsified", chain.falsified}};
  if (chain.counterexample) j["counterexample"] = to_json(*chain.counterexample);
  return j;
}

nlohmann::json to_json(const CounterexampleToLemma& cx) {
  nlohmann::json attempts = nlohmann::json::array();
  for (const auto& a : cx.attempts)
    attempts.push_back({{"map", a.map.to_string()}, {"drop_a2", a.drop_a2}, {"drop_a3", a.drop_a3}});
  return {{"lemma", cx.lemma},
          {"constraints", cx.constraints},
          {"space", serialize_space(cx.space, Format::Text)},
          {"attempts", attempts}};
}

}  // namespace cspace
