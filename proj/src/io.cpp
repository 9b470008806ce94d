#include "cspace/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace cspace {

namespace {

struct Line {
  int number;
  std::vector<long> values;
};

[[noreturn]] void syntax_error(int line, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + msg);
}

// Splits into numbered lines of integers, dropping comments and blank lines.
std::vector<Line> tokenize(std::string_view bytes) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= bytes.size()) {
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view raw = bytes.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      if (i >= raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      long value = 0;
      auto [ptr, ec] = std::from_chars(raw.data() + i, raw.data() + j, value);
      if (ec != std::errc() || ptr != raw.data() + j)
        syntax_error(number, "not a non-negative integer: '" + std::string(raw.substr(i, j - i)) + "'");
      if (value < 0) syntax_error(number, "negative value");
      line.values.push_back(value);
      i = j;
    }
    if (!line.values.empty()) lines.push_back(std::move(line));
    if (end == bytes.size()) break;
  }
  return lines;
}

ColoredSpace parse_lines(const std::vector<Line>& lines, std::size_t& cursor, int last_line) {
  if (cursor >= lines.size()) syntax_error(last_line, "missing header line 'n c'");
  const Line& header = lines[cursor++];
  if (header.values.size() != 2) syntax_error(header.number, "header must be 'n c'");
  const long n = header.values[0];
  const long c = header.values[1];
  if (n < 1 || n > kMaxPoints)
    syntax_error(header.number, "point count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxPoints));
  if (c > kMaxColors) syntax_error(header.number, "too many colors");
  std::vector<ColoredSpace::Assignment> as;
  for (int i = 0; i + 1 < n; ++i) {
    if (cursor >= lines.size())
      syntax_error(last_line, "expected " + std::to_string(n - 1) + " pair lines, found " + std::to_string(i));
    const Line& row = lines[cursor++];
    if (static_cast<long>(row.values.size()) != n - 1 - i)
      syntax_error(row.number, "row " + std::to_string(i) + " needs " + std::to_string(n - 1 - i) + " colors");
    for (int j = i + 1; j < n; ++j) {
      const long color = row.values[j - i - 1];
      if (color >= 256) syntax_error(row.number, "color too large");
      as.emplace_back(PointPair(i, j), static_cast<Color>(color));
    }
  }
  return ColoredSpace::create(static_cast<int>(n), static_cast<int>(c), as);
}

ColoredSpace parse_text(std::string_view bytes) {
  const auto lines = tokenize(bytes);
  std::size_t cursor = 0;
  const int last_line = lines.empty() ? 1 : lines.back().number;
  ColoredSpace s = parse_lines(lines, cursor, last_line);
  if (cursor != lines.size()) syntax_error(lines[cursor].number, "trailing data after last pair line");
  return s;
}

ColoredSpace parse_json(std::string_view bytes) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, std::string("json: ") + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    const int c = doc.at("colors").get<int>();
    if (n < 1 || n > kMaxPoints) throw Error(ErrorKind::SyntaxError, "json: point count out of range");
    std::vector<ColoredSpace::Assignment> as;
    for (const auto& entry : doc.at("pairs")) {
      if (!entry.is_array() || entry.size() != 3)
        throw Error(ErrorKind::SyntaxError, "json: pair entries are [i,j,color]");
      const int i = entry[0].get<int>();
      const int j = entry[1].get<int>();
      const int color = entry[2].get<int>();
      if (i < 0 || j < 0 || i >= n || j >= n)
        throw Error(ErrorKind::PointOutOfRange, "json: pair point outside 0.." + std::to_string(n - 1));
      if (i == j) throw Error(ErrorKind::SamePoint, "json: pair [" + std::to_string(i) + "," + std::to_string(j) + "]");
      if (color < 0 || color >= 256) throw Error(ErrorKind::ColorOutOfRange, "json: color " + std::to_string(color));
      as.emplace_back(PointPair(i, j), static_cast<Color>(color));
    }
    return ColoredSpace::create(n, c, as);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("json: ") + e.what());
  }
}

}  // namespace

Format detect_format(std::string_view bytes) {
  for (char ch : bytes) {
    if (ch == ' ' || ch == '\n' || ch == '\t' || ch == '\r') continue;
    return ch == '{' ? Format::Json : Format::Text;
  }
  return Format::Text;
}

ColoredSpace parse_space(std::string_view bytes, Format format) {
  return format == Format::Json ? parse_json(bytes) : parse_text(bytes);
}

std::vector<ColoredSpace> parse_space_stream(std::string_view bytes) {
  std::string filtered;
  filtered.reserve(bytes.size());
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(pos, end - pos);
    if (line.rfind("key ", 0) == 0)
      filtered += '\n';  // keep line numbers aligned
    else {
      filtered.append(line);
      filtered += '\n';
    }
    pos = end + 1;
  }
  const auto lines = tokenize(filtered);
  std::vector<ColoredSpace> out;
  std::size_t cursor = 0;
  const int last_line = lines.empty() ? 1 : lines.back().number;
  while (cursor < lines.size()) out.push_back(parse_lines(lines, cursor, last_line));
  return out;
}

std::string serialize_space(const ColoredSpace& space, Format format) {
  const int n = space.size();
  if (format == Format::Json) {
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.push_back({i, j, static_cast<int>(space.at(i, j))});
    nlohmann::ordered_json doc = {{"n", n}, {"colors", space.color_count()}, {"pairs", std::move(pairs)}};
    return doc.dump() + "\n";
  }
  std::ostringstream out;
  out << n << ' ' << space.color_count() << '\n';
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (j > i + 1) out << ' ';
      out << static_cast<int>(space.at(i, j));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cspace
