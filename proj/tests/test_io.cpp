#include <doctest.h>

#include "cspace/examples.hpp"
#include "cspace/io.hpp"

using namespace cspace;

TEST_CASE("text round trip") {
  for (const auto& s : {examples::octahedron(), examples::hexagon(), examples::rainbow(5),
                        examples::family_edge_apex(9)}) {
    const auto text = serialize_space(s, Format::Text);
    CHECK(parse_space(text, Format::Text) == s);
    const auto json = serialize_space(s, Format::Json);
    CHECK(detect_format(json) == Format::Json);
    CHECK(detect_format(text) == Format::Text);
    CHECK(parse_space(json, Format::Json) == s);
  }
}

TEST_CASE("text format layout") {
  const auto text = serialize_space(examples::hexagon(), Format::Text);
  CHECK(text.substr(0, 4) == "6 3\n");
  const auto s = parse_space("# triangle\n3 2\n0 1   # row 0\n\n0\n", Format::Text);
  CHECK(s.color_of(0, 2) == 1);
  CHECK(s.color_of(1, 2) == 0);
}

TEST_CASE("syntax errors carry a line number") {
  try {
    parse_space("3 2\n0 x\n0\n", Format::Text);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_space("{\"n\":3", Format::Json), Error);
  try {
    parse_space("3 2\n0 0\n0\n", Format::Text);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnusedColor);
  }
}

TEST_CASE("record streams skip key lines") {
  const std::string stream = "key 00\n2 1\n0\nkey 0001\n3 2\n0 1\n0\n";
  const auto spaces = parse_space_stream(stream);
  REQUIRE(spaces.size() == 2);
  CHECK(spaces[0].size() == 2);
  CHECK(spaces[1].color_count() == 2);
}
