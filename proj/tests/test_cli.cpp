#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cspace/cli.hpp"
#include "cspace/io.hpp"

using namespace cspace;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "cspace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen piped into seq") {
  const auto oct = run({"gen", "octahedron"});
  REQUIRE(oct.code == 0);
  const auto seq = run({"seq", "-"}, oct.out);
  CHECK(seq.code == 0);
  CHECK(seq.out.find("sequence 1,2,2,2,1,1") != std::string::npos);

  const auto hex = run({"--format", "json", "gen", "hexagon"});
  CHECK(run({"seq", "-"}, hex.out).out.find("sequence 1,3,3,3,1,1") != std::string::npos);

  const auto apex = run({"gen", "edge-apex", "--n", "9"});
  const auto s = run({"--format", "json", "seq", "-"}, apex.out);
  const auto j = nlohmann::json::parse(s.out);
  CHECK(j["sequence"][1] == 4);
  CHECK(j["sequence"][2] == 4);
}

TEST_CASE("round trip through both formats") {
  const auto text = run({"gen", "triangles-marked-edge"}).out;
  const auto json = run({"--format", "json", "fuse", "--map", "[0,1,2,3]", "-"}, text).out;
  CHECK(parse_space(json, Format::Json) == parse_space(text, Format::Text));
}

TEST_CASE("enumerate prints one record per class") {
  const auto r = run({"enumerate", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(parse_space_stream(r.out).size() == 3);
  const auto serial = run({"--jobs", "1", "enumerate", "--n", "5", "--max-a3", "4"});
  const auto par = run({"--jobs", "3", "enumerate", "--n", "5", "--max-a3", "4"});
  CHECK(serial.out == par.out);
}

TEST_CASE("exit codes") {
  CHECK(run({"seq", "-"}, "3 2\n0 x\n0\n").code == cli::kExitDomain);
  CHECK(run({"seq", "-"}, "3 2\n0 x\n0\n").err.find("SyntaxError") != std::string::npos);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"seq", "/nonexistent/file"}).code == cli::kExitUsage);
  CHECK(run({"--format", "xml", "gen", "hexagon"}).code == cli::kExitUsage);
  CHECK(run({"verify", "a2le3", "--n", "5", "--mode", "full"}).code == cli::kExitOk);
  CHECK(run({"verify", "a2le3", "--n", "4", "--mode", "full"}).code == cli::kExitOk);
  CHECK(run({"--max-nodes", "100", "enumerate", "--n", "6"}).code == cli::kExitBudget);
  CHECK(run({"gen", "rainbow", "--n", "1"}).code == cli::kExitDomain);
}

TEST_CASE("fuse --find picks the finder from m_2") {
  const auto hex = run({"gen", "hexagon"}).out;
  const auto r = run({"fuse", "--find", "-"}, hex);
  CHECK(r.code == 0);
  CHECK(r.out.find("finder reducing") != std::string::npos);
  CHECK(run({"fuse", "-"}, hex).code == cli::kExitUsage);
  const auto chain = run({"fuse", "--chain", "-"}, run({"gen", "rainbow", "--n", "6"}).out);
  CHECK(chain.code == 0);
}

TEST_CASE("classify and lemmas") {
  const auto apex = run({"gen", "edge-apex", "--n", "10"}).out;
  const auto r = run({"classify", "-"}, apex);
  CHECK(r.out.find("edge-apex") != std::string::npos);
  CHECK(run({"lemmas", "-"}, apex).code == 0);
}
