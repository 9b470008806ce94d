#include "cspace/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cspace/enumerate.hpp"
#include "cspace/examples.hpp"
#include "cspace/fusion.hpp"
#include "cspace/io.hpp"
#include "cspace/isometry.hpp"
#include "cspace/structure.hpp"
#include "cspace/verify.hpp"

namespace cspace::cli {

namespace {

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string output_dir;
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> max_seconds;
};

Format out_format(const Options& o) { return o.format == "json" ? Format::Json : Format::Text; }

// Usage problems found after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ColoredSpace read_space(const std::string& path, std::istream& in) {
  std::string bytes;
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    bytes = ss.str();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    bytes = ss.str();
  }
  try {
    return parse_space(bytes, detect_format(bytes));
  } catch (const Error& e) {
    throw Error(e.kind(), (path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

std::string color_list(const ColorSet& s) {
  std::string out;
  for (Color c : s.members()) out += (out.empty() ? "" : ",") + std::to_string(c);
  return out.empty() ? "-" : out;
}

nlohmann::ordered_json color_array(const ColorSet& s) {
  auto a = nlohmann::ordered_json::array();
  for (Color c : s.members()) a.push_back(int(c));
  return a;
}

int cmd_seq(const Options& o, const std::string& input, std::istream& in, std::ostream& out) {
  const auto s = read_space(input, in);
  const auto seq = isometric_sequence(s, Exec{o.jobs});
  const auto a3 = s.size() >= 3 ? a3_set(s) : TriangleTypeSet{};
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = s.size();
    j["colors"] = s.color_count();
    j["sequence"] = seq.values;
    j["unimodal"] = seq.unimodal();
    auto& t = j["a3_set"] = nlohmann::ordered_json::array();
    for (const auto& ty : a3.members()) t.push_back({int(ty.colors[0]), int(ty.colors[1]), int(ty.colors[2])});
    auto& m = j["m"] = nlohmann::ordered_json::array();
    for (int k = 1; k <= s.size(); ++k) {
      const auto st = m_stats(s, k);
      m.push_back({{"k", k}, {"m", st.count}, {"colors", color_array(st.colors)}});
    }
    out << j.dump(2) << "\n";
  } else {
    out << "n " << s.size() << "\n";
    out << "colors " << s.color_count() << "\n";
    out << "sequence " << seq.to_string() << "\n";
    out << "unimodal " << (seq.unimodal() ? "yes" : "no") << "\n";
    out << "a2 " << (s.size() >= 2 ? seq[2] : 0) << "\n";
    out << "a3 " << (s.size() >= 3 ? seq[3] : 0) << "\n";
    out << "A3 " << a3.to_string() << "\n";
    for (int k = 1; k <= s.size(); ++k) {
      const auto st = m_stats(s, k);
      out << "M_" << k << " " << st.count << " " << color_list(st.colors) << "\n";
    }
  }
  return kExitOk;
}

int cmd_classify(const Options& o, const std::string& input, std::istream& in, std::ostream& out) {
  const auto s = read_space(input, in);
  const auto matches = classify_theorem1(s);
  const int a3 = a3_count(s);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = s.size();
    j["a2"] = s.color_count();
    j["a3"] = a3;
    auto& ms = j["matches"] = nlohmann::ordered_json::array();
    for (const auto& m : matches) ms.push_back(nlohmann::ordered_json::parse(to_json(m).dump()));
    out << j.dump(2) << "\n";
  } else {
    out << "a2 " << s.color_count() << "\n" << "a3 " << a3 << "\n";
    out << "matches " << matches.size() << "\n";
    for (const auto& m : matches) out << pattern_name(m) << " " << to_json(m).dump() << "\n";
  }
  return kExitOk;
}

int cmd_lemmas(const Options& o, const std::string& input, std::istream& in, std::ostream& out) {
  const auto s = read_space(input, in);
  bool violated = false;
  for (const auto& r : check_all_lemmas(s)) {
    violated |= r.violated();
    if (o.format == "json") out << to_json(r).dump() << "\n";
    else
      out << std::left << std::setw(20) << r.lemma_id
          << (!r.applicable ? "n/a" : r.holds ? "holds" : "FAILS") << (r.witness.empty() ? "" : "  " + r.witness)
          << "\n";
  }
  return violated ? kExitViolations : kExitOk;
}

int cmd_fuse(const Options& o, const std::string& input, bool find, bool chain, const std::string& map_text,
             std::istream& in, std::ostream& out) {
  const auto s = read_space(input, in);
  if (int(find) + int(chain) + int(!map_text.empty()) != 1)
    throw UsageError("fuse needs exactly one of --find, --chain, --map");
  if (!map_text.empty()) {
    const auto fused = apply_fusion(s, FusionMap::parse(map_text));
    out << serialize_space(fused, out_format(o));
    return kExitOk;
  }
  if (chain) {
    const auto c = fusion_chain(s);
    if (o.format == "json") out << to_json(c).dump(2) << "\n";
    else {
      for (const auto& st : c.steps)
        out << st.rule << " " << st.map.to_string() << "  a2 " << st.a2_before << "->" << st.a2_after << "  a3 "
            << st.a3_before << "->" << st.a3_after << "\n";
      out << (c.falsified ? "falsified" : "terminus a2 <= a3") << "\n";
    }
    return c.falsified || c.counterexample ? kExitViolations : kExitOk;
  }
  const int m2 = m_stats(s, 2).count;
  const auto res = m2 > 0 ? find_reducing_fusion(s) : find_matching_fusion(s);
  const char* finder = m2 > 0 ? "reducing" : "matching";
  if (const auto* f = std::get_if<FoundFusion>(&res)) {
    if (o.format == "json") {
      nlohmann::ordered_json j;
      j["finder"] = finder;
      j["map"] = f->map.image();
      j["a2"] = {f->a2_before, f->a2_after};
      j["a3"] = {f->a3_before, f->a3_after};
      j["proof_guided"] = f->proof_guided;
      j["space"] = nlohmann::ordered_json::parse(serialize_space(apply_fusion(s, f->map), Format::Json));
      out << j.dump(2) << "\n";
    } else {
      out << "finder " << finder << "\n" << "map " << f->map.to_string() << "\n";
      out << "a2 " << f->a2_before << " -> " << f->a2_after << "\n";
      out << "a3 " << f->a3_before << " -> " << f->a3_after << "\n";
      out << serialize_space(apply_fusion(s, f->map), Format::Text);
    }
    return kExitOk;
  }
  out << to_json(std::get<CounterexampleToLemma>(res)).dump(2) << "\n";
  return kExitViolations;
}

struct EnumArgs {
  int n = 0;
  std::optional<int> max_colors, max_a3, exact_colors;
  std::string predicate = "none";
  std::string checkpoint;
  std::string resume;
};

int cmd_enumerate(const Options& o, const EnumArgs& a, std::ostream& out, std::ostream& err) {
  EnumerationConstraints cons;
  cons.n_target = a.n;
  cons.max_colors = a.max_colors;
  cons.max_a3 = a.max_a3;
  cons.exact_colors = a.exact_colors;
  cons.predicate = parse_predicate(a.predicate);
  EnumerationOptions opt;
  opt.exec = Exec{o.jobs};
  opt.budget = Budget{o.max_nodes, o.max_seconds};
  auto save = [&](const Frontier& f) {
    if (a.checkpoint.empty()) return;
    const auto tmp = a.checkpoint + ".tmp";
    {
      std::ofstream f_out(tmp);
      f_out << checkpoint_to_json(f).dump() << "\n";
    }
    std::filesystem::rename(tmp, a.checkpoint);
  };
  opt.on_level = save;
  if (!a.resume.empty()) {
    std::ifstream f(a.resume);
    if (!f) throw UsageError("cannot open checkpoint '" + a.resume + "'");
    opt.resume = checkpoint_from_json(nlohmann::json::parse(f));
  }
  std::vector<ColoredSpace> spaces;
  try {
    spaces = enumerate_classes(cons, opt);
  } catch (const BudgetExceededError& e) {
    save(e.frontier());
    err << "cspace: " << e.what();
    if (!a.checkpoint.empty()) err << "; resume with --resume " << a.checkpoint;
    err << "\n";
    return kExitBudget;
  }
  if (o.format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : spaces)
      arr.push_back({{"key", isomorphism_key(s).hex()},
                     {"space", nlohmann::ordered_json::parse(serialize_space(s, Format::Json))}});
    out << arr.dump() << "\n";
  } else {
    for (const auto& s : spaces) out << "key " << isomorphism_key(s).hex() << "\n" << serialize_space(s, Format::Text);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, const std::string& job, int n, const std::string& mode, VerifyConfig cfg,
               std::ostream& out, std::ostream& err) {
  cfg.exec = Exec{o.jobs};
  cfg.seed = o.seed;
  cfg.budget = Budget{o.max_nodes, o.max_seconds};
  const auto report = run_job(job, n, mode, cfg);
  const auto doc = report.to_json();
  if (o.format == "json") out << doc.dump(2) << "\n";
  else out << report.summary();
  if (!o.output_dir.empty()) {
    std::filesystem::create_directories(o.output_dir);
    const auto path = std::filesystem::path(o.output_dir) / (job + "-" + report.fingerprint + ".json");
    std::ofstream f(path);
    f << doc.dump(2) << "\n";
  }
  err << "elapsed " << std::fixed << std::setprecision(2) << report.elapsed_seconds << " s\n";
  return report.exit_code();
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite colored spaces: isometric sequences, closed sets, fusions, enumeration."};
  app.name("cspace");
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");

  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("CSPACE_FORMAT");
  app.add_option("--seed", o.seed, "Seed for every randomized path")->envname("CSPACE_SEED");
  app.add_option("--jobs", o.jobs, "Worker threads (1 = serial reference path, 0 = all)")
      ->check(CLI::NonNegativeNumber)
      ->envname("CSPACE_JOBS");
  app.add_option("--output-dir", o.output_dir, "Directory for report files")->envname("CSPACE_OUTPUT_DIR");
  app.add_option("--max-nodes", o.max_nodes, "Search-node budget")->envname("CSPACE_MAX_NODES");
  app.add_option("--max-seconds", o.max_seconds, "Wall-clock budget")->envname("CSPACE_MAX_SECONDS");

  std::string input = "-";
  auto* seq = app.add_subcommand("seq", "Isometric sequence, A_3 and M_k table of a space");
  seq->add_option("input", input, "Space file, - for stdin");
  auto* classify = app.add_subcommand("classify", "Partition patterns realized by a space");
  classify->add_option("input", input, "Space file, - for stdin");
  auto* lemmas = app.add_subcommand("lemmas", "Run every lemma checker on a space");
  lemmas->add_option("input", input, "Space file, - for stdin");

  bool find = false, chain = false;
  std::string map_text;
  auto* fuse = app.add_subcommand("fuse", "Find or apply a fusion");
  fuse->add_option("input", input, "Space file, - for stdin");
  fuse->add_flag("--find", find, "Run the finder selected by m_2");
  fuse->add_flag("--chain", chain, "Run the fusion chain down to a_2 <= 3");
  fuse->add_option("--map", map_text, "Apply an explicit map \"[t0,t1,...]\"");

  EnumArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Isomorph-free generation");
  enumerate->add_option("--n", ea.n, "Number of points")->required();
  enumerate->add_option("--max-colors", ea.max_colors, "Color cap");
  enumerate->add_option("--max-a3", ea.max_a3, "Cap on |A_3|");
  enumerate->add_option("--exact-colors", ea.exact_colors, "Keep only spaces with this many colors");
  enumerate->add_option("--predicate", ea.predicate, "Extra hereditary filter")
      ->check(CLI::IsMember({"none", "no-rainbow-triangle", "all-matchings"}));
  enumerate->add_option("--checkpoint", ea.checkpoint, "Write a checkpoint after every level");
  enumerate->add_option("--resume", ea.resume, "Resume from a checkpoint");

  std::string job, mode = "full";
  int vn = 5;
  VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "Batch verification job");
  verify->add_option("job", job, "a2le3 | classify | lemmas | fusion | keys")
      ->required()
      ->check(CLI::IsMember({"a2le3", "classify", "lemmas", "fusion", "keys"}));
  verify->add_option("--n", vn, "Point count (upper end for classify)");
  verify->add_option("--mode", mode, "Universe")->check(CLI::IsMember({"full", "constrained", "sampled"}));
  verify->add_option("--samples", vc.samples, "Sample count for sampled universes");
  verify->add_option("--space-samples", vc.space_samples, "Space pairs for the keys job");
  verify->add_option("--max-colors", vc.max_colors, "Color cap for constrained universes");
  verify->add_flag("--allow-slow", vc.allow_slow, "Permit the n=6 full sweep");
  verify->add_option("--checkpoint", vc.checkpoint, "Progress file for full sweeps");

  std::string gen_name;
  int gen_n = 6;
  auto* gen = app.add_subcommand("gen", "Emit a named construction");
  gen->add_option("name", gen_name, "Construction name")->required();
  gen->add_option("--n", gen_n, "Size for the sized families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cspace: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*seq) return cmd_seq(o, input, in, out);
    if (*classify) return cmd_classify(o, input, in, out);
    if (*lemmas) return cmd_lemmas(o, input, in, out);
    if (*fuse) return cmd_fuse(o, input, find, chain, map_text, in, out);
    if (*enumerate) return cmd_enumerate(o, ea, out, err);
    if (*verify) return cmd_verify(o, job, vn, mode, vc, out, err);
    if (*gen) {
      out << serialize_space(examples::by_name(gen_name, gen_n), out_format(o));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "cspace: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceededError& e) {
    err << "cspace: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "cspace: " << e.what() << "\n";
    return e.kind() == ErrorKind::BudgetExceeded ? kExitBudget : kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    err << "cspace: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace cspace::cli
