#include "betti/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "betti/generators.hpp"
#include "betti/hochster.hpp"
#include "betti/io.hpp"
#include "betti/report.hpp"
#include "betti/scan.hpp"

namespace betti {

namespace {

struct EngineFlags {
  std::string field = "gf2";
  unsigned threads = 0;
  int cap = 16;

  HochsterOptions options() const {
    HochsterOptions o;
    o.field = Field::parse(field);
    o.threads = threads;
    o.cap = cap;
    return o;
  }
};

void add_engine_flags(CLI::App* cmd, EngineFlags& flags) {
  cmd->add_option("--field", flags.field, "Coefficient field: gf2, gfP for a prime P, or qq")->capture_default_str();
  cmd->add_option("--threads", flags.threads, "Worker threads (0 = all cores)")->capture_default_str();
  cmd->add_option("--cap", flags.cap, "Largest vertex count for subset enumeration")->capture_default_str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

std::optional<std::filesystem::path> cache_path(const SimplicialComplex& complex, const HochsterOptions& options) {
  const char* dir = std::getenv("BETTI_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  std::string key = write_complex_json(complex) + options.field.name() + "|" +
                    (options.max_j ? std::to_string(*options.max_j) : std::string("all"));
  std::ostringstream name;
  name << std::hex << std::hash<std::string>{}(key) << ".csv";
  return std::filesystem::path(dir) / name.str();
}

BettiTable cached_betti(const SimplicialComplex& complex, const HochsterOptions& options) {
  const auto path = cache_path(complex, options);
  const int n = complex.num_vertices(), d = complex.dim() + 1;
  if (path && std::filesystem::exists(*path)) {
    std::ifstream in(*path, std::ios::binary);
    std::stringstream text;
    text << in.rdbuf();
    try {
      return parse_betti_csv(text.str(), n, d, options.field);
    } catch (const ParseError&) {
      // unreadable cache entries are recomputed
    }
  }
  BettiTable table = graded_betti(complex, options);
  if (path) {
    std::error_code ec;
    std::filesystem::create_directories(path->parent_path(), ec);
    std::ofstream(*path, std::ios::binary) << table.to_csv();
  }
  return table;
}

GluingPlan parse_plan(const std::string& plan, std::uint64_t seed) {
  if (plan == "path") return GluingPlan::path();
  if (plan == "star") return GluingPlan::star();
  if (plan == "random") return GluingPlan::random(seed);
  throw std::invalid_argument("unknown gluing plan '" + plan + "' (expected path, star, random)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded Betti numbers of balanced simplicial complexes and their upper bounds"};
  app.require_subcommand(1);

  // betti
  auto* betti_cmd = app.add_subcommand("betti", "Betti table of a complex via Hochster's formula");
  std::string betti_file, betti_format = "both", betti_out;
  std::optional<int> max_j;
  EngineFlags betti_flags;
  betti_cmd->add_option("file", betti_file, "Complex JSON file")->required();
  betti_cmd->add_option("--max-j", max_j, "Compute strands j <= J only");
  betti_cmd->add_option("--format", betti_format, "markdown, csv or both")
      ->check(CLI::IsMember({"markdown", "csv", "both"}))
      ->capture_default_str();
  betti_cmd->add_option("-o,--output", betti_out, "Write to this file instead of stdout");
  add_engine_flags(betti_cmd, betti_flags);

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Compare a Betti table with every applicable bound");
  std::string bounds_file, assume, bounds_out;
  bool trust = false;
  EngineFlags bounds_flags;
  bounds_cmd->add_option("file", bounds_file, "Complex JSON file")->required();
  bounds_cmd->add_option("--assume", assume, "Comma-separated hypotheses: balanced, cm, pseudomanifold")->required();
  bounds_cmd->add_flag("--trust", trust, "Skip the hypothesis checks");
  bounds_cmd->add_option("-o,--output", bounds_out, "Write the JSON report to this file");
  add_engine_flags(bounds_cmd, bounds_flags);

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "Write a complex from one of the built-in families");
  std::string family, plan = "path", gen_out;
  int gen_d = 3, gen_k = 2, gen_n = 0;
  std::vector<int> sizes;
  std::uint64_t gen_seed = 0;
  gen_cmd->add_option("family", family, "cross-stacked, stacked, clique, cone-join or cross-polytope")
      ->required()
      ->check(CLI::IsMember({"cross-stacked", "stacked", "clique", "cone-join", "cross-polytope"}));
  gen_cmd->add_option("--d", gen_d, "Dimension parameter d (the complex has dimension d-1)");
  gen_cmd->add_option("--k", gen_k, "Number of cross-polytope copies plus one (kd vertices)");
  gen_cmd->add_option("--n", gen_n, "Vertex count (stacked, cone-join)");
  gen_cmd->add_option("--sizes", sizes, "Color class sizes for clique, e.g. 3,3,2")->delimiter(',');
  gen_cmd->add_option("--plan", plan, "Gluing plan for cross-stacked: path, star or random")->capture_default_str();
  gen_cmd->add_option("--seed", gen_seed, "Seed for the random gluing plan");
  gen_cmd->add_option("-o,--output", gen_out, "Output file (stdout if omitted)");

  // conjecture-scan
  auto* scan_cmd = app.add_subcommand("conjecture-scan", "Compare sampled balanced normal pseudomanifolds with "
                                                         "stacked cross-polytopal spheres in the linear strand");
  int scan_d = 4, scan_k = 3, scan_samples = 20;
  std::uint64_t scan_seed = 1;
  std::string scan_out;
  EngineFlags scan_flags;
  scan_cmd->add_option("--d", scan_d, "Dimension parameter d")->capture_default_str();
  scan_cmd->add_option("--k", scan_k, "kd vertices")->capture_default_str();
  scan_cmd->add_option("--samples", scan_samples, "Number of samples")->capture_default_str();
  scan_cmd->add_option("--seed", scan_seed, "Seed")->capture_default_str();
  scan_cmd->add_option("-o,--output", scan_out, "Write the JSON report to this file");
  add_engine_flags(scan_cmd, scan_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (betti_cmd->parsed()) {
      const auto doc = read_complex_file(betti_file);
      auto options = betti_flags.options();
      options.max_j = max_j;
      const BettiTable table = cached_betti(doc.complex, options);
      std::string text;
      if (betti_format != "csv") text += table.to_markdown();
      if (betti_format == "both") text += "\n";
      if (betti_format != "markdown") text += table.to_csv();
      emit(text, betti_out, out);
      return kExitOk;
    }
    if (bounds_cmd->parsed()) {
      const auto doc = read_complex_file(bounds_file);
      const auto hypotheses = parse_hypotheses(assume);
      const auto report =
          make_bound_report(doc.complex, hypotheses, trust, bounds_flags.options(), std::filesystem::path(bounds_file).stem().string());
      emit(report.to_json().dump(2) + "\n", bounds_out, out);
      if (!report.applicable) {
        err << "hypothesis check failed:";
        for (const auto& h : report.failed) err << " " << h;
        err << "\n";
        return kExitHypothesis;
      }
      return kExitOk;
    }
    if (gen_cmd->parsed()) {
      nlohmann::json params;
      std::optional<SimplicialComplex> complex;
      if (family == "cross-stacked") {
        complex = stacked_cross_polytopal(gen_d, gen_k, parse_plan(plan, gen_seed));
        params = {{"d", gen_d}, {"k", gen_k}, {"plan", plan}};
      } else if (family == "stacked") {
        complex = stacked_sphere(gen_d, gen_n);
        params = {{"d", gen_d}, {"n", gen_n}};
      } else if (family == "clique") {
        if (sizes.empty()) throw std::invalid_argument("clique needs --sizes");
        complex = clique_complex_multipartite(sizes);
        params = {{"sizes", sizes}};
      } else if (family == "cone-join") {
        complex = cone_join(gen_n, gen_d);
        params = {{"n", gen_n}, {"d", gen_d}};
      } else {
        complex = cross_polytope_boundary(gen_d);
        params = {{"d", gen_d}};
      }
      const nlohmann::json meta{{"family", family}, {"params", params}, {"seed", gen_seed}};
      emit(write_complex_json(*complex, meta), gen_out, out);
      return kExitOk;
    }
    if (scan_cmd->parsed()) {
      const auto report = conjecture_scan(scan_d, scan_k, scan_samples, scan_seed, scan_flags.options());
      for (const auto& w : report.warnings) err << "warning: " << w << "\n";
      emit(report.to_json().dump(2) + "\n", scan_out, out);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ComplexError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const EmptyPool& e) {
    err << "error: " << e.what() << "\n";
    return kExitEmptyPool;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace betti
