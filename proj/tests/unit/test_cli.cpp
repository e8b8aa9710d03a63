#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "betti/cli.hpp"
#include "betti/generators.hpp"
#include "betti/hochster.hpp"
#include "betti/io.hpp"
#include "doctest.h"

using namespace betti;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "balanced-betti");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto p = fs::temp_directory_path() / ("betti_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string write(const std::string& name, const SimplicialComplex& c) { return write(name, write_complex_json(c)); }

nlohmann::json json_of(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_CASE("cli generate") {
  const auto file = (scratch() / "stacked.json").string();
  auto r = run({"generate", "cross-stacked", "--d", "3", "--k", "4", "--plan", "random", "--seed", "7", "-o", file});
  REQUIRE(r.code == kExitOk);
  const auto doc = read_complex_file(file);
  CHECK(doc.complex.num_vertices() == 12);
  CHECK(doc.complex.dim() == 2);
  CHECK(is_balanced(doc.complex));
  CHECK(is_normal_pseudomanifold(doc.complex));
  CHECK(doc.meta["seed"] == 7);
  CHECK(doc.complex == stacked_cross_polytopal(3, 4, GluingPlan::random(7)));

  r = run({"generate", "clique", "--sizes", "3,3,2"});
  REQUIRE(r.code == kExitOk);
  CHECK(parse_complex_json(r.out).complex.num_vertices() == 8);
  r = run({"generate", "cone-join", "--n", "12", "--d", "4"});
  REQUIRE(r.code == kExitOk);
  CHECK(parse_complex_json(r.out).complex == cone_join(12, 4));
  CHECK(run({"generate", "stacked", "--d", "4", "--n", "12"}).code == kExitOk);
  CHECK(run({"generate", "cross-polytope", "--d", "3"}).code == kExitOk);
  CHECK(run({"generate", "stacked", "--d", "4", "--n", "3"}).code == kExitParse);
  CHECK(run({"generate", "torus"}).code == kExitParse);
  CHECK(run({"generate", "cross-stacked", "--plan", "zigzag"}).code == kExitParse);
}

TEST_CASE("cli betti") {
  const auto octahedron = write("octahedron.json", cross_polytope_boundary(3));
  auto r = run({"betti", octahedron, "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out == "i,j,beta\n0,0,1\n1,1,3\n2,2,3\n3,3,1\n");
  r = run({"betti", octahedron});
  CHECK(r.out.find("| j \\ i |") != std::string::npos);
  CHECK(r.out.find("i,j,beta") != std::string::npos);

  const auto sphere = write("st.json", stacked_cross_polytopal(4, 3, GluingPlan::path()));
  const auto one = run({"betti", sphere, "--threads", "1"});
  const auto four = run({"betti", sphere, "--threads", "4", "--field", "qq"});
  CHECK(one.code == kExitOk);
  CHECK(one.out == four.out);
  CHECK(one.out.find("| 1 | 0 | 24 | 80 | 116 | 88 | 36 | 8 | 1 | 0 |") != std::string::npos);

  CHECK(run({"betti", write("bad.json", "{\"n\": 3, \"facets\": [[0,1]")}).code == kExitParse);
  CHECK(run({"betti", (scratch() / "missing.json").string()}).code == kExitParse);
  CHECK(run({"betti", octahedron, "--field", "gf4"}).code == kExitParse);
  CHECK(run({"betti", octahedron, "--bogus"}).code == kExitParse);
  const auto big = write("big.json", clique_complex_multipartite(std::vector<int>{3, 3, 3, 3, 3, 3}));
  CHECK(run({"betti", big}).code == kExitCap);
  CHECK(run({"betti", octahedron, "--cap", "4"}).code == kExitCap);
  CHECK(run({}).code == kExitParse);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("cli betti cache") {
  const auto cache = scratch() / "cache";
  ::setenv("BETTI_CACHE_DIR", cache.c_str(), 1);
  const auto file = write("cache_me.json", stacked_cross_polytopal(3, 3, GluingPlan::star()));
  const auto first = run({"betti", file});
  CHECK(fs::exists(cache));
  CHECK(std::distance(fs::directory_iterator(cache), fs::directory_iterator{}) == 1);
  const auto second = run({"betti", file});
  CHECK(first.out == second.out);
  ::unsetenv("BETTI_CACHE_DIR");
  CHECK(run({"betti", file}).out == first.out);
}

TEST_CASE("cli bounds") {
  const auto gamma = write("k3333.json", clique_complex_multipartite(std::vector<int>{3, 3, 3, 3}));
  auto r = run({"bounds", gamma, "--assume", "balanced,cm"});
  REQUIRE(r.code == kExitOk);
  auto report = json_of(r.out);
  CHECK(report["pass"] == true);
  CHECK(report["hypotheses"]["verified"].size() == 2);
  for (const auto& row : report["rows"]) {
    for (const auto& [name, entry] : row["bounds"].items()) CHECK(entry["slack"].get<long long>() >= 0);
    if (row["j"] == 4) CHECK(row["bounds"]["any_balanced"]["slack"] == 0);
  }

  const auto stacked = write("stacked.json", stacked_sphere(4, 12));
  r = run({"bounds", stacked, "--assume", "pseudomanifold"});
  REQUIRE(r.code == kExitOk);
  report = json_of(r.out);
  int linear_rows = 0;
  for (const auto& row : report["rows"]) {
    if (row["j"] != 1) continue;
    ++linear_rows;
    CHECK(row["bounds"]["pseudo_general"]["slack"] == 0);
  }
  CHECK(linear_rows == 7);

  const auto impure = write("impure.json", R"({"n": 5, "facets": [[0,1],[1,2],[2,3],[0,3],[4]]})");
  r = run({"bounds", impure, "--assume", "cm"});
  CHECK(r.code == kExitHypothesis);
  CHECK(json_of(r.out)["applicable"] == false);
  CHECK(run({"bounds", impure, "--assume", "cm", "--trust"}).code == kExitOk);
  CHECK(run({"bounds", stacked, "--assume", "balanced"}).code == kExitHypothesis);
  CHECK(run({"bounds", stacked, "--assume", "smooth"}).code == kExitParse);
}

TEST_CASE("cli conjecture scan") {
  auto r = run({"conjecture-scan", "--d", "4", "--k", "3", "--samples", "6", "--seed", "1"});
  REQUIRE(r.code == kExitOk);
  const auto report = json_of(r.out);
  CHECK(report["samples"].size() == 6);
  CHECK(report["violations"] == 0);
  CHECK(r.err.empty());
  CHECK(run({"conjecture-scan", "--d", "4", "--k", "3", "--samples", "6", "--seed", "1"}).out == r.out);

  r = run({"conjecture-scan", "--d", "3", "--k", "4", "--samples", "3", "--seed", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(run({"conjecture-scan", "--d", "4", "--k", "1", "--samples", "2"}).code == kExitEmptyPool);
  CHECK(run({"conjecture-scan", "--d", "2", "--k", "3", "--samples", "2"}).code == kExitEmptyPool);
}
