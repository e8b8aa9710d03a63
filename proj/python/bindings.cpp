#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "betti/bounds.hpp"
#include "betti/generators.hpp"
#include "betti/hochster.hpp"
#include "betti/io.hpp"
#include "betti/lex.hpp"
#include "betti/report.hpp"
#include "betti/scan.hpp"

namespace py = pybind11;
using namespace betti;

namespace {

HochsterOptions options(const std::string& field, std::optional<int> max_j, unsigned threads, int cap) {
  HochsterOptions o;
  o.field = Field::parse(field);
  o.max_j = max_j;
  o.threads = threads;
  o.cap = cap;
  return o;
}

std::vector<std::vector<Count>> rows(const BettiTable& table) {
  std::vector<std::vector<Count>> out;
  for (int j = 0; j <= table.d(); ++j) out.push_back(table.row(j));
  return out;
}

GluingPlan plan_from(const std::string& name, std::uint64_t seed) {
  if (name == "path") return GluingPlan::path();
  if (name == "star") return GluingPlan::star();
  if (name == "random") return GluingPlan::random(seed);
  throw std::invalid_argument("unknown gluing plan '" + name + "'");
}

BoundKind kind_from(const std::string& name) {
  for (auto kind : {BoundKind::kAnyBalanced, BoundKind::kGeneralCM, BoundKind::kBalancedCM,
                    BoundKind::kBalancedCMLexPlusSquares, BoundKind::kPseudoLinear, BoundKind::kPseudoGeneral}) {
    if (BoundSpec{kind, 0, 0, {}}.name() == name) return kind;
  }
  throw std::invalid_argument("unknown bound '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graded Betti numbers of Stanley-Reisner rings and their upper bounds";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded");
  py::register_exception<EmptyPool>(m, "EmptyPool");

  m.def(
      "graded_betti",
      [](const std::string& complex_json, const std::string& field, std::optional<int> max_j, unsigned threads,
         int cap) {
        const auto doc = parse_complex_json(complex_json);
        py::gil_scoped_release release;
        return rows(graded_betti(doc.complex, options(field, max_j, threads, cap)));
      },
      py::arg("complex_json"), py::arg("field") = "gf2", py::arg("max_j") = py::none(), py::arg("threads") = 0,
      py::arg("cap") = 16, "Rows beta_{i,i+j} for j = 0..d, each indexed by i = 0..n.");

  m.def(
      "bound_report",
      [](const std::string& complex_json, const std::string& assume, bool trust, const std::string& field) {
        const auto doc = parse_complex_json(complex_json);
        const auto claimed = parse_hypotheses(assume);
        py::gil_scoped_release release;
        return make_bound_report(doc.complex, claimed, trust, options(field, std::nullopt, 0, 16)).to_json().dump();
      },
      py::arg("complex_json"), py::arg("assume"), py::arg("trust") = false, py::arg("field") = "gf2");

  m.def(
      "bound",
      [](const std::string& name, int n, int d, std::vector<int> class_sizes, int i, int j) {
        return BoundSpec::make(kind_from(name), n, d, std::move(class_sizes)).evaluate(i, j);
      },
      py::arg("name"), py::arg("n"), py::arg("d"), py::arg("class_sizes") = std::vector<int>{}, py::arg("i"),
      py::arg("j"));

  m.def(
      "cross_stacked_closed",
      [](int k, int d) { return rows(cross_stacked_closed_table(k, d)); }, py::arg("k"), py::arg("d"));

  m.def("bth_largest_deg2", &bth_largest_deg2, py::arg("m"), py::arg("b"));
  m.def("bth_largest_sqfree_deg2", &bth_largest_sqfree_deg2, py::arg("m"), py::arg("b"));

  m.def(
      "clique_multipartite",
      [](const std::vector<int>& sizes) { return write_complex_json(clique_complex_multipartite(sizes)); },
      py::arg("sizes"));
  m.def(
      "cross_polytope", [](int d) { return write_complex_json(cross_polytope_boundary(d)); }, py::arg("d"));
  m.def(
      "stacked_cross_polytopal",
      [](int d, int k, const std::string& plan, std::uint64_t seed) {
        return write_complex_json(stacked_cross_polytopal(d, k, plan_from(plan, seed)));
      },
      py::arg("d"), py::arg("k"), py::arg("plan") = "path", py::arg("seed") = 0);
  m.def(
      "stacked_sphere", [](int d, int n) { return write_complex_json(stacked_sphere(d, n)); }, py::arg("d"),
      py::arg("n"));
  m.def(
      "cone_join", [](int n, int d) { return write_complex_json(cone_join(n, d)); }, py::arg("n"), py::arg("d"));

  m.def(
      "conjecture_scan",
      [](int d, int k, int samples, std::uint64_t seed) {
        py::gil_scoped_release release;
        return conjecture_scan(d, k, samples, seed).to_json().dump();
      },
      py::arg("d"), py::arg("k"), py::arg("samples") = 8, py::arg("seed") = 0);
}
