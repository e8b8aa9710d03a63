#include "betti/report.hpp"

#include <algorithm>
#include <sstream>

#include "betti/homology.hpp"

namespace betti {

std::vector<Hypothesis> parse_hypotheses(std::string_view list) {
  std::vector<Hypothesis> out;
  std::stringstream in{std::string(list)};
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    Hypothesis h;
    if (token == "balanced") {
      h = Hypothesis::kBalanced;
    } else if (token == "cm") {
      h = Hypothesis::kCohenMacaulay;
    } else if (token == "pseudomanifold") {
      h = Hypothesis::kPseudomanifold;
    } else {
      throw std::invalid_argument("unknown hypothesis '" + token + "' (expected balanced, cm, pseudomanifold)");
    }
    if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
  }
  return out;
}

std::vector<int> color_class_sizes(const SimplicialComplex& complex) {
  if (!complex.coloring()) throw ComplexError("complex has no coloring");
  std::vector<int> sizes(static_cast<std::size_t>(complex.dim() + 1), 0);
  for (int c : *complex.coloring()) {
    if (c < 0 || c >= static_cast<int>(sizes.size())) throw ComplexError("coloring uses more than dim+1 colors");
    ++sizes[static_cast<std::size_t>(c)];
  }
  return sizes;
}

namespace {

bool check(const SimplicialComplex& complex, Hypothesis h, const Field& field) {
  switch (h) {
    case Hypothesis::kBalanced: return complex.coloring().has_value() && is_balanced(complex);
    case Hypothesis::kCohenMacaulay: return is_cohen_macaulay(complex, field);
    case Hypothesis::kPseudomanifold: return is_normal_pseudomanifold(complex);
  }
  return false;
}

}  // namespace

BoundReport make_bound_report(const SimplicialComplex& complex, std::span<const Hypothesis> claimed, bool trust,
                              const HochsterOptions& options, std::string complex_id) {
  BoundReport report;
  report.complex_id = std::move(complex_id);
  report.n = complex.num_vertices();
  report.d = complex.dim() + 1;
  report.field = options.field.name();
  report.trusted = trust;

  std::vector<Hypothesis> held;
  for (Hypothesis h : claimed) {
    report.claimed.push_back(to_string(h));
    if (trust || check(complex, h, options.field)) {
      held.push_back(h);
      if (!trust) report.verified.push_back(to_string(h));
    } else {
      report.failed.push_back(to_string(h));
    }
  }
  if (!report.failed.empty()) {
    report.applicable = false;
    report.pass = false;
    return report;
  }
  auto has = [&](Hypothesis h) { return std::find(held.begin(), held.end(), h) != held.end(); };

  std::vector<BoundSpec> specs;
  std::vector<int> sizes;
  bool sizes_ok = false;
  if (has(Hypothesis::kBalanced) && complex.coloring()) {
    sizes = color_class_sizes(complex);
    sizes_ok = std::all_of(sizes.begin(), sizes.end(), [](int s) { return s >= 1; });
  }
  const int n = report.n, d = report.d;
  if (sizes_ok) specs.push_back(BoundSpec::make(BoundKind::kAnyBalanced, n, d, sizes));
  if (has(Hypothesis::kCohenMacaulay)) specs.push_back(BoundSpec::make(BoundKind::kGeneralCM, n, d));
  if (sizes_ok && has(Hypothesis::kCohenMacaulay)) {
    specs.push_back(BoundSpec::make(BoundKind::kBalancedCM, n, d, sizes));
    specs.push_back(BoundSpec::make(BoundKind::kBalancedCMLexPlusSquares, n, d, sizes));
  }
  if (has(Hypothesis::kPseudomanifold) && d >= 3) {
    specs.push_back(BoundSpec::make(BoundKind::kPseudoGeneral, n, d));
    if (has(Hypothesis::kBalanced)) specs.push_back(BoundSpec::make(BoundKind::kPseudoLinear, n, d));
  }
  for (const auto& s : specs) report.bound_names.push_back(s.name());

  const BettiTable table = graded_betti(complex, options);
  for (int j = 0; j <= d; ++j) {
    for (int i = 0; i <= n; ++i) {
      BoundRow row{i, j, table.at(i, j), {}};
      bool nonzero = row.actual != 0;
      for (const auto& s : specs) {
        std::optional<Count> value;
        try {
          value = s.evaluate(i, j);
        } catch (const std::invalid_argument&) {
          value.reset();
        }
        if (!value) continue;
        row.bounds.push_back({s.name(), *value, *value - row.actual});
        if (*value < row.actual) report.pass = false;
        nonzero = nonzero || *value != 0;
      }
      if (nonzero) report.rows.push_back(std::move(row));
    }
  }
  return report;
}

nlohmann::json BoundReport::to_json() const {
  nlohmann::json out;
  out["complex"] = complex_id;
  out["n"] = n;
  out["d"] = d;
  out["field"] = field;
  out["hypotheses"] = {{"claimed", claimed}, {"verified", verified}, {"failed", failed}, {"trusted", trusted}};
  out["bounds"] = bound_names;
  out["applicable"] = applicable;
  out["pass"] = pass;
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r{{"i", row.i}, {"j", row.j}, {"actual", row.actual}};
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& e : row.bounds) entries[e.bound] = {{"value", e.value}, {"slack", e.slack}};
    r["bounds"] = entries;
    rows_json.push_back(std::move(r));
  }
  out["rows"] = rows_json;
  return out;
}

}  // namespace betti
