#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "betti/bounds.hpp"
#include "betti/complex.hpp"
#include "betti/hochster.hpp"
#include "json.hpp"

namespace betti {

struct BoundEntry {
  std::string bound;
  Count value = 0;
  Count slack = 0;
};

struct BoundRow {
  int i = 0;
  int j = 0;
  Count actual = 0;
  std::vector<BoundEntry> bounds;
};

/// Actual Betti numbers against every bound whose hypotheses hold.
struct BoundReport {
  std::string complex_id;
  int n = 0;
  int d = 0;
  std::string field;
  std::vector<std::string> claimed;
  std::vector<std::string> verified;
  std::vector<std::string> failed;
  bool trusted = false;
  std::vector<std::string> bound_names;
  std::vector<BoundRow> rows;
  /// False when a claimed hypothesis failed its check; no bounds are then listed.
  bool applicable = true;
  bool pass = true;

  nlohmann::json to_json() const;
};

/// Parses "balanced,cm,pseudomanifold" (any subset, any order).
std::vector<Hypothesis> parse_hypotheses(std::string_view list);

/// Checks each claimed hypothesis unless `trust` is set, computes the Betti
/// table and compares it against the bounds the verified hypotheses allow.
BoundReport make_bound_report(const SimplicialComplex& complex, std::span<const Hypothesis> claimed, bool trust,
                              const HochsterOptions& options, std::string complex_id = "");

/// Color class sizes n_0, ..., n_{d-1} from the stored coloring.
std::vector<int> color_class_sizes(const SimplicialComplex& complex);

}  // namespace betti
