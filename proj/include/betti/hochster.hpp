#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "betti/betti_table.hpp"
#include "betti/complex.hpp"
#include "betti/field.hpp"

namespace betti {

struct HochsterOptions {
  Field field = Field::gf2();
  /// Compute only strands j <= max_j.
  std::optional<int> max_j;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Largest vertex count for which all 2^n subsets are enumerated.
  int cap = 16;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// beta_{i,i+j} = sum over |W| = i+j of dim H~_{j-1}(Delta_W), with beta_{0,0} = 1.
/// Full tables are checked against the f-vector through the Hilbert series
/// before being returned.
BettiTable graded_betti(const SimplicialComplex& complex, const HochsterOptions& options = {});

/// beta_{i,i+1} for i = 0..n, from connected-component counts of induced subgraphs.
std::vector<Count> linear_strand(const SimplicialComplex& complex, const HochsterOptions& options = {});

/// sum_i (-1)^i beta_{i,m} read off the f-vector: the coefficient of t^m in
/// sum_k f_{k-1} t^k (1-t)^{n-k}. Entry m of the result, m = 0..n.
std::vector<Count> hilbert_alternating_sums(const std::vector<Count>& f_vector, int n);

}  // namespace betti
