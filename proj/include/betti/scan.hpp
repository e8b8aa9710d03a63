#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "betti/complex.hpp"
#include "betti/hochster.hpp"
#include "json.hpp"

namespace betti {

struct EmptyPool : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A balanced normal pseudomanifold drawn from the construction library.
struct PoolMember {
  std::string construction;
  SimplicialComplex complex;
};

/// Draws `samples` members on kd vertices of dimension d-1. The library holds
/// seeded random cross-polytope stackings, iterated suspensions of smaller
/// stackings, and joins of even cycles with a stacking (or nothing) filling the
/// remaining dimensions. Every member is checked to be balanced and a normal
/// pseudomanifold. Throws EmptyPool when no construction fits (k < 2 or d < 3).
std::vector<PoolMember> conjecture_pool(int d, int k, int samples, std::uint64_t seed);

struct ScanSample {
  std::string construction;
  std::vector<Count> linear;
  std::vector<Count> reference;
  /// Indices i with beta_{i,i+1} above the stacked cross-polytopal value.
  std::vector<int> violations;
  bool equal = false;
};

struct ScanReport {
  int d = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<ScanSample> samples;
  std::vector<std::string> warnings;

  int violation_count() const;
  nlohmann::json to_json() const;
};

/// Compares the linear strand of each pool member with the closed formula for
/// stacked cross-polytopal spheres on the same number of vertices.
ScanReport conjecture_scan(int d, int k, int samples, std::uint64_t seed, const HochsterOptions& options = {});

}  // namespace betti
