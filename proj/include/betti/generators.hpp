#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "betti/complex.hpp"

namespace betti {

/// Clique complex of the complete multipartite graph K_{n_1,...,n_d}, i.e. the
/// join of d point sets. Vertices are numbered class by class; class l gets color l.
SimplicialComplex clique_complex_multipartite(std::span<const int> class_sizes);

/// Boundary of the d-dimensional cross-polytope. Pair i is {2i, 2i+1}, color i.
SimplicialComplex cross_polytope_boundary(int d);

/// n isolated vertices, all of color 0.
SimplicialComplex point_set(int n);

/// Full simplex on n vertices with colors 0..n-1.
SimplicialComplex full_simplex(int n);

/// Cycle of length `length`; colored alternately when the length is even.
SimplicialComplex cycle(int length);

/// Join of a (d-2)-simplex with n-d+1 isolated vertices. The isolated vertices
/// are 0..n-d and share the last color; the simplex carries colors 0..d-2.
SimplicialComplex cone_join(int n, int d);

/// Two-point suspension.
SimplicialComplex suspension(const SimplicialComplex& complex);

/// Glues `b` onto `a` along facets fa, fb, identifying v with phi(v).
/// `phi` lists pairs (vertex of fa, vertex of fb). Vertices of `a` keep their
/// labels; the remaining vertices of `b` are appended in increasing order.
/// When both inputs are colored, phi must preserve colors.
SimplicialComplex connected_sum(const SimplicialComplex& a, VertexSubset fa, const SimplicialComplex& b,
                                VertexSubset fb, std::span<const std::pair<int, int>> phi);

/// Choices made while stacking cross-polytopes.
///  - kPath glues each new copy onto the facet made of the previous copy's new vertices.
///  - kStar glues every copy onto the first copy, using its facets in canonical order.
///  - kRandom draws a gluing facet uniformly from the current facets (seeded).
///  - kExplicit uses `sites` in order; every site must be a facet at its step.
struct GluingPlan {
  enum class Strategy { kPath, kStar, kRandom, kExplicit };

  Strategy strategy = Strategy::kPath;
  std::uint64_t seed = 0;
  std::vector<VertexSubset> sites;

  static GluingPlan path() { return {Strategy::kPath, 0, {}}; }
  static GluingPlan star() { return {Strategy::kStar, 0, {}}; }
  static GluingPlan random(std::uint64_t seed) { return {Strategy::kRandom, seed, {}}; }
  static GluingPlan explicit_sites(std::vector<VertexSubset> sites) {
    return {Strategy::kExplicit, 0, std::move(sites)};
  }
};

/// Connected sum of k-1 copies of the d-cross-polytope boundary (kd vertices),
/// glued color-compatibly. Copy 1 uses the labelling of cross_polytope_boundary;
/// each later copy appends d new vertices ordered by color.
SimplicialComplex stacked_cross_polytopal(int d, int k, const GluingPlan& plan);

/// Stacked (d-1)-sphere on n vertices: repeatedly subdivide the canonically
/// first facet of the boundary of the d-simplex.
SimplicialComplex stacked_sphere(int d, int n);

}  // namespace betti
