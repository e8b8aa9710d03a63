#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "betti/binomial.hpp"
#include "betti/complex.hpp"
#include "betti/field.hpp"

namespace betti {

/// Faces grouped by dimension (index k holds the k-faces), canonical order.
/// The empty face is implicit.
using FaceLattice = std::vector<std::vector<std::uint64_t>>;

/// Matrix of the simplicial boundary map from j-faces (columns) to
/// (j-1)-faces (rows), both in canonical order. Entries are +-1; the sign of
/// dropping the t-th smallest vertex is (-1)^t. Column c lists its non-zero
/// entries as (row, sign) sorted by row.
struct BoundaryMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, int>>> columns;
};

/// Boundary map of degree j, 0 <= j <= dim + 1. Degree 0 maps every vertex to
/// the empty face.
BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int j);
BoundaryMatrix boundary_matrix(const FaceLattice& faces, int j);

/// Exact rank over the field: word-packed elimination over GF(2), modular
/// elimination over GF(p), fraction-free integer elimination over Q.
std::size_t matrix_rank(const BoundaryMatrix& matrix, const Field& field);

/// dim H~_k for k = -1, ..., top; entry k + 1 of the result. When max_degree
/// is non-negative only degrees up to it are computed and returned. The void
/// lattice (no faces at all) is treated as the complex {emptyset}.
std::vector<Count> reduced_homology_dims(const FaceLattice& faces, const Field& field, int max_degree = -1);
std::vector<Count> reduced_homology_dims(const SimplicialComplex& complex, const Field& field);

/// Reisner's criterion: every link, including the complex itself, has
/// vanishing reduced homology below its top dimension.
bool is_cohen_macaulay(const SimplicialComplex& complex, const Field& field);

}  // namespace betti
