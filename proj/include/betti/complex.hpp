#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace betti {

inline constexpr int kMaxVertices = 63;

/// A set of vertices of [0, 63) packed into one machine word.
struct VertexSubset {
  std::uint64_t bits = 0;

  constexpr VertexSubset() = default;
  constexpr explicit VertexSubset(std::uint64_t b) : bits(b) {}

  static VertexSubset of(std::span<const int> vertices);
  static constexpr VertexSubset range(int n) {
    return VertexSubset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr int size() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool contains(int v) const { return (bits >> v) & 1U; }
  constexpr bool subset_of(VertexSubset other) const { return (bits & ~other.bits) == 0; }
  std::vector<int> vertices() const;

  constexpr VertexSubset operator|(VertexSubset o) const { return VertexSubset(bits | o.bits); }
  constexpr VertexSubset operator&(VertexSubset o) const { return VertexSubset(bits & o.bits); }
  constexpr VertexSubset minus(VertexSubset o) const { return VertexSubset(bits & ~o.bits); }
  constexpr bool operator==(const VertexSubset&) const = default;
};

/// Canonical face order: equal-size faces compare as sorted vertex tuples
/// (lexicographically); smaller faces come first.
constexpr bool canonical_less(std::uint64_t a, std::uint64_t b) {
  const int sa = std::popcount(a), sb = std::popcount(b);
  if (sa != sb) return sa < sb;
  if (a == b) return false;
  const std::uint64_t diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

struct ComplexError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Finite abstract simplicial complex on the vertex set [0, n), stored by its
/// facets. Immutable once built; the face lists are computed on first use and
/// shared between copies.
class SimplicialComplex {
 public:
  /// Validating constructor. Facets are deduplicated and reduced to the
  /// inclusion-maximal ones. A coloring, if given, must be proper on every face.
  static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets,
                                       std::optional<std::vector<int>> coloring = std::nullopt);
  static SimplicialComplex from_subsets(int n, std::vector<VertexSubset> facets,
                                        std::optional<std::vector<int>> coloring = std::nullopt);

  int num_vertices() const { return n_; }
  /// dim = max facet size - 1; the complex {emptyset} has dimension -1.
  int dim() const { return dim_; }
  bool is_pure() const;
  std::span<const VertexSubset> facets() const { return facets_; }
  const std::optional<std::vector<int>>& coloring() const { return coloring_; }
  int num_colors() const;

  /// faces_by_dim()[k] holds the k-dimensional faces in canonical order.
  const std::vector<std::vector<std::uint64_t>>& faces_by_dim() const;
  bool contains(VertexSubset face) const;

  /// (f_{-1}, f_0, ..., f_{dim}).
  std::vector<std::int64_t> f_vector() const;
  /// Alternating binomial transform of the f-vector, (h_0, ..., h_d) with d = dim + 1.
  /// Throws for impure input, since every consumer assumes purity.
  std::vector<std::int64_t> h_vector() const;

  SimplicialComplex with_coloring(std::optional<std::vector<int>> coloring) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_ && a.coloring_ == b.coloring_;
  }

 private:
  struct FaceCache;

  SimplicialComplex() = default;

  int n_ = 0;
  int dim_ = -1;
  std::vector<VertexSubset> facets_;
  std::optional<std::vector<int>> coloring_;
  std::shared_ptr<FaceCache> cache_;
};

/// All faces generated by a list of facets, grouped by dimension, canonical order.
std::vector<std::vector<std::uint64_t>> enumerate_faces(std::span<const std::uint64_t> facets);

/// Keeps only the inclusion-maximal masks, sorted canonically, deduplicated.
std::vector<std::uint64_t> maximal_sets(std::vector<std::uint64_t> sets);

// Subcomplex and product constructions. Results never carry phantom vertices:
// link and induced relabel the surviving vertices to 0..m-1 in increasing order.
SimplicialComplex skeleton(const SimplicialComplex& complex, int j);
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex link(const SimplicialComplex& complex, VertexSubset face);
SimplicialComplex induced(const SimplicialComplex& complex, VertexSubset subset);

/// Relabels the vertices in `kept` to 0..|kept|-1 preserving order.
std::uint64_t compress_mask(std::uint64_t mask, std::uint64_t kept);

// Structural predicates.
bool is_connected(const SimplicialComplex& complex);
/// Needs a stored coloring; checks colors lie in [0, dim+1) and no face is
/// hit twice by a color class.
bool is_balanced(const SimplicialComplex& complex);
bool is_normal_pseudomanifold(const SimplicialComplex& complex);

/// Searches for a proper (dim+1)-coloring of the 1-skeleton by backtracking.
std::optional<std::vector<int>> propose_coloring(const SimplicialComplex& complex);

/// Per-vertex count of neighbours, sorted. Cheap isomorphism invariant.
std::vector<int> vertex_degree_multiset(const SimplicialComplex& complex);

}  // namespace betti
