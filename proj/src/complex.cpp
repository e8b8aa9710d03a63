#include "betti/complex.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_set>

namespace betti {

struct SimplicialComplex::FaceCache {
  std::once_flag once;
  std::vector<std::vector<std::uint64_t>> faces;
};

VertexSubset VertexSubset::of(std::span<const int> vertices) {
  std::uint64_t bits = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw ComplexError("vertex index out of range");
    bits |= std::uint64_t{1} << v;
  }
  return VertexSubset(bits);
}

std::vector<int> VertexSubset::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::uint64_t compress_mask(std::uint64_t mask, std::uint64_t kept) {
  std::uint64_t out = 0;
  int pos = 0;
  for (std::uint64_t k = kept; k != 0; k &= k - 1, ++pos) {
    if (mask & k & (~k + 1)) out |= std::uint64_t{1} << pos;
  }
  return out;
}

std::vector<std::uint64_t> maximal_sets(std::vector<std::uint64_t> sets) {
  // Larger sets first so that each candidate only needs checking against kept ones.
  std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) { return canonical_less(b, a); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::uint64_t> kept;
  for (std::uint64_t s : sets) {
    bool covered = false;
    for (std::uint64_t k : kept) {
      if ((s & ~k) == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), canonical_less);
  return kept;
}

std::vector<std::vector<std::uint64_t>> enumerate_faces(std::span<const std::uint64_t> facets) {
  int top = -1;
  for (std::uint64_t f : facets) top = std::max(top, std::popcount(f) - 1);
  std::vector<std::vector<std::uint64_t>> by_dim(static_cast<std::size_t>(top + 1));
  if (top < 0) return by_dim;

  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t facet : facets) {
    // Walk every non-empty submask of the facet.
    for (std::uint64_t sub = facet; sub != 0; sub = (sub - 1) & facet) {
      if (seen.insert(sub).second) by_dim[static_cast<std::size_t>(std::popcount(sub) - 1)].push_back(sub);
    }
  }
  for (auto& layer : by_dim) std::sort(layer.begin(), layer.end(), canonical_less);
  return by_dim;
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<std::vector<int>>& facets,
                                                 std::optional<std::vector<int>> coloring) {
  if (n < 0 || n > kMaxVertices) throw ComplexError("vertex count must lie in [0, 63]");
  std::vector<VertexSubset> masks;
  masks.reserve(facets.size());
  for (const auto& facet : facets) {
    std::uint64_t bits = 0;
    for (int v : facet) {
      if (v < 0 || v >= n) {
        std::ostringstream msg;
        msg << "vertex " << v << " outside [0, " << n << ")";
        throw ComplexError(msg.str());
      }
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (bits & bit) {
        std::ostringstream msg;
        msg << "vertex " << v << " repeated within one facet";
        throw ComplexError(msg.str());
      }
      bits |= bit;
    }
    masks.emplace_back(bits);
  }
  return from_subsets(n, std::move(masks), std::move(coloring));
}

SimplicialComplex SimplicialComplex::from_subsets(int n, std::vector<VertexSubset> facets,
                                                  std::optional<std::vector<int>> coloring) {
  if (n < 0 || n > kMaxVertices) throw ComplexError("vertex count must lie in [0, 63]");
  if (facets.empty()) throw ComplexError("facet list is empty");
  const VertexSubset all = VertexSubset::range(n);
  std::vector<std::uint64_t> raw;
  raw.reserve(facets.size());
  std::uint64_t covered = 0;
  for (VertexSubset f : facets) {
    if (!f.subset_of(all)) throw ComplexError("facet uses a vertex outside [0, n)");
    raw.push_back(f.bits);
    covered |= f.bits;
  }
  if (covered != all.bits) {
    throw ComplexError("vertex " + std::to_string(std::countr_zero(~covered & all.bits)) +
                       " appears in no facet");
  }
  raw = maximal_sets(std::move(raw));

  SimplicialComplex out;
  out.n_ = n;
  for (std::uint64_t f : raw) {
    out.facets_.emplace_back(f);
    out.dim_ = std::max(out.dim_, std::popcount(f) - 1);
  }

  if (coloring) {
    if (static_cast<int>(coloring->size()) != n) throw ComplexError("coloring length differs from vertex count");
    for (int c : *coloring) {
      if (c < 0) throw ComplexError("negative color");
    }
    for (VertexSubset f : out.facets_) {
      std::uint64_t seen = 0;
      for (int v : f.vertices()) {
        const int c = (*coloring)[static_cast<std::size_t>(v)];
        if (c >= 64 || (seen >> c) & 1U) {
          throw ComplexError("coloring is not proper: a facet meets color class " + std::to_string(c) + " twice");
        }
        seen |= std::uint64_t{1} << c;
      }
    }
  }
  out.coloring_ = std::move(coloring);
  out.cache_ = std::make_shared<FaceCache>();
  return out;
}

SimplicialComplex SimplicialComplex::with_coloring(std::optional<std::vector<int>> coloring) const {
  return from_subsets(n_, facets_, std::move(coloring));
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](VertexSubset f) { return f.size() == dim_ + 1; });
}

int SimplicialComplex::num_colors() const {
  if (!coloring_ || coloring_->empty()) return 0;
  return *std::max_element(coloring_->begin(), coloring_->end()) + 1;
}

const std::vector<std::vector<std::uint64_t>>& SimplicialComplex::faces_by_dim() const {
  std::call_once(cache_->once, [this] {
    std::vector<std::uint64_t> raw;
    raw.reserve(facets_.size());
    for (VertexSubset f : facets_) raw.push_back(f.bits);
    cache_->faces = enumerate_faces(raw);
  });
  return cache_->faces;
}

bool SimplicialComplex::contains(VertexSubset face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSubset f) { return face.subset_of(f); });
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
  std::vector<std::int64_t> f{1};
  for (const auto& layer : faces_by_dim()) f.push_back(static_cast<std::int64_t>(layer.size()));
  return f;
}

std::vector<std::int64_t> SimplicialComplex::h_vector() const {
  if (!is_pure()) throw ComplexError("h-vector requested for a non-pure complex");
  const auto f = f_vector();
  const std::int64_t d = dim_ + 1;
  std::vector<std::int64_t> h(static_cast<std::size_t>(d + 1), 0);
  for (std::int64_t j = 0; j <= d; ++j) {
    std::int64_t acc = 0;
    for (std::int64_t i = 0; i <= j; ++i) {
      // C(d - i, d - j)
      std::int64_t c = 1;
      const std::int64_t top = d - i, bottom = d - j;
      for (std::int64_t t = 1; t <= bottom; ++t) c = c * (top - bottom + t) / t;
      const std::int64_t term = c * f[static_cast<std::size_t>(i)];
      acc += ((j - i) % 2 == 0) ? term : -term;
    }
    h[static_cast<std::size_t>(j)] = acc;
  }
  return h;
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int j) {
  if (j < 0 || j > complex.dim()) throw ComplexError("skeleton dimension out of range");
  std::vector<VertexSubset> facets;
  for (VertexSubset f : complex.facets()) {
    if (f.size() <= j + 1) facets.push_back(f);
  }
  for (std::uint64_t face : complex.faces_by_dim()[static_cast<std::size_t>(j)]) facets.emplace_back(face);
  return SimplicialComplex::from_subsets(complex.num_vertices(), std::move(facets), complex.coloring());
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int n = a.num_vertices() + b.num_vertices();
  if (n > kMaxVertices) throw ComplexError("join exceeds the vertex cap");
  const int shift = a.num_vertices();
  std::vector<VertexSubset> facets;
  for (VertexSubset fa : a.facets()) {
    for (VertexSubset fb : b.facets()) facets.emplace_back(fa.bits | (shift == 64 ? 0 : fb.bits << shift));
  }
  std::optional<std::vector<int>> coloring;
  if (a.coloring() && b.coloring()) {
    coloring = *a.coloring();
    const int offset = a.num_colors();
    for (int c : *b.coloring()) coloring->push_back(c + offset);
  }
  return SimplicialComplex::from_subsets(n, std::move(facets), std::move(coloring));
}

namespace {

SimplicialComplex relabeled(std::vector<std::uint64_t> raw, std::uint64_t kept,
                            const std::optional<std::vector<int>>& coloring) {
  std::vector<VertexSubset> facets;
  for (std::uint64_t f : maximal_sets(std::move(raw))) facets.emplace_back(compress_mask(f, kept));
  std::optional<std::vector<int>> sub_coloring;
  if (coloring) {
    sub_coloring.emplace();
    for (std::uint64_t k = kept; k != 0; k &= k - 1) {
      sub_coloring->push_back((*coloring)[static_cast<std::size_t>(std::countr_zero(k))]);
    }
  }
  return SimplicialComplex::from_subsets(std::popcount(kept), std::move(facets), std::move(sub_coloring));
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& complex, VertexSubset face) {
  std::vector<std::uint64_t> raw;
  std::uint64_t kept = 0;
  for (VertexSubset f : complex.facets()) {
    if (face.subset_of(f)) {
      raw.push_back(f.bits & ~face.bits);
      kept |= f.bits & ~face.bits;
    }
  }
  if (raw.empty()) throw ComplexError("link requested for a set that is not a face");
  return relabeled(std::move(raw), kept, complex.coloring());
}

SimplicialComplex induced(const SimplicialComplex& complex, VertexSubset subset) {
  if (!subset.subset_of(VertexSubset::range(complex.num_vertices()))) {
    throw ComplexError("induced subset uses a vertex outside [0, n)");
  }
  std::vector<std::uint64_t> raw;
  for (VertexSubset f : complex.facets()) raw.push_back(f.bits & subset.bits);
  return relabeled(std::move(raw), subset.bits, complex.coloring());
}

namespace {

std::vector<std::uint64_t> adjacency(const SimplicialComplex& complex) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(complex.num_vertices()), 0);
  for (VertexSubset f : complex.facets()) {
    for (int v : f.vertices()) adj[static_cast<std::size_t>(v)] |= f.bits & ~(std::uint64_t{1} << v);
  }
  return adj;
}

}  // namespace

bool is_connected(const SimplicialComplex& complex) {
  const int n = complex.num_vertices();
  if (n == 0) return false;
  const auto adj = adjacency(complex);
  std::uint64_t reached = 1, frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(b))];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == VertexSubset::range(n).bits;
}

bool is_balanced(const SimplicialComplex& complex) {
  if (!complex.coloring()) throw ComplexError("balancedness check needs a stored coloring");
  const auto& coloring = *complex.coloring();
  const int d = complex.dim() + 1;
  for (int c : coloring) {
    if (c < 0 || c >= d) return false;
  }
  for (VertexSubset f : complex.facets()) {
    std::uint64_t seen = 0;
    for (int v : f.vertices()) {
      const std::uint64_t bit = std::uint64_t{1} << coloring[static_cast<std::size_t>(v)];
      if (seen & bit) return false;
      seen |= bit;
    }
  }
  return true;
}

bool is_normal_pseudomanifold(const SimplicialComplex& complex) {
  if (!complex.is_pure() || !is_connected(complex)) return false;
  const int d = complex.dim() + 1;
  if (d >= 2) {
    for (std::uint64_t ridge : complex.faces_by_dim()[static_cast<std::size_t>(d - 2)]) {
      int containing = 0;
      for (VertexSubset f : complex.facets()) containing += (ridge & ~f.bits) == 0;
      if (containing != 2) return false;
    }
  }
  // Links of non-empty faces of dimension <= d - 3 must be connected; the empty
  // face is covered by the connectivity test above.
  for (int k = 0; k <= d - 3; ++k) {
    for (std::uint64_t face : complex.faces_by_dim()[static_cast<std::size_t>(k)]) {
      if (!is_connected(link(complex, VertexSubset(face)))) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> propose_coloring(const SimplicialComplex& complex) {
  const int n = complex.num_vertices();
  const int colors = complex.dim() + 1;
  const auto adj = adjacency(complex);
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  // Plain backtracking in vertex order; complexes here are small.
  auto assign = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int c = 0; c < colors; ++c) {
      bool clash = false;
      for (std::uint64_t b = adj[static_cast<std::size_t>(v)]; b != 0; b &= b - 1) {
        if (color[static_cast<std::size_t>(std::countr_zero(b))] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (self(self, v + 1)) return true;
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;
  return color;
}

std::vector<int> vertex_degree_multiset(const SimplicialComplex& complex) {
  std::vector<int> degrees;
  for (std::uint64_t nbrs : adjacency(complex)) degrees.push_back(std::popcount(nbrs));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace betti
