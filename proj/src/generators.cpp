#include "betti/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

namespace betti {

SimplicialComplex clique_complex_multipartite(std::span<const int> class_sizes) {
  if (class_sizes.empty()) throw ComplexError("multipartite clique complex needs at least one class");
  std::vector<int> coloring;
  std::vector<std::uint64_t> classes;
  int next = 0;
  for (std::size_t c = 0; c < class_sizes.size(); ++c) {
    const int size = class_sizes[c];
    if (size < 1) throw ComplexError("color classes must be non-empty");
    if (next + size > kMaxVertices) throw ComplexError("multipartite clique complex exceeds the vertex cap");
    std::uint64_t mask = 0;
    for (int t = 0; t < size; ++t, ++next) {
      mask |= std::uint64_t{1} << next;
      coloring.push_back(static_cast<int>(c));
    }
    classes.push_back(mask);
  }
  // Facets pick exactly one vertex per class.
  std::vector<std::uint64_t> facets{0};
  for (std::uint64_t cls : classes) {
    std::vector<std::uint64_t> grown;
    for (std::uint64_t partial : facets) {
      for (std::uint64_t b = cls; b != 0; b &= b - 1) grown.push_back(partial | (b & (~b + 1)));
    }
    facets = std::move(grown);
  }
  std::vector<VertexSubset> subsets(facets.begin(), facets.end());
  return SimplicialComplex::from_subsets(next, std::move(subsets), std::move(coloring));
}

SimplicialComplex cross_polytope_boundary(int d) {
  if (d < 1) throw ComplexError("cross-polytope dimension must be positive");
  if (2 * d > kMaxVertices) throw ComplexError("cross-polytope exceeds the vertex cap");
  std::vector<int> sizes(static_cast<std::size_t>(d), 2);
  return clique_complex_multipartite(sizes);
}

SimplicialComplex point_set(int n) {
  if (n < 1) throw ComplexError("point set needs at least one vertex");
  std::vector<int> sizes{n};
  return clique_complex_multipartite(sizes);
}

SimplicialComplex full_simplex(int n) {
  if (n < 1) throw ComplexError("simplex needs at least one vertex");
  std::vector<int> sizes(static_cast<std::size_t>(n), 1);
  return clique_complex_multipartite(sizes);
}

SimplicialComplex cycle(int length) {
  if (length < 3) throw ComplexError("cycle length must be at least 3");
  std::vector<std::vector<int>> edges;
  for (int v = 0; v < length; ++v) edges.push_back({v, (v + 1) % length});
  std::optional<std::vector<int>> coloring;
  if (length % 2 == 0) {
    coloring.emplace();
    for (int v = 0; v < length; ++v) coloring->push_back(v % 2);
  }
  return SimplicialComplex::from_facets(length, edges, std::move(coloring));
}

SimplicialComplex cone_join(int n, int d) {
  if (d < 1 || n < d) throw ComplexError("cone-join needs 1 <= d <= n");
  const int points = n - d + 1;
  std::uint64_t simplex = 0;
  std::vector<int> coloring(static_cast<std::size_t>(n), d - 1);
  for (int v = points; v < n; ++v) {
    simplex |= std::uint64_t{1} << v;
    coloring[static_cast<std::size_t>(v)] = v - points;
  }
  std::vector<VertexSubset> facets;
  for (int p = 0; p < points; ++p) facets.emplace_back(simplex | (std::uint64_t{1} << p));
  return SimplicialComplex::from_subsets(n, std::move(facets), std::move(coloring));
}

SimplicialComplex suspension(const SimplicialComplex& complex) { return join(complex, point_set(2)); }

SimplicialComplex connected_sum(const SimplicialComplex& a, VertexSubset fa, const SimplicialComplex& b,
                                VertexSubset fb, std::span<const std::pair<int, int>> phi) {
  auto is_facet = [](const SimplicialComplex& c, VertexSubset f) {
    const auto facets = c.facets();
    return std::find(facets.begin(), facets.end(), f) != facets.end();
  };
  if (!is_facet(a, fa) || !is_facet(b, fb)) throw ComplexError("connected sum needs a facet of each summand");
  if (!a.is_pure() || !b.is_pure() || a.dim() != b.dim()) {
    throw ComplexError("connected sum needs pure summands of equal dimension");
  }
  if (static_cast<int>(phi.size()) != fa.size()) throw ComplexError("gluing map must cover the whole facet");

  std::vector<int> relabel(static_cast<std::size_t>(b.num_vertices()), -1);
  std::uint64_t hit_a = 0, hit_b = 0;
  for (auto [va, vb] : phi) {
    if (!fa.contains(va) || !fb.contains(vb)) throw ComplexError("gluing map leaves the chosen facets");
    hit_a |= std::uint64_t{1} << va;
    hit_b |= std::uint64_t{1} << vb;
    relabel[static_cast<std::size_t>(vb)] = va;
    if (a.coloring() && b.coloring() &&
        (*a.coloring())[static_cast<std::size_t>(va)] != (*b.coloring())[static_cast<std::size_t>(vb)]) {
      throw ComplexError("gluing map does not preserve colors");
    }
  }
  if (hit_a != fa.bits || hit_b != fb.bits) throw ComplexError("gluing map is not a bijection");

  int next = a.num_vertices();
  std::optional<std::vector<int>> coloring;
  if (a.coloring() && b.coloring()) coloring = *a.coloring();
  for (int v = 0; v < b.num_vertices(); ++v) {
    if (relabel[static_cast<std::size_t>(v)] >= 0) continue;
    relabel[static_cast<std::size_t>(v)] = next++;
    if (coloring) coloring->push_back((*b.coloring())[static_cast<std::size_t>(v)]);
  }
  if (next > kMaxVertices) throw ComplexError("connected sum exceeds the vertex cap");

  std::vector<VertexSubset> facets;
  for (VertexSubset f : a.facets()) {
    if (f != fa) facets.push_back(f);
  }
  for (VertexSubset f : b.facets()) {
    if (f == fb) continue;
    std::uint64_t mapped = 0;
    for (int v : f.vertices()) mapped |= std::uint64_t{1} << relabel[static_cast<std::size_t>(v)];
    facets.emplace_back(mapped);
  }
  return SimplicialComplex::from_subsets(next, std::move(facets), std::move(coloring));
}

SimplicialComplex stacked_cross_polytopal(int d, int k, const GluingPlan& plan) {
  if (d < 1 || k < 2) throw ComplexError("stacked cross-polytopal sphere needs d >= 1 and k >= 2");
  if (k * d > kMaxVertices) throw ComplexError("stacked cross-polytopal sphere exceeds the vertex cap");
  if (d == 1 && k > 2) throw ComplexError("0-spheres cannot be glued along facets");

  const SimplicialComplex seed_copy = cross_polytope_boundary(d);
  std::vector<std::uint64_t> facets;
  for (VertexSubset f : seed_copy.facets()) facets.push_back(f.bits);
  std::vector<int> color = *seed_copy.coloring();
  const std::uint64_t first_copy = VertexSubset::range(2 * d).bits;
  std::uint64_t last_new = 0;
  std::mt19937_64 rng(plan.seed);

  for (int step = 0; step < k - 2; ++step) {
    std::sort(facets.begin(), facets.end(), canonical_less);
    std::uint64_t site = 0;
    switch (plan.strategy) {
      case GluingPlan::Strategy::kPath:
        site = step == 0 ? facets.front() : last_new;
        break;
      case GluingPlan::Strategy::kStar: {
        auto it = std::find_if(facets.begin(), facets.end(), [&](std::uint64_t f) { return (f & ~first_copy) == 0; });
        if (it == facets.end()) throw ComplexError("star plan ran out of facets on the first copy");
        site = *it;
        break;
      }
      case GluingPlan::Strategy::kRandom:
        // Modulo of a fixed-width engine keeps draws identical across standard libraries.
        site = facets[static_cast<std::size_t>(rng() % facets.size())];
        break;
      case GluingPlan::Strategy::kExplicit:
        if (static_cast<std::size_t>(step) >= plan.sites.size()) throw ComplexError("explicit plan has too few steps");
        site = plan.sites[static_cast<std::size_t>(step)].bits;
        break;
    }
    auto pos = std::find(facets.begin(), facets.end(), site);
    if (pos == facets.end()) {
      throw ComplexError("gluing step " + std::to_string(step) + " does not select a facet of the partial complex");
    }
    facets.erase(pos);

    // site_vertex[c] is the vertex of color c on the gluing facet.
    std::vector<int> site_vertex(static_cast<std::size_t>(d), -1);
    for (std::uint64_t b = site; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      site_vertex[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] = v;
    }
    const int base = static_cast<int>(color.size());
    for (int c = 0; c < d; ++c) color.push_back(c);
    last_new = 0;
    for (int c = 0; c < d; ++c) last_new |= std::uint64_t{1} << (base + c);

    for (std::uint64_t choice = 1; choice < (std::uint64_t{1} << d); ++choice) {
      std::uint64_t facet = 0;
      for (int c = 0; c < d; ++c) {
        const int v = ((choice >> c) & 1U) ? base + c : site_vertex[static_cast<std::size_t>(c)];
        facet |= std::uint64_t{1} << v;
      }
      facets.push_back(facet);
    }
  }
  std::vector<VertexSubset> subsets(facets.begin(), facets.end());
  const int n = static_cast<int>(color.size());
  return SimplicialComplex::from_subsets(n, std::move(subsets), std::move(color));
}

SimplicialComplex stacked_sphere(int d, int n) {
  if (d < 2) throw ComplexError("stacked sphere needs d >= 2");
  if (n < d + 1) throw ComplexError("stacked sphere needs n >= d + 1");
  if (n > kMaxVertices) throw ComplexError("stacked sphere exceeds the vertex cap");
  const std::uint64_t simplex = VertexSubset::range(d + 1).bits;
  std::vector<std::uint64_t> facets;
  for (int v = 0; v <= d; ++v) facets.push_back(simplex & ~(std::uint64_t{1} << v));
  for (int v = d + 1; v < n; ++v) {
    std::sort(facets.begin(), facets.end(), canonical_less);
    const std::uint64_t site = facets.front();
    facets.erase(facets.begin());
    for (std::uint64_t b = site; b != 0; b &= b - 1) {
      facets.push_back((site & ~(b & (~b + 1))) | (std::uint64_t{1} << v));
    }
  }
  std::vector<VertexSubset> subsets(facets.begin(), facets.end());
  return SimplicialComplex::from_subsets(n, std::move(subsets));
}

}  // namespace betti
