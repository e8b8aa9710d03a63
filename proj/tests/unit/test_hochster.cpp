#include <vector>

#include "betti/binomial.hpp"
#include "betti/generators.hpp"
#include "betti/hochster.hpp"
#include "betti/homology.hpp"
#include "doctest.h"

using namespace betti;

namespace {

// Hochster's sum evaluated literally, one induced complex per subset.
BettiTable literal_hochster(const SimplicialComplex& c, const Field& field) {
  const int n = c.num_vertices(), d = c.dim() + 1;
  BettiTable t(n, d, field);
  t.set(0, 0, 1);
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w) {
    const auto h = reduced_homology_dims(induced(c, VertexSubset(w)), field);
    for (int j = 1; j < static_cast<int>(h.size()); ++j) {
      if (h[static_cast<std::size_t>(j)] != 0) t.add(std::popcount(w) - j, j, h[static_cast<std::size_t>(j)]);
    }
  }
  return t;
}

}  // namespace

TEST_CASE("Koszul tables of cross-polytope boundaries") {
  for (int d = 1; d <= 6; ++d) {
    const auto t = graded_betti(cross_polytope_boundary(d));
    for (int i = 0; i <= 2 * d; ++i) {
      for (int j = 0; j <= d; ++j) CHECK(t.at(i, j) == (i == j ? binom(d, i) : 0));
    }
    CHECK(check_poincare_duality(t, 2 * d, d));
  }
}

TEST_CASE("engine agrees with the literal Hochster sum") {
  const std::vector<SimplicialComplex> complexes{
      stacked_sphere(3, 7), cycle(7), cone_join(7, 3), stacked_cross_polytopal(3, 3, GluingPlan::random(2)),
      SimplicialComplex::from_facets(6, {{0, 1, 2}, {2, 3}, {3, 4, 5}, {1, 5}}),
      clique_complex_multipartite(std::vector<int>{3, 2, 2})};
  for (const auto& c : complexes) {
    for (const Field& f : {Field::gf2(), Field::rationals()}) CHECK(graded_betti(c, {f}) == literal_hochster(c, f));
  }
}

TEST_CASE("Example complex K_{3,3,2}") {
  const auto t = graded_betti(clique_complex_multipartite(std::vector<int>{3, 3, 2}));
  CHECK(t.at(3, 2) == 16);
  CHECK(t.at(0, 0) == 1);
}

TEST_CASE("strand restriction, threads and cap") {
  const auto c = stacked_cross_polytopal(4, 3, GluingPlan::path());
  const auto full = graded_betti(c);
  HochsterOptions partial;
  partial.max_j = 1;
  const auto low = graded_betti(c, partial);
  for (int i = 0; i <= 12; ++i) {
    CHECK(low.at(i, 1) == full.at(i, 1));
    CHECK(low.at(i, 2) == 0);
  }
  for (unsigned threads : {1U, 2U, 3U, 7U}) {
    HochsterOptions opts;
    opts.threads = threads;
    CHECK(graded_betti(c, opts) == full);
    CHECK(graded_betti(c, opts).to_csv() == full.to_csv());
    CHECK(linear_strand(c, opts) == full.row(1));
  }
  HochsterOptions tight;
  tight.cap = 10;
  CHECK_THROWS_AS(graded_betti(c, tight), CapExceeded);
  CHECK_THROWS_AS(linear_strand(c, tight), CapExceeded);
}

TEST_CASE("linear strand families") {
  CHECK(linear_strand(full_simplex(6)) == std::vector<Count>(7, 0));
  const auto cone = linear_strand(cone_join(12, 4));
  for (int i = 0; i <= 12; ++i) CHECK(cone[static_cast<std::size_t>(i)] == i * binom(9, i + 1));
  const auto stacked = linear_strand(stacked_sphere(4, 12));
  for (int i = 0; i <= 12; ++i) CHECK(stacked[static_cast<std::size_t>(i)] == i * binom(8, i + 1));
  const std::vector<Count> example{0, 28, 112, 210, 224, 140, 48, 7, 0};
  for (int i = 0; i <= 8; ++i) CHECK(stacked[static_cast<std::size_t>(i)] == example[static_cast<std::size_t>(i)]);
}

TEST_CASE("Poincare duality") {
  const auto s = stacked_cross_polytopal(4, 3, GluingPlan::star());
  const auto t = graded_betti(s);
  CHECK(check_poincare_duality(t, 12, 4));
  CHECK(t.at(8, 4) == 1);
  // a ball: beta_{0,0} = 1 has no partner in the top corner
  CHECK_FALSE(check_poincare_duality(graded_betti(full_simplex(4)), 4, 4));
  CHECK(check_poincare_duality(graded_betti(stacked_sphere(3, 6)), 6, 3));
  const auto disk = graded_betti(cone_join(6, 3));
  CHECK_FALSE(check_poincare_duality(disk, 6, 3));
}

TEST_CASE("Betti table formatting") {
  const auto t = graded_betti(cycle(4));
  CHECK(t.to_csv() == "i,j,beta\n0,0,1\n1,1,2\n2,2,1\n");
  CHECK(t.to_markdown() == "| j \\ i | 0 | 1 | 2 |\n|---|---|---|---|\n| 0 | 1 | 0 | 0 |\n| 1 | 0 | 2 | 0 |\n| 2 | 0 | 0 | 1 |\n");
  CHECK(hilbert_alternating_sums(cycle(4).f_vector(), 4) == std::vector<Count>{1, 0, -2, 0, 1});
}
