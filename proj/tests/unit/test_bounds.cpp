#include <array>
#include <vector>

#include "betti/bounds.hpp"
#include "betti/generators.hpp"
#include "betti/hochster.hpp"
#include "betti/homology.hpp"
#include "betti/lex.hpp"
#include "doctest.h"
#include "oracles/oracles.hpp"

using namespace betti;

namespace {

const std::vector<int> k3333{3, 3, 3, 3};

// Graded Betti numbers of the skeleta of the clique complex of K_{3,3,3,3}, i = 0..11.
const std::array<std::array<Count, 12>, 4> skeleton_rows{{
    {0, 66, 440, 1485, 3168, 4620, 4752, 3465, 1760, 594, 120, 11},
    {0, 108, 945, 3312, 6720, 8856, 7875, 4720, 1836, 420, 43, 0},
    {0, 81, 648, 2376, 4752, 5733, 4352, 2052, 552, 65, 0, 0},
    {0, 0, 0, 0, 81, 216, 216, 96, 16, 0, 0, 0},
}};

// Rows j = 2, 3, 4 for n = 12, d = 4, three vertices per color, i = 0..8.
const std::array<std::array<Count, 9>, 3> lex_rows{{
    {0, 62, 360, 915, 1317, 1156, 617, 185, 24},
    {0, 136, 821, 2155, 3184, 2855, 1551, 472, 62},
    {0, 267, 1653, 4432, 6665, 6065, 3336, 1026, 136},
}};
const std::array<std::array<Count, 9>, 3> general_rows{{
    {0, 120, 630, 1512, 2100, 1800, 945, 280, 36},
    {0, 330, 1848, 4620, 6600, 5775, 3080, 924, 120},
    {0, 792, 4620, 11880, 17325, 15400, 8316, 2520, 330},
}};
const std::array<std::array<Count, 9>, 3> squares_rows{{
    {0, 38, 292, 827, 1249, 1125, 609, 184, 24},
    {0, 36, 267, 885, 1529, 1510, 877, 280, 38},
    {0, 21, 161, 533, 1024, 1145, 727, 249, 36},
}};

BettiTable hochster(const SimplicialComplex& c) { return graded_betti(c, {.threads = 1}); }

}  // namespace

TEST_CASE("clique complex of a complete multipartite graph") {
  const std::vector<int> k332{3, 3, 2};
  CHECK(betti_clique_multipartite(k332, 3, 2) == 16);
  CHECK(betti_clique_multipartite(k332, 3, 2, MultipartiteFormula::kAsPrinted) != 16);
  CHECK(betti_clique_multipartite(k3333, 4, 4) == 81);
  CHECK(betti_clique_multipartite(k3333, 5, 4) == 216);
  CHECK(betti_clique_multipartite(k3333, 0, 0) == 1);
  CHECK(betti_clique_multipartite(k3333, 1, 5) == 0);

  const std::vector<std::vector<int>> partitions{{3, 3, 2}, {2, 2, 2}, {1, 2, 3}, {4, 1}, {2, 3, 1, 2}, {5}};
  for (const auto& sizes : partitions) {
    CHECK(clique_multipartite_table(sizes) == hochster(clique_complex_multipartite(sizes)));
    CHECK(clique_multipartite_f_vector(sizes) == clique_complex_multipartite(sizes).f_vector());
  }
}

TEST_CASE("skeleta of Cohen-Macaulay complexes") {
  const auto base = clique_multipartite_table(k3333);
  const auto f = clique_multipartite_f_vector(k3333);
  CHECK(skeleton_betti_cm(base, f, 12, 4, 1, 1, 3) == 81);
  CHECK(skeleton_betti_cm(base, f, 12, 4, 3, 1, 1) == 66);
  CHECK(skeleton_betti_cm(base, f, 12, 4, 2, 1, 3) == 0);
  CHECK_THROWS(skeleton_betti_cm(base, f, 12, 4, 4, 1, 1));
  CHECK_THROWS(skeleton_betti_cm(base, f, 12, 3, 1, 1, 1));

  const auto gamma = clique_complex_multipartite(k3333);
  for (int j = 1; j <= 4; ++j) {
    const auto direct = hochster(skeleton(gamma, j - 1));
    for (int i = 0; i < 12; ++i) {
      const Count expected = skeleton_rows[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)];
      CHECK(direct.at(i, j) == expected);
      CHECK(bound_any_balanced(k3333, i, j) == expected);
    }
  }
  CHECK(bound_any_balanced(k3333, 1, 2) == 108);
  CHECK(bound_any_balanced(k3333, 10, 1) == 120);
  CHECK(bound_any_balanced(k3333, 0, 0) == 1);
  CHECK(bound_any_balanced(k3333, 1, 5) == 0);

  // Skeleta of other Cohen-Macaulay complexes, entry by entry.
  const std::vector<SimplicialComplex> bases{cross_polytope_boundary(4), stacked_cross_polytopal(4, 3, GluingPlan::path()),
                                             clique_complex_multipartite(std::vector<int>{2, 3, 1, 2})};
  for (const auto& complex : bases) {
    const int n = complex.num_vertices(), d = complex.dim() + 1;
    const auto table = hochster(complex);
    const auto fv = complex.f_vector();
    for (int s = 1; s <= d - 1; ++s) {
      const auto direct = hochster(skeleton(complex, d - s - 1));
      for (int j = 0; j <= d; ++j)
        for (int i = 0; i <= n; ++i) CHECK(skeleton_betti_cm(table, fv, n, d, s, i, j) == direct.at(i, j));
    }
  }
}

TEST_CASE("Cohen-Macaulay bounds from lex ideals") {
  CHECK(bound_general_cm(12, 4, 1, 2) == 120);
  CHECK(bound_general_cm(12, 4, 1, 3) == 330);
  CHECK(bound_general_cm(12, 4, 8, 4) == 330);
  CHECK(bound_general_cm(12, 4, 0, 0) == 1);
  CHECK(bound_cm_deg2(8, 12, 1, 2) == 62);
  CHECK(bound_cm_deg2(8, 12, 1, 3) == 136);
  CHECK(bound_cm_deg2(8, 12, 8, 4) == 136);
  CHECK_THROWS(bound_cm_deg2(8, 37, 1, 2));
  CHECK_THROWS(bound_cm_deg2(8, 12, 1, 1));
  for (int j = 2; j <= 4; ++j) {
    const auto gens = lex_plus_power_generators(8, 12, j);
    for (int i = 0; i <= 8; ++i) {
      const auto row = static_cast<std::size_t>(j - 2);
      const auto col = static_cast<std::size_t>(i);
      CHECK(bound_balanced_cm(12, 4, k3333, i, j) == lex_rows[row][col]);
      CHECK(bound_general_cm(12, 4, i, j) == general_rows[row][col]);
      if (i >= 1) CHECK(ek_betti(gens, i, j) == bound_cm_deg2(8, 12, i, j));
    }
  }
  // equality also for other b and m
  for (int m = 2; m <= 6; ++m)
    for (Count b = 1; b <= binom(m + 1, 2); ++b)
      for (int j = 2; j <= 4; ++j) {
        const auto gens = lex_plus_power_generators(m, b, j);
        for (int i = 1; i <= m; ++i) CHECK(ek_betti(gens, i, j) == bound_cm_deg2(m, b, i, j));
      }

  CHECK(h2_upper_bound(12, 4, k3333) == 24);
  CHECK(h2_upper_bound(4, 4, std::vector<int>{1, 1, 1, 1}) == 0);
  CHECK(h2_upper_bound(4, 2, std::vector<int>{2, 2}) == 1);
  CHECK(cycle(4).h_vector()[2] == 1);
  CHECK_THROWS(h2_upper_bound(11, 4, k3333));
  CHECK_THROWS(bound_balanced_cm(12, 3, k3333, 1, 2));
  CHECK_THROWS(bound_balanced_cm(12, 4, k3333, 1, 1));
}

TEST_CASE("lex-plus-squares bounds") {
  CHECK(bound_lps(8, 4, 1, 2) == 38);
  CHECK(bound_lps(8, 4, 5, 4) == 1145);
  CHECK(bound_lps(8, 4, 8, 2) == 24);
  CHECK(bound_balanced_cm_lps(12, 4, k3333, 1, 3) == 36);
  CHECK(bound_balanced_cm_lps(12, 4, std::vector<int>{1, 3, 4, 4}, 8, 4) == 35);
  CHECK(bound_balanced_cm_lps(12, 4, k3333, 8, 4) == 36);
  CHECK_THROWS(bound_lps(8, 29, 1, 2));
  for (int j = 2; j <= 4; ++j) {
    for (int i = 0; i <= 8; ++i) {
      const auto row = static_cast<std::size_t>(j - 2);
      const Count value = bound_balanced_cm_lps(12, 4, k3333, i, j);
      CHECK(value == squares_rows[row][static_cast<std::size_t>(i)]);
      CHECK(value <= lex_rows[row][static_cast<std::size_t>(i)]);
    }
  }
  // Against the lex-plus-squares ideal with exactly b quadrics: the bound holds
  // unless the b-th quadric is x_p x_{p+1}, where the degree-2 generators
  // x_p x_l (p < l <= q) of a colon ideal are not counted.
  for (int m = 3; m <= 7; ++m)
    for (Count b = 1; b <= binom(m, 2); ++b) {
      const auto l = squarefree_lex_segment(m, 2, b);
      const auto [p, q] = bth_largest_sqfree_deg2(m, b);
      for (int j = 2; j <= m; ++j)
        for (int i = 1; i <= m; ++i) {
          if (q > p + 1) CHECK(lex_plus_squares_betti(l, m, i, j) <= bound_lps(m, b, i, j));
        }
    }
  // S/(x1x2, x1^2, x2^2, x3^2) has beta_{2,4} = 3.
  MonomialSet x1x2(3);
  x1x2.insert(Monomial::from_variables(3, std::vector<int>{1, 2}));
  CHECK(lex_plus_squares_betti(x1x2, 3, 2, 2) == 3);
  auto gens = x1x2.all();
  for (int v = 1; v <= 3; ++v) gens.push_back(Monomial::from_variables(3, std::vector<int>{v, v}));
  CHECK(oracle::monomial_betti(gens, 3, 2, 2) == 3);
  CHECK(bound_lps(3, 1, 2, 2) == 2);
  // K_{3,3} is balanced and CM with beta_{2,4} = 9 above the bound 8; its
  // squarefree lex ideal (x1x2, x1x3, x2x3x4) gives 10.
  const std::vector<int> k33{3, 3};
  CHECK(graded_betti(clique_complex_multipartite(k33), {}).at(2, 2) == 9);
  CHECK(bound_balanced_cm_lps(6, 2, k33, 2, 2) == 8);
  MonomialSet forced(4);
  for (const auto& vars : {std::vector<int>{1, 2}, std::vector<int>{1, 3}, std::vector<int>{2, 3, 4}})
    forced.insert(Monomial::from_variables(4, vars));
  CHECK(lex_plus_squares_betti(forced, 4, 2, 2) == 10);
  // all n_i <= 2 gives b = 0 and falls back
  const std::vector<int> pairs{2, 2, 2};
  CHECK(bound_balanced_cm_lps(6, 3, pairs, 1, 2) == bound_balanced_cm(6, 3, pairs, 1, 2));
}

TEST_CASE("pseudomanifold linear strand bounds") {
  const std::array<Count, 8> balanced{24, 89, 155, 154, 90, 29, 4, 0};
  const std::array<Count, 8> general{28, 112, 210, 224, 140, 48, 7, 0};
  for (int i = 1; i <= 8; ++i) {
    CHECK(bound_pseudo_linear(12, 4, i) == balanced[static_cast<std::size_t>(i - 1)]);
    CHECK(bound_pseudo_general(12, 4, i) == general[static_cast<std::size_t>(i - 1)]);
  }
  CHECK(bound_pseudo_linear(12, 4, 0) == 0);
  CHECK(bound_pseudo_general(12, 4, 0) == 0);
  CHECK_THROWS(bound_pseudo_linear(12, 2, 1));
  CHECK_THROWS(bound_pseudo_general(12, 2, 1));

  const auto stacked = linear_strand(stacked_sphere(4, 12), {.threads = 1});
  for (int i = 0; i <= 12; ++i) CHECK(stacked[static_cast<std::size_t>(i)] == bound_pseudo_general(12, 4, i));
  const auto cone = linear_strand(cone_join(12, 4), {.threads = 1});
  for (int i = 0; i <= 12; ++i) CHECK(cone[static_cast<std::size_t>(i)] == betti_cone_join_linear(12, 4, i));
  CHECK(betti_cone_join_linear(12, 4, 2) == 168);
  CHECK(betti_cone_join_linear(4, 4, 1) == 0);
}

TEST_CASE("stacked cross-polytopal spheres") {
  const std::array<Count, 7> row{24, 80, 116, 88, 36, 8, 1};
  for (int i = 1; i <= 7; ++i) {
    CHECK(betti_cross_stacked_closed(3, 4, i, 1) == row[static_cast<std::size_t>(i - 1)]);
    CHECK(betti_cross_stacked_recursive(3, 4, i, 1) == row[static_cast<std::size_t>(i - 1)]);
  }
  CHECK(betti_cross_stacked_closed(3, 4, 2, 2) == 12);
  for (int d = 3; d <= 6; ++d)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j) CHECK(betti_cross_stacked_closed(2, d, i, j) == (i == j ? binom(d, i) : 0));
  CHECK_THROWS(betti_cross_stacked_closed(3, 2, 1, 1));
  CHECK_THROWS(betti_cross_stacked_recursive(3, 4, 1, 3));

  for (int k = 2; k <= 5; ++k)
    for (int d = 3; d <= 5; ++d) {
      const auto closed = cross_stacked_closed_table(k, d);
      CHECK(closed == cross_stacked_recursive_table(k, d));
      CHECK(check_poincare_duality(closed, k * d, d));
      CHECK(closed.at((k - 1) * d, d) == 1);
    }

  for (int k = 2; k <= 4; ++k)
    for (int d = 3; d <= 4; ++d) {
      if (k * d > 14) continue;
      const auto closed = cross_stacked_closed_table(k, d);
      for (const auto& plan : {GluingPlan::path(), GluingPlan::star(), GluingPlan::random(11)})
        CHECK(hochster(stacked_cross_polytopal(d, k, plan)) == closed);
    }
}

TEST_CASE("bound specs") {
  const auto spec = BoundSpec::make(BoundKind::kBalancedCM, 12, 4, k3333);
  CHECK(spec.name() == "balanced_cm");
  CHECK(spec.evaluate(1, 2) == 62);
  CHECK_FALSE(spec.evaluate(1, 1).has_value());
  CHECK(spec.requires_hypotheses().size() == 2);
  CHECK_THROWS(BoundSpec::make(BoundKind::kBalancedCM, 11, 4, k3333));
  CHECK_THROWS(BoundSpec::make(BoundKind::kAnyBalanced, 12, 3, k3333));
  const auto pseudo = BoundSpec::make(BoundKind::kPseudoLinear, 12, 4);
  CHECK(pseudo.evaluate(2, 1) == 89);
  CHECK_FALSE(pseudo.evaluate(2, 2).has_value());
  CHECK(BoundSpec::make(BoundKind::kGeneralCM, 12, 4).evaluate(8, 4) == 330);
  CHECK(to_string(Hypothesis::kCohenMacaulay) == "cm");
}
