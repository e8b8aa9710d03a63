#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "betti/betti_table.hpp"
#include "betti/binomial.hpp"

namespace betti {

/// Which binomial the clique-complex formula uses inside the product.
///  - kProofDerived: c * C(n_l, c + 1), the count that Hochster's formula gives.
///  - kAsPrinted: c * C(n_l, c - 1), kept only for comparison.
enum class MultipartiteFormula { kProofDerived, kAsPrinted };

/// beta_{i,i+j} of the clique complex of K_{n_1,...,n_d}: the sum over j-subsets
/// of classes and compositions c_1 + ... + c_j = i (c_l >= 1) of
/// prod c_l * C(n_l, c_l + 1).
Count betti_clique_multipartite(std::span<const int> class_sizes, int i, int j,
                                MultipartiteFormula formula = MultipartiteFormula::kProofDerived);
/// Full table of the same numbers, n = sum n_l, d = number of classes.
BettiTable clique_multipartite_table(std::span<const int> class_sizes);
/// (f_{-1}, f_0, ..., f_{d-1}) of the clique complex of K_{n_1,...,n_d}.
std::vector<Count> clique_multipartite_f_vector(std::span<const int> class_sizes);

/// beta_{i,i+j} of Skel_{d-s-1}(Delta) for a (d-1)-dimensional Cohen-Macaulay
/// Delta on n vertices with Betti table `base` and f-vector `f` (f[0] = f_{-1}).
Count skeleton_betti_cm(const BettiTable& base, std::span<const Count> f, int n, int d, int s, int i, int j);

/// Upper bound for any balanced complex with the given color class sizes.
Count bound_any_balanced(std::span<const int> class_sizes, int i, int j);

/// C(i-1+j, j) C(n-d+j, i+j); beta_{0,0} = 1.
Count bound_general_cm(int n, int d, int i, int j);

/// C(n-d+1, 2) - sum C(n_l, 2).
Count h2_upper_bound(int n, int d, std::span<const int> class_sizes);

/// Betti numbers of S/(Lex(b) + m^{j+1}) in m variables in strand j >= 2, which
/// bound every Artinian quotient with at least b quadrics and no linear forms.
Count bound_cm_deg2(int m, Count b, int i, int j);
/// bound_cm_deg2 with m = n-d and b = sum C(n_l, 2); falls back to the general
/// bound when b = 0.
Count bound_balanced_cm(int n, int d, std::span<const int> class_sizes, int i, int j);

/// Lex-plus-squares bound in m variables with (p, q) the b-th largest
/// squarefree quadric. Needs j >= 2.
Count bound_lps(int m, Count b, int i, int j);
/// bound_lps with m = n-d and b = sum C(n_l - 1, 2); falls back to
/// bound_balanced_cm when b = 0.
Count bound_balanced_cm_lps(int n, int d, std::span<const int> class_sizes, int i, int j);

/// Linear strand bound for balanced normal pseudomanifolds:
/// (p-1) C(n-d-1, i) - C(p, i+1) + C(q, i) with b = floor((n-d)(n-2d+2)/2).
Count bound_pseudo_linear(int n, int d, int i);
/// i C(n-d, i+1), for all normal pseudomanifolds; attained by stacked spheres.
Count bound_pseudo_general(int n, int d, int i);
/// i C(n-d+1, i+1): linear strand of a (d-2)-simplex joined with n-d+1 points.
Count betti_cone_join_linear(int n, int d, int i);

/// Closed formulas for stacked cross-polytopal spheres on kd vertices.
Count betti_cross_stacked_closed(int k, int d, int i, int j);
/// Recursion on k for strands 1 <= j <= d-2, starting from the cross-polytope.
Count betti_cross_stacked_recursive(int k, int d, int i, int j);
BettiTable cross_stacked_closed_table(int k, int d);
/// Strands 1..d-2 by recursion, strands d-1 and d by duality.
BettiTable cross_stacked_recursive_table(int k, int d);

enum class Hypothesis { kBalanced, kCohenMacaulay, kPseudomanifold };

enum class BoundKind {
  kAnyBalanced,
  kGeneralCM,
  kBalancedCM,
  kBalancedCMLexPlusSquares,
  kPseudoLinear,
  kPseudoGeneral,
};

/// One bound together with its parameters and the hypotheses it needs.
struct BoundSpec {
  BoundKind kind;
  int n = 0;
  int d = 0;
  std::vector<int> class_sizes;

  /// Validates sum n_l = n and d = number of classes when sizes are needed.
  static BoundSpec make(BoundKind kind, int n, int d, std::vector<int> class_sizes = {});

  std::string name() const;
  std::vector<Hypothesis> requires_hypotheses() const;
  /// The bound at (i, j), or nothing when it says nothing there.
  std::optional<Count> evaluate(int i, int j) const;
};

std::string to_string(Hypothesis h);

}  // namespace betti
