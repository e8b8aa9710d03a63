#include "betti/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "betti/lex.hpp"

namespace betti {

namespace {

int total(std::span<const int> sizes) {
  int n = 0;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("color classes must be non-empty");
    n += s;
  }
  return n;
}

void check_partition(int n, int d, std::span<const int> sizes) {
  if (static_cast<int>(sizes.size()) != d) throw std::invalid_argument("need exactly d color class sizes");
  if (total(sizes) != n) throw std::invalid_argument("color class sizes must sum to n");
}

Count sign(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

Count betti_clique_multipartite(std::span<const int> class_sizes, int i, int j, MultipartiteFormula formula) {
  if (i < 0 || j < 0 || j > static_cast<int>(class_sizes.size())) return 0;
  if (j == 0) return i == 0 ? 1 : 0;
  // Coefficient of y^j t^i in prod_l (1 + y g_l(t)), g_l(t) = sum_c c C(n_l, c +- 1) t^c.
  std::vector<std::vector<Count>> poly(static_cast<std::size_t>(j + 1), std::vector<Count>(static_cast<std::size_t>(i + 1), 0));
  poly[0][0] = 1;
  for (int size : class_sizes) {
    if (size < 1) throw std::invalid_argument("color classes must be non-empty");
    for (int y = j; y >= 1; --y) {
      for (int t = i; t >= 1; --t) {
        Count acc = poly[static_cast<std::size_t>(y)][static_cast<std::size_t>(t)];
        for (int c = 1; c <= t; ++c) {
          const Count g = c * binom(size, formula == MultipartiteFormula::kProofDerived ? c + 1 : c - 1);
          if (g == 0) continue;
          acc = checked_add(acc, checked_mul(g, poly[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(t - c)]));
        }
        poly[static_cast<std::size_t>(y)][static_cast<std::size_t>(t)] = acc;
      }
    }
  }
  return poly[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
}

BettiTable clique_multipartite_table(std::span<const int> class_sizes) {
  const int n = total(class_sizes);
  const int d = static_cast<int>(class_sizes.size());
  BettiTable table(n, d);
  for (int j = 0; j <= d; ++j)
    for (int i = 0; i <= n; ++i) table.set(i, j, betti_clique_multipartite(class_sizes, i, j));
  return table;
}

std::vector<Count> clique_multipartite_f_vector(std::span<const int> class_sizes) {
  // Elementary symmetric functions of the class sizes.
  std::vector<Count> f(class_sizes.size() + 1, 0);
  f[0] = 1;
  for (int size : class_sizes) {
    for (std::size_t k = f.size() - 1; k >= 1; --k) f[k] = checked_add(f[k], checked_mul(f[k - 1], size));
  }
  return f;
}

Count skeleton_betti_cm(const BettiTable& base, std::span<const Count> f, int n, int d, int s, int i, int j) {
  if (s < 1 || s > d - 1) throw std::invalid_argument("skeleton depth s must lie in [1, d-1]");
  if (static_cast<int>(f.size()) != d + 1) throw std::invalid_argument("f-vector must have d+1 entries");
  if (base.d() != d || base.n() != n) throw std::invalid_argument("base table does not match (n, d)");
  if (i < 0 || i > n - d + s || j < 0) return 0;
  if (j < d - s) return base.at(i, j);
  if (j > d - s) return 0;
  Count out = 0;
  for (int k = 0; k <= s; ++k) out = checked_add(out, sign(k) * base.at(i - k, d - s + k));
  for (int t = 0; t <= s - 1; ++t) {
    const Count term = checked_mul(binom(n - d + t, i - s + t), f[static_cast<std::size_t>(d - t)]);
    out = checked_add(out, sign(t - s + 1) * term);
  }
  return out;
}

Count bound_any_balanced(std::span<const int> class_sizes, int i, int j) {
  const int n = total(class_sizes);
  const int d = static_cast<int>(class_sizes.size());
  if (i < 0 || j < 0 || j > d) return 0;
  if (j == 0) return i == 0 ? 1 : 0;
  if (j == d) return betti_clique_multipartite(class_sizes, i, j);
  const auto base = clique_multipartite_table(class_sizes);
  const auto f = clique_multipartite_f_vector(class_sizes);
  return skeleton_betti_cm(base, f, n, d, d - j, i, j);
}

Count bound_general_cm(int n, int d, int i, int j) {
  if (i < 0 || j < 0) return 0;
  if (i == 0) return j == 0 ? 1 : 0;
  return checked_mul(binom(i - 1 + j, j), binom(n - d + j, i + j));
}

Count h2_upper_bound(int n, int d, std::span<const int> class_sizes) {
  check_partition(n, d, class_sizes);
  Count out = binom(n - d + 1, 2);
  for (int s : class_sizes) out = checked_sub(out, binom(s, 2));
  return out;
}

Count bound_cm_deg2(int m, Count b, int i, int j) {
  if (j < 2) throw std::invalid_argument("bound_cm_deg2 needs j >= 2");
  const auto [p, q] = bth_largest_deg2(m, b);
  if (i < 0) return 0;
  Count out = 0;
  for (int l = p + 1; l <= m; ++l)
    out = checked_add(out, checked_mul(binom(l - p + j - 1, j), binom(l - 1, i - 1)));
  for (int l = q + 1; l <= m; ++l)
    out = checked_add(out, checked_mul(binom(l - q + j - 2, j - 1), binom(l - 1, i - 1)));
  return out;
}

Count bound_balanced_cm(int n, int d, std::span<const int> class_sizes, int i, int j) {
  check_partition(n, d, class_sizes);
  if (j < 2 || j > d) throw std::invalid_argument("bound_balanced_cm needs 2 <= j <= d");
  Count b = 0;
  for (int s : class_sizes) b += binom(s, 2);
  if (b == 0) return bound_general_cm(n, d, i, j);
  return bound_cm_deg2(n - d, b, i, j);
}

Count bound_lps(int m, Count b, int i, int j) {
  if (j < 2) throw std::invalid_argument("bound_lps needs j >= 2");
  const auto [p, q] = bth_largest_sqfree_deg2(m, b);
  if (i < 0) return 0;
  Count out = 0;
  for (int k = 0; k <= j - 1; ++k) {
    Count first = 0, second = 0, third = 0;
    for (int l = p + j - k + 1; l <= m - k; ++l)
      first = checked_add(first, checked_mul(binom(l - p - 1, j - k), binom(l - j + k - 1, i - k - 1)));
    for (int l = q + j - k; l <= m - k; ++l) {
      second = checked_add(second, checked_mul(binom(l - q - 1, j - k - 1), binom(l - j + k - 1, i - k - 1)));
      third = checked_add(third, checked_mul(binom(l - q, j - k), binom(l - j + k - 1, i - k - 1)));
    }
    out = checked_add(out, checked_mul(binom(m - p, k), first));
    out = checked_add(out, checked_mul(binom(m - q, k), second));
    out = checked_add(out, checked_mul(binom(m - q, k - 1), third));
  }
  return checked_add(out, checked_mul(binom(m - j, i - j), checked_add(binom(m - p, j), binom(m - q, j - 1))));
}

Count bound_balanced_cm_lps(int n, int d, std::span<const int> class_sizes, int i, int j) {
  check_partition(n, d, class_sizes);
  if (j < 2 || j > d) throw std::invalid_argument("bound_balanced_cm_lps needs 2 <= j <= d");
  Count b = 0;
  for (int s : class_sizes) b += binom(s - 1, 2);
  if (b == 0) return bound_balanced_cm(n, d, class_sizes, i, j);
  return bound_lps(n - d, b, i, j);
}

Count bound_pseudo_linear(int n, int d, int i) {
  if (d < 3) throw std::invalid_argument("pseudomanifold bound needs d >= 3");
  const Count b = static_cast<Count>(n - d) * (n - 2 * d + 2) / 2;
  if (b < 1) throw std::invalid_argument("too few vertices: the quadric count b must be positive");
  const auto [p, q] = bth_largest_deg2(n - d - 1, b);
  if (i < 0) return 0;
  return checked_add(checked_sub(checked_mul(p - 1, binom(n - d - 1, i)), binom(p, i + 1)), binom(q, i));
}

Count bound_pseudo_general(int n, int d, int i) {
  if (d < 3) throw std::invalid_argument("pseudomanifold bound needs d >= 3");
  if (i < 0) return 0;
  return checked_mul(i, binom(n - d, i + 1));
}

Count betti_cone_join_linear(int n, int d, int i) {
  if (n < d || d < 1) throw std::invalid_argument("cone-join needs n >= d >= 1");
  if (i < 0) return 0;
  return checked_mul(i, binom(n - d + 1, i + 1));
}

namespace {

void check_cross(int k, int d) {
  if (d < 3) throw std::invalid_argument("stacked cross-polytopal formulas need d >= 3");
  if (k < 2) throw std::invalid_argument("stacked cross-polytopal formulas need k >= 2");
}

BettiTable cross_polytope_table(int d) {
  BettiTable table(2 * d, d);
  for (int i = 0; i <= d; ++i) table.set(i, i, binom(d, i));
  return table;
}

// Strands 0, d-1 and d from strands 0..1 by duality beta_{i,j} = beta_{n-d-i, d-j}.
void fill_by_duality(BettiTable& table) {
  const int n = table.n(), d = table.d();
  table.set(0, 0, 1);
  table.set(n - d, d, 1);
  for (int i = 0; i <= n - d; ++i) table.set(i, d - 1, table.at(n - d - i, 1));
}

BettiTable next_level(const BettiTable& gamma, int k, int d) {
  const int n = k * d;
  BettiTable table(n, d);
  for (int i = 0; i <= n - d; ++i) {
    Count linear = checked_mul(d, binom(n - 2 * d, i - 1));
    for (int l = 0; l <= d; ++l) linear = checked_add(linear, checked_mul(binom(d, l), gamma.at(i - l, 1)));
    for (int l = 1; l <= std::min(i, d); ++l)
      linear = checked_add(linear, checked_mul(binom(d, l), binom(n - 2 * d, i + 1 - l)));
    table.set(i, 1, linear);
    for (int j = 2; j <= d - 2; ++j) {
      Count value = checked_mul(binom(d, j), binom(n - 2 * d, i - j));
      for (int l = 0; l <= d; ++l) value = checked_add(value, checked_mul(binom(d, l), gamma.at(i - l, j)));
      table.set(i, j, value);
    }
  }
  fill_by_duality(table);
  return table;
}

}  // namespace

Count betti_cross_stacked_closed(int k, int d, int i, int j) {
  check_cross(k, d);
  if (i < 0 || i > (k - 1) * d || j < 0 || j > d) return 0;
  if (j == 0) return i == 0 ? 1 : 0;
  if (j == d) return i == (k - 1) * d ? 1 : 0;
  const Count top = d * (k - 1), low = d * (k - 2);
  if (j == 1) {
    Count out = checked_mul(k - 2, binom(top, i + 1));
    out = checked_sub(out, checked_mul(k - 1, binom(low, i + 1)));
    return checked_add(out, checked_mul(checked_mul(d, k - 1), binom(low, i - 1)));
  }
  if (j == d - 1) {
    Count out = checked_mul(k - 2, binom(top, i - 1));
    out = checked_sub(out, checked_mul(k - 1, binom(low, i - d - 1)));
    return checked_add(out, checked_mul(checked_mul(d, k - 1), binom(low, i - d + 1)));
  }
  return checked_mul(checked_mul(k - 1, binom(d, j)), binom(low, i - j));
}

BettiTable cross_stacked_closed_table(int k, int d) {
  check_cross(k, d);
  BettiTable table(k * d, d);
  for (int j = 0; j <= d; ++j)
    for (int i = 0; i <= k * d; ++i) table.set(i, j, betti_cross_stacked_closed(k, d, i, j));
  return table;
}

BettiTable cross_stacked_recursive_table(int k, int d) {
  check_cross(k, d);
  BettiTable table = cross_polytope_table(d);
  for (int level = 3; level <= k; ++level) table = next_level(table, level, d);
  return table;
}

Count betti_cross_stacked_recursive(int k, int d, int i, int j) {
  check_cross(k, d);
  if (j < 1 || j > d - 2) throw std::invalid_argument("the recursion covers only 1 <= j <= d-2");
  return cross_stacked_recursive_table(k, d).at(i, j);
}

BoundSpec BoundSpec::make(BoundKind kind, int n, int d, std::vector<int> class_sizes) {
  if (d < 1 || n < d) throw std::invalid_argument("bound parameters need n >= d >= 1");
  const bool needs_sizes = kind == BoundKind::kAnyBalanced || kind == BoundKind::kBalancedCM ||
                           kind == BoundKind::kBalancedCMLexPlusSquares;
  if (needs_sizes) check_partition(n, d, class_sizes);
  return BoundSpec{kind, n, d, std::move(class_sizes)};
}

std::string BoundSpec::name() const {
  switch (kind) {
    case BoundKind::kAnyBalanced: return "any_balanced";
    case BoundKind::kGeneralCM: return "general_cm";
    case BoundKind::kBalancedCM: return "balanced_cm";
    case BoundKind::kBalancedCMLexPlusSquares: return "balanced_cm_lps";
    case BoundKind::kPseudoLinear: return "pseudo_linear";
    case BoundKind::kPseudoGeneral: return "pseudo_general";
  }
  return "unknown";
}

std::vector<Hypothesis> BoundSpec::requires_hypotheses() const {
  switch (kind) {
    case BoundKind::kAnyBalanced: return {Hypothesis::kBalanced};
    case BoundKind::kGeneralCM: return {Hypothesis::kCohenMacaulay};
    case BoundKind::kBalancedCM:
    case BoundKind::kBalancedCMLexPlusSquares: return {Hypothesis::kBalanced, Hypothesis::kCohenMacaulay};
    case BoundKind::kPseudoLinear: return {Hypothesis::kBalanced, Hypothesis::kPseudomanifold};
    case BoundKind::kPseudoGeneral: return {Hypothesis::kPseudomanifold};
  }
  return {};
}

std::optional<Count> BoundSpec::evaluate(int i, int j) const {
  if (i < 0 || j < 0) return std::nullopt;
  switch (kind) {
    case BoundKind::kAnyBalanced: return bound_any_balanced(class_sizes, i, j);
    case BoundKind::kGeneralCM: return bound_general_cm(n, d, i, j);
    case BoundKind::kBalancedCM:
      if (j < 2 || j > d) return std::nullopt;
      return bound_balanced_cm(n, d, class_sizes, i, j);
    case BoundKind::kBalancedCMLexPlusSquares:
      if (j < 2 || j > d) return std::nullopt;
      return bound_balanced_cm_lps(n, d, class_sizes, i, j);
    case BoundKind::kPseudoLinear:
      if (j != 1 || d < 3 || static_cast<Count>(n - d) * (n - 2 * d + 2) / 2 < 1) return std::nullopt;
      return bound_pseudo_linear(n, d, i);
    case BoundKind::kPseudoGeneral:
      if (j != 1 || d < 3) return std::nullopt;
      return bound_pseudo_general(n, d, i);
  }
  return std::nullopt;
}

std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::kBalanced: return "balanced";
    case Hypothesis::kCohenMacaulay: return "cm";
    case Hypothesis::kPseudomanifold: return "pseudomanifold";
  }
  return "unknown";
}

}  // namespace betti
