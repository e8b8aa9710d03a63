#include "betti/lex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace betti {

namespace {

Count isqrt(Count x) {
  if (x < 0) throw std::domain_error("square root of a negative number");
  Count r = 0;
  // Bitwise integer square root; exact for all non-negative 64-bit inputs.
  for (Count bit = Count{1} << 62; bit != 0; bit >>= 2) {
    if (x >= r + bit) {
      x -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
  }
  return r;
}

void check_preconditions([[maybe_unused]] bool ok, [[maybe_unused]] const char* what) {
#ifdef BETTI_VERIFY_PRECONDITIONS
  if (!ok) throw std::invalid_argument(what);
#endif
}

void append_monomials(int m, int degree, int var, std::vector<int>& exps, std::vector<Monomial>& out) {
  if (var == m - 1) {
    exps[static_cast<std::size_t>(var)] = degree;
    out.emplace_back(exps);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    exps[static_cast<std::size_t>(var)] = e;
    append_monomials(m, degree - e, var + 1, exps, out);
  }
  exps[static_cast<std::size_t>(var)] = 0;
}

bool in_ideal(const MonomialSet& generators, const Monomial& u) { return generators.contains_divisor_of(u); }

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("monomial exponents must be non-negative");
  }
}

Monomial Monomial::from_variables(int num_vars, std::span<const int> variables) {
  std::vector<int> exps(static_cast<std::size_t>(num_vars), 0);
  for (int v : variables) {
    if (v < 1 || v > num_vars) throw std::invalid_argument("variable index out of range");
    ++exps[static_cast<std::size_t>(v - 1)];
  }
  return Monomial(std::move(exps));
}

int Monomial::degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

int Monomial::max_variable() const {
  for (int v = num_vars(); v >= 1; --v) {
    if (exponent(v) != 0) return v;
  }
  return 0;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  if (num_vars() != other.num_vars()) throw std::invalid_argument("monomials over different rings");
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    if (exponents_[k] > other.exponents_[k]) return false;
  }
  return true;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int v = 1; v <= num_vars(); ++v) {
    const int e = exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(v);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v) {
  if (u.num_vars() != v.num_vars()) throw std::invalid_argument("lex comparison across different variable counts");
  return u.exponents() <=> v.exponents();
}

void MonomialSet::insert(const Monomial& u) {
  if (u.num_vars() != num_vars_) throw std::invalid_argument("monomial has the wrong number of variables");
  auto& layer = by_degree_[u.degree()];
  auto it = std::lower_bound(layer.begin(), layer.end(), u,
                             [](const Monomial& a, const Monomial& b) { return lex_compare(a, b) > 0; });
  if (it == layer.end() || !(*it == u)) layer.insert(it, u);
}

std::span<const Monomial> MonomialSet::in_degree(int degree) const {
  auto it = by_degree_.find(degree);
  if (it == by_degree_.end()) return {};
  return it->second;
}

std::vector<int> MonomialSet::degrees() const {
  std::vector<int> out;
  for (const auto& [deg, layer] : by_degree_) {
    if (!layer.empty()) out.push_back(deg);
  }
  return out;
}

std::size_t MonomialSet::size() const {
  std::size_t total = 0;
  for (const auto& [deg, layer] : by_degree_) total += layer.size();
  return total;
}

std::vector<Monomial> MonomialSet::all() const {
  std::vector<Monomial> out;
  for (const auto& [deg, layer] : by_degree_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

bool MonomialSet::contains_divisor_of(const Monomial& u) const {
  const int deg = u.degree();
  for (const auto& [d, layer] : by_degree_) {
    if (d > deg) break;
    for (const auto& g : layer) {
      if (g.divides(u)) return true;
    }
  }
  return false;
}

std::pair<int, int> bth_largest_deg2(int m, Count b) {
  if (m < 1 || b < 1 || b > binom(m + 1, 2)) throw std::out_of_range("b outside [1, C(m+1, 2)]");
  const Count disc = 4 * Count{m} * (m + 1) + 1 - 8 * b;
  const Count s = (isqrt(disc) - 1) / 2;
  const Count p = m - s;
  const Count q = b + (p - 1) * (p - 2 * Count{m}) / 2;
  return {static_cast<int>(p), static_cast<int>(q)};
}

std::pair<int, int> bth_largest_sqfree_deg2(int m, Count b) {
  if (m < 2 || b < 1 || b > binom(m, 2)) throw std::out_of_range("b outside [1, C(m, 2)]");
  const Count disc = 4 * Count{m} * (m - 1) + 1 - 8 * b;
  const Count s = (isqrt(disc) - 1) / 2;
  const Count p = m - 1 - s;
  const Count q = b + binom(p + 1, 2) - (p - 1) * m;
  return {static_cast<int>(p), static_cast<int>(q)};
}

std::vector<Monomial> monomials_of_degree(int m, int degree) {
  if (m < 1 || degree < 0) throw std::invalid_argument("need m >= 1 and degree >= 0");
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(m), 0);
  append_monomials(m, degree, 0, exps, out);
  return out;
}

std::vector<Monomial> squarefree_monomials_of_degree(int m, int degree) {
  if (m < 1 || degree < 0) throw std::invalid_argument("need m >= 1 and degree >= 0");
  std::vector<Monomial> out;
  if (degree > m) return out;
  // Index tuples in increasing lex order give monomials in decreasing lex order.
  std::vector<int> pick(static_cast<std::size_t>(degree));
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    out.push_back(Monomial::from_variables(m, pick));
    int pos = degree - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == m - degree + pos + 1) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int t = pos + 1; t < degree; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

MonomialSet lex_segment(int m, int degree, Count count) {
  const auto mons = monomials_of_degree(m, degree);
  if (count < 0 || count > static_cast<Count>(mons.size())) throw std::out_of_range("lex segment longer than the degree");
  MonomialSet out(m);
  for (Count k = 0; k < count; ++k) out.insert(mons[static_cast<std::size_t>(k)]);
  return out;
}

MonomialSet squarefree_lex_segment(int m, int degree, Count count) {
  const auto mons = squarefree_monomials_of_degree(m, degree);
  if (count < 0 || count > static_cast<Count>(mons.size())) throw std::out_of_range("lex segment longer than the degree");
  MonomialSet out(m);
  for (Count k = 0; k < count; ++k) out.insert(mons[static_cast<std::size_t>(k)]);
  return out;
}

MonomialSet power_ideal_generators(int m, int degree) {
  MonomialSet out(m);
  for (const auto& u : monomials_of_degree(m, degree)) out.insert(u);
  return out;
}

MonomialSet lex_plus_power_generators(int m, Count b, int j) {
  if (j < 1) throw std::invalid_argument("lex-plus-power generators need j >= 1");
  if (j == 1) return power_ideal_generators(m, 2);
  MonomialSet out = lex_segment(m, 2, b);
  const MonomialSet lex = out;
  for (const auto& u : monomials_of_degree(m, j + 1)) {
    if (!lex.contains_divisor_of(u)) out.insert(u);
  }
  return out;
}

bool is_minimal(const MonomialSet& generators) {
  const auto all = generators.all();
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = 0; b < all.size(); ++b) {
      if (a != b && all[a].divides(all[b])) return false;
    }
  }
  return true;
}

bool is_stable(const MonomialSet& generators) {
  for (const auto& u : generators.all()) {
    const int top = u.max_variable();
    for (int k = 1; k < top; ++k) {
      std::vector<int> exps = u.exponents();
      --exps[static_cast<std::size_t>(top - 1)];
      ++exps[static_cast<std::size_t>(k - 1)];
      if (!in_ideal(generators, Monomial(std::move(exps)))) return false;
    }
  }
  return true;
}

bool is_squarefree_stable(const MonomialSet& generators) {
  for (const auto& u : generators.all()) {
    if (!u.is_squarefree()) return false;
    const int top = u.max_variable();
    for (int k = 1; k < top; ++k) {
      if (u.exponent(k) != 0) continue;
      std::vector<int> exps = u.exponents();
      exps[static_cast<std::size_t>(top - 1)] = 0;
      exps[static_cast<std::size_t>(k - 1)] = 1;
      if (!in_ideal(generators, Monomial(std::move(exps)))) return false;
    }
  }
  return true;
}

bool is_squarefree_lex(const MonomialSet& generators) {
  const int m = generators.num_vars();
  for (int deg : generators.degrees()) {
    bool inside = true;
    for (const auto& u : squarefree_monomials_of_degree(m, deg)) {
      const bool member = in_ideal(generators, u);
      if (member && !inside) return false;
      inside = member;
    }
  }
  return true;
}

Count ek_betti(const MonomialSet& generators, int i, int j) {
  check_preconditions(is_minimal(generators) && is_stable(generators),
                      "Eliahou-Kervaire formula needs the minimal generators of a stable ideal");
  if (i < 0 || j < 0) return 0;
  if (i == 0) return j == 0 ? 1 : 0;
  Count total = 0;
  for (const auto& u : generators.in_degree(j + 1)) total = checked_add(total, binom(u.max_variable() - 1, i - 1));
  return total;
}

Count sqfree_ek_betti(const MonomialSet& generators, int i, int j) {
  for (const auto& u : generators.all()) {
    if (!u.is_squarefree()) throw std::invalid_argument("squarefree Eliahou-Kervaire formula got " + u.to_string());
  }
  check_preconditions(is_minimal(generators) && is_squarefree_stable(generators),
                      "squarefree Eliahou-Kervaire formula needs the minimal generators of a squarefree stable ideal");
  if (i < 0 || j < 0) return 0;
  if (i == 0) return j == 0 ? 1 : 0;
  Count total = 0;
  for (const auto& u : generators.in_degree(j + 1)) {
    total = checked_add(total, binom(u.max_variable() - j - 1, i - 1));
  }
  return total;
}

Count lex_plus_squares_betti(const MonomialSet& squarefree_lex, int m, int i, int j) {
  if (squarefree_lex.num_vars() != m) throw std::invalid_argument("ideal lives in a different polynomial ring");
  for (const auto& u : squarefree_lex.all()) {
    if (!u.is_squarefree()) throw std::invalid_argument("lex-plus-squares input must be squarefree");
  }
  check_preconditions(is_minimal(squarefree_lex) && is_squarefree_lex(squarefree_lex),
                      "lex-plus-squares recursion needs the minimal generators of a squarefree lex ideal");
  if (i < 0 || j < 0) return 0;
  const auto gens = squarefree_lex.all();
  Count total = 0;
  for (std::uint32_t f = 0; f < (std::uint32_t{1} << m); ++f) {
    const int k = std::popcount(f);
    if (k > j || k > i) continue;
    // (L : x_F) in the variables outside F, renumbered in increasing order.
    MonomialSet colon(m - k);
    bool unit = false;
    for (const auto& u : gens) {
      std::vector<int> exps;
      for (int v = 0; v < m; ++v) {
        if (!((f >> v) & 1U)) exps.push_back(u.exponents()[static_cast<std::size_t>(v)]);
      }
      Monomial reduced(std::move(exps));
      if (reduced.degree() == 0) {
        unit = true;
        break;
      }
      if (!colon.contains_divisor_of(reduced)) colon.insert(reduced);
    }
    if (unit) continue;
    // Members inserted early may be multiples of later, smaller ones.
    MonomialSet minimal(m - k);
    for (const auto& u : colon.all()) {
      if (!minimal.contains_divisor_of(u)) minimal.insert(u);
    }
    const int a = i - k, c = j - k;
    Count term = 0;
    if (a == 0) {
      term = c == 0 ? 1 : 0;
    } else {
      for (const auto& u : minimal.in_degree(c + 1)) term = checked_add(term, binom(u.max_variable() - c - 1, a - 1));
    }
    total = checked_add(total, term);
  }
  return total;
}

}  // namespace betti
