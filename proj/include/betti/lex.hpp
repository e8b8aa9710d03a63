#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "betti/binomial.hpp"

namespace betti {

/// Monomial x_1^{a_1} ... x_m^{a_m}; variables are 1-based in names and
/// formulas, 0-based in the exponent vector.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);
  /// Product of the listed 1-based variables (repetition allowed).
  static Monomial from_variables(int num_vars, std::span<const int> variables);

  int num_vars() const { return static_cast<int>(exponents_.size()); }
  const std::vector<int>& exponents() const { return exponents_; }
  int exponent(int variable) const { return exponents_[static_cast<std::size_t>(variable - 1)]; }
  int degree() const;
  /// Largest index of a variable dividing the monomial; 0 for the constant 1.
  int max_variable() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  /// Text form such as "x1^2*x3"; the constant monomial prints as "1".
  std::string to_string() const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exponents_;
};

/// Lexicographic comparison of exponent vectors (x_1 > x_2 > ... > x_m).
/// Throws std::invalid_argument when the variable counts differ.
std::strong_ordering lex_compare(const Monomial& u, const Monomial& v);

/// Monomials grouped by degree, each degree sorted in decreasing lex order
/// without repetitions.
class MonomialSet {
 public:
  explicit MonomialSet(int num_vars) : num_vars_(num_vars) {}

  int num_vars() const { return num_vars_; }
  void insert(const Monomial& u);
  std::span<const Monomial> in_degree(int degree) const;
  std::vector<int> degrees() const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  /// Every member, by increasing degree and decreasing lex order within a degree.
  std::vector<Monomial> all() const;
  /// True when some member divides u.
  bool contains_divisor_of(const Monomial& u) const;

 private:
  int num_vars_;
  std::map<int, std::vector<Monomial>> by_degree_;
};

/// Indices (p, q), p <= q, of the b-th largest degree-2 monomial x_p x_q in m
/// variables. Valid for 1 <= b <= C(m+1, 2).
std::pair<int, int> bth_largest_deg2(int m, Count b);
/// Same for squarefree degree-2 monomials (p < q), 1 <= b <= C(m, 2).
std::pair<int, int> bth_largest_sqfree_deg2(int m, Count b);

/// All monomials (resp. squarefree monomials) of the degree, decreasing lex.
std::vector<Monomial> monomials_of_degree(int m, int degree);
std::vector<Monomial> squarefree_monomials_of_degree(int m, int degree);

/// The `count` lex-largest monomials of the degree.
MonomialSet lex_segment(int m, int degree, Count count);
MonomialSet squarefree_lex_segment(int m, int degree, Count count);
/// Minimal generators of (x_1, ..., x_m)^degree.
MonomialSet power_ideal_generators(int m, int degree);
/// Minimal generators of Lex(b) + (x_1, ..., x_m)^{j+1}, where Lex(b) is the
/// degree-2 lex segment of length b. Needs j >= 1.
MonomialSet lex_plus_power_generators(int m, Count b, int j);

/// Stability of the ideal minimally generated by G: for u in G and
/// k < max(u), x_k u / x_max(u) lies in the ideal.
bool is_stable(const MonomialSet& generators);
/// Squarefree stability: for u in G and k < max(u) outside supp(u),
/// x_k u / x_max(u) lies in the ideal.
bool is_squarefree_stable(const MonomialSet& generators);
/// Squarefree lex: the squarefree part of every generated degree is an
/// initial lex segment of the squarefree monomials of that degree.
bool is_squarefree_lex(const MonomialSet& generators);
/// No member divides another member.
bool is_minimal(const MonomialSet& generators);

/// beta_{i,i+j}(S/I) by the Eliahou-Kervaire formula
/// sum over u in G_{j+1} of C(max(u) - 1, i - 1); beta_{0,0} = 1.
/// G must minimally generate a stable ideal.
Count ek_betti(const MonomialSet& generators, int i, int j);
/// Squarefree version: sum over u in G_{j+1} of C(max(u) - j - 1, i - 1).
Count sqfree_ek_betti(const MonomialSet& generators, int i, int j);

/// beta_{i,i+j}(S/(L + P)) with P = (x_1^2, ..., x_m^2), summing
/// beta_{i-k,(i-k)+(j-k)}(S/(L : x_F)) over k = 0..j and |F| = k. Each colon
/// ideal lives in the m - k variables outside F and is evaluated with the
/// squarefree Eliahou-Kervaire formula.
Count lex_plus_squares_betti(const MonomialSet& squarefree_lex, int m, int i, int j);

}  // namespace betti
