#pragma once

#include <string>
#include <vector>

#include "betti/binomial.hpp"
#include "betti/field.hpp"

namespace betti {

/// Graded Betti numbers beta_{i,i+j} for 0 <= i <= n and 0 <= j <= d. Reads
/// outside that box return 0; writes outside it throw.
class BettiTable {
 public:
  BettiTable(int n, int d, Field field = Field::gf2());

  int n() const { return n_; }
  int d() const { return d_; }
  const Field& field() const { return field_; }

  Count at(int i, int j) const;
  void set(int i, int j, Count value);
  void add(int i, int j, Count value);

  /// Largest i with a non-zero entry (0 for the trivial table).
  int max_i() const;
  /// Largest j with a non-zero entry.
  int max_j() const;
  std::vector<Count> row(int j) const;

  /// CSV with header "i,j,beta", one line per non-zero entry, sorted by (j, i).
  std::string to_csv() const;
  /// Markdown table with one row per strand j and one column per i.
  std::string to_markdown() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b);

 private:
  bool in_range(int i, int j) const { return i >= 0 && i <= n_ && j >= 0 && j <= d_; }

  int n_;
  int d_;
  Field field_;
  std::vector<Count> entries_;
};

/// Entry-wise comparison of beta_{i,i+j} with beta_{n-d-i, n-i-j} for
/// 0 <= i <= n-d and 0 <= j <= d; every entry outside that range must be 0.
bool check_poincare_duality(const BettiTable& table, int n, int d);

}  // namespace betti
