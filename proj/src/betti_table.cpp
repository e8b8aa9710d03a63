#include "betti/betti_table.hpp"

#include <sstream>
#include <stdexcept>

namespace betti {

BettiTable::BettiTable(int n, int d, Field field) : n_(n), d_(d), field_(field) {
  if (n < 0 || d < 0) throw std::invalid_argument("Betti table dimensions must be non-negative");
  entries_.assign(static_cast<std::size_t>((n + 1) * (d + 1)), 0);
}

Count BettiTable::at(int i, int j) const {
  if (!in_range(i, j)) return 0;
  return entries_[static_cast<std::size_t>(j * (n_ + 1) + i)];
}

void BettiTable::set(int i, int j, Count value) {
  if (!in_range(i, j)) {
    if (value == 0) return;
    throw std::out_of_range("Betti entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside the table");
  }
  entries_[static_cast<std::size_t>(j * (n_ + 1) + i)] = value;
}

void BettiTable::add(int i, int j, Count value) { set(i, j, checked_add(at(i, j), value)); }

int BettiTable::max_i() const {
  int best = 0;
  for (int j = 0; j <= d_; ++j) {
    for (int i = 0; i <= n_; ++i) {
      if (at(i, j) != 0 && i > best) best = i;
    }
  }
  return best;
}

int BettiTable::max_j() const {
  int best = 0;
  for (int j = 0; j <= d_; ++j) {
    for (int i = 0; i <= n_; ++i) {
      if (at(i, j) != 0) best = j;
    }
  }
  return best;
}

std::vector<Count> BettiTable::row(int j) const {
  std::vector<Count> out;
  for (int i = 0; i <= n_; ++i) out.push_back(at(i, j));
  return out;
}

std::string BettiTable::to_csv() const {
  std::ostringstream out;
  out << "i,j,beta\n";
  for (int j = 0; j <= d_; ++j) {
    for (int i = 0; i <= n_; ++i) {
      if (at(i, j) != 0) out << i << ',' << j << ',' << at(i, j) << '\n';
    }
  }
  return out.str();
}

std::string BettiTable::to_markdown() const {
  const int last_i = max_i();
  std::ostringstream out;
  out << "| j \\ i |";
  for (int i = 0; i <= last_i; ++i) out << ' ' << i << " |";
  out << "\n|---|";
  for (int i = 0; i <= last_i; ++i) out << "---|";
  out << '\n';
  for (int j = 0; j <= max_j(); ++j) {
    out << "| " << j << " |";
    for (int i = 0; i <= last_i; ++i) out << ' ' << at(i, j) << " |";
    out << '\n';
  }
  return out.str();
}

bool operator==(const BettiTable& a, const BettiTable& b) {
  const int n = std::max(a.n_, b.n_), d = std::max(a.d_, b.d_);
  for (int j = 0; j <= d; ++j) {
    for (int i = 0; i <= n; ++i) {
      if (a.at(i, j) != b.at(i, j)) return false;
    }
  }
  return true;
}

bool check_poincare_duality(const BettiTable& table, int n, int d) {
  if (n < d || d < 0) return false;
  for (int j = 0; j <= table.d(); ++j) {
    for (int i = 0; i <= table.n(); ++i) {
      const bool inside = i <= n - d && j <= d;
      if (!inside) {
        if (table.at(i, j) != 0) return false;
      } else if (table.at(i, j) != table.at(n - d - i, d - j)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace betti
