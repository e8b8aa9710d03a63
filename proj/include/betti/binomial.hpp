#pragma once

#include <cstdint>
#include <stdexcept>

namespace betti {

/// Exact counting type used for Betti numbers and every closed-form bound.
/// Signed so that alternating sums can be accumulated directly.
using Count = std::int64_t;

inline Count checked_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("betti: integer overflow in sum");
  return out;
}

inline Count checked_sub(Count a, Count b) {
  Count out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("betti: integer overflow in difference");
  return out;
}

inline Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("betti: integer overflow in product");
  return out;
}

/// Binomial coefficient with the convention used throughout the bounds:
/// C(a, b) = 0 whenever b < 0 or a < b, and C(a, 0) = 1 for a >= 0.
inline Count binom(Count a, Count b) {
  if (b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  unsigned __int128 acc = 1;
  for (Count t = 1; t <= b; ++t) {
    // acc * (a - b + t) / t stays integral at every step
    acc = acc * static_cast<unsigned __int128>(a - b + t) / static_cast<unsigned __int128>(t);
    if (acc > static_cast<unsigned __int128>(INT64_MAX)) throw std::overflow_error("betti: binomial overflow");
  }
  return static_cast<Count>(acc);
}

}  // namespace betti
