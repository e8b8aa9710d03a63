#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace betti {

/// Coefficient field for homology: GF(p) with p < 2^16 prime, or the rationals.
class Field {
 public:
  enum class Kind { kPrime, kRational };

  static Field gf(std::uint32_t p);
  static Field gf2() { return gf(2); }
  static Field rationals() { return Field(Kind::kRational, 0); }
  /// Accepts "gf2", "gfP" for a prime P, and "qq".
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_gf2() const { return kind_ == Kind::kPrime && p_ == 2; }
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

}  // namespace betti
