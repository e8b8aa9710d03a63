#include "betti/field.hpp"

#include <charconv>
#include <stdexcept>

namespace betti {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::gf(std::uint32_t p) {
  if (p >= (1U << 16) || !is_prime(p)) throw std::invalid_argument("field characteristic must be a prime below 65536");
  return Field(Kind::kPrime, p);
}

Field Field::parse(std::string_view text) {
  if (text == "qq" || text == "QQ") return rationals();
  if (text.size() > 2 && (text.substr(0, 2) == "gf" || text.substr(0, 2) == "GF")) {
    std::uint32_t p = 0;
    const auto digits = text.substr(2);
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && end == digits.data() + digits.size()) return gf(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected gf2, gfP or qq)");
}

std::string Field::name() const { return kind_ == Kind::kRational ? "qq" : "gf" + std::to_string(p_); }

}  // namespace betti
