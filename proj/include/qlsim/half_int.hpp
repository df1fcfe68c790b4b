#pragma once

#include <compare>
#include <cstdlib>
#include <string>

#include "qlsim/errors.hpp"

namespace qlsim {

/// Exact half-integer arithmetic, stored as the doubled value. Spin
/// projections and excitation numbers are ladder indices, so they must
/// compare exactly; doubles are never used for bookkeeping.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int whole) : twice_(2 * whole) {}  // NOLINT: implicit by design

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ - b.twice_);
  }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

 private:
  int twice_ = 0;
};

inline std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice() / 2);
  return std::to_string(h.twice()) + "/2";
}

/// Accepts "2", "-3/2" and exact decimal halves such as "1.5".
inline HalfInt parse_half_int(const std::string& text) {
  if (text.empty()) throw DomainError("empty half-integer literal");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    if (text.substr(slash + 1) != "2")
      throw DomainError("half-integer denominator must be 2: " + text);
    return HalfInt::from_twice(std::stoi(text.substr(0, slash)));
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    const std::string frac = text.substr(dot + 1);
    const std::string whole = text.substr(0, dot);
    const int sign = (!whole.empty() && whole[0] == '-') ? -1 : 1;
    const int base = whole.empty() || whole == "-" ? 0 : std::stoi(whole);
    if (frac == "5")
      return HalfInt::from_twice(2 * base + sign);
    if (frac == "0" || frac == "00")
      return HalfInt::from_twice(2 * base);
    throw DomainError("not an exact half-integer: " + text);
  }
  return HalfInt(std::stoi(text));
}

}  // namespace qlsim
