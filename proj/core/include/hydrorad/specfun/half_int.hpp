#pragma once

#include <compare>
#include <cstdlib>
#include <string>

namespace hydrorad::specfun {

/// An integer or half-integer stored as twice its value, so that triangle and
/// parity tests stay in integer arithmetic.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int v) { return HalfInt(2 * v); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

}  // namespace hydrorad::specfun
