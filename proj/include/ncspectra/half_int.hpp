#pragma once
#include "ncspectra/rational.hpp"

#include <compare>
#include <string>

namespace ncspectra {

//! Half-integer stored exactly as twice its value.
//!
//! Covers every j, j_z, s_z quantum number in the library: arithmetic,
//! negation and comparison are exact integer operations on the doubled
//! representation.
class HalfInt {
public:
  constexpr HalfInt() = default;
  //! Construct from twice the value (so HalfInt::from_twice(3) is 3/2).
  static constexpr HalfInt from_twice(int t) { return HalfInt(t); }
  static constexpr HalfInt from_int(int n) { return HalfInt(2 * n); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_half_odd() const { return twice_ % 2 != 0; }

  double to_double() const { return 0.5 * twice_; }
  Rational to_rational() const { return Rational(twice_, 2); }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return HalfInt(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return HalfInt(a.twice_ - b.twice_);
  }
  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt abs() const { return HalfInt(twice_ < 0 ? -twice_ : twice_); }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr std::strong_ordering operator<=>(HalfInt a, HalfInt b) {
    return a.twice_ <=> b.twice_;
  }

  //! "2", "1/2", "-3/2".
  std::string str() const {
    if (is_integer())
      return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

private:
  explicit constexpr HalfInt(int t) : twice_(t) {}
  int twice_ = 0;
};

inline constexpr HalfInt half_of(int twice) { return HalfInt::from_twice(twice); }

} // namespace ncspectra
