#pragma once
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncspectra {

//! Exact rational number with int64 numerator/denominator.
//!
//! Always normalized: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
//! Intermediate products use 128-bit arithmetic; results that do not fit
//! back into int64 after reduction throw std::overflow_error.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n) {}
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (d == 0)
      throw std::domain_error("Rational: zero denominator");
    normalize_small();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.den_ + wide(b.num_) * a.den_,
                     wide(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.den_ - wide(b.num_) * a.den_,
                     wide(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0)
      throw std::domain_error("Rational: division by zero");
    return from_wide(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
  }

  //! "3/4", "-1/2", or plain "2" when integral.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1)
      s += "/" + std::to_string(den_);
    return s;
  }

private:
  using wide = __int128;

  long long num_ = 0;
  long long den_ = 1;

  void normalize_small() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = gcd_ll(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0)
      den_ = 1;
  }

  static long long gcd_ll(long long a, long long b) {
    while (b != 0) {
      long long t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(wide n, wide d) {
    if (d == 0)
      throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    wide an = n < 0 ? -n : n;
    wide g = d;
    while (an != 0) {
      wide t = g % an;
      g = an;
      an = t;
    }
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0)
      d = 1;
    constexpr wide lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim)
      throw std::overflow_error("Rational: value exceeds 64-bit range");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }
};

} // namespace ncspectra
