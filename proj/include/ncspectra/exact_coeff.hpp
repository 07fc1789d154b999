#pragma once
#include "ncspectra/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ncspectra {

//! Signed square root of a nonnegative rational: value = sign * sqrt(p/q).
//!
//! This is the exact form every s=1/2 Clebsch-Gordan coefficient takes.
//! Squares and products stay rational, so normalization and orthogonality
//! identities can be proven without floating point.
class ExactCoeff {
public:
  ExactCoeff() = default;

  static ExactCoeff zero() { return {}; }

  //! sign * sqrt(radicand); radicand must be >= 0. A zero radicand collapses
  //! the sign to 0.
  static ExactCoeff sqrt_of(const Rational& radicand, int sign) {
    if (radicand.sign() < 0)
      throw std::domain_error("ExactCoeff: negative radicand");
    ExactCoeff c;
    c.radicand_ = radicand;
    c.sign_ = radicand.is_zero() ? 0 : (sign < 0 ? -1 : 1);
    return c;
  }

  static ExactCoeff one() { return sqrt_of(Rational(1), 1); }

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  //! The exact square, sign discarded.
  Rational squared() const { return radicand_; }

  double value() const {
    return sign_ * std::sqrt(radicand_.to_double());
  }

  friend ExactCoeff operator*(const ExactCoeff& a, const ExactCoeff& b) {
    return sqrt_of(a.radicand_ * b.radicand_, a.sign_ * b.sign_);
  }
  ExactCoeff operator-() const {
    ExactCoeff c = *this;
    c.sign_ = -c.sign_;
    return c;
  }

  friend bool operator==(const ExactCoeff&, const ExactCoeff&) = default;

  //! "+sqrt(2/3)", "-sqrt(1/3)", "0". Integral radicands keep the /1 so the
  //! format is uniform: "+sqrt(1/1)".
  std::string str() const {
    if (sign_ == 0)
      return "0";
    std::string s = sign_ < 0 ? "-" : "+";
    s += "sqrt(" + std::to_string(radicand_.num()) + "/" +
         std::to_string(radicand_.den()) + ")";
    return s;
  }

private:
  int sign_ = 0;          // -1, 0, +1
  Rational radicand_;     // >= 0, lowest terms
};

} // namespace ncspectra
