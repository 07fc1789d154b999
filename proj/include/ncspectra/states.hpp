#pragma once
#include "ncspectra/half_int.hpp"

#include <stdexcept>
#include <string>

namespace ncspectra {

//! Hydrogen bound state in the product basis |n,l,m>.
struct UncoupledState {
  int n = 1;
  int l = 0;
  int m = 0;

  bool valid() const { return n >= 1 && l >= 0 && l <= n - 1 && m >= -l && m <= l; }

  void validate() const {
    if (!valid())
      throw std::domain_error("invalid |n,l,m> quantum numbers: n=" +
                              std::to_string(n) + " l=" + std::to_string(l) +
                              " m=" + std::to_string(m));
  }
};

//! Hydrogen bound state in the coupled basis |n,l,s=1/2,j,j_z>.
struct CoupledState {
  int n = 1;
  int l = 0;
  HalfInt j = HalfInt::from_twice(1);
  HalfInt jz = HalfInt::from_twice(1);

  bool valid() const {
    if (n < 1 || l < 0 || l > n - 1)
      return false;
    // j = l +- 1/2, only the + branch exists for l = 0
    const int tj = j.twice();
    if (tj != 2 * l + 1 && tj != 2 * l - 1)
      return false;
    if (tj < 1)
      return false;
    // |j_z| <= j with j - j_z integer (same doubled parity)
    if (jz.abs() > j || (j.twice() - jz.twice()) % 2 != 0)
      return false;
    return true;
  }

  void validate() const {
    if (!valid())
      throw std::domain_error("invalid |n,l,j,j_z> quantum numbers: n=" +
                              std::to_string(n) + " l=" + std::to_string(l) +
                              " j=" + j.str() + " j_z=" + jz.str());
  }
};

} // namespace ncspectra
