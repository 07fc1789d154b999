#pragma once
#include <string>
#include <vector>

namespace ncspectra::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured_error = 0.0; //!< largest error found, 0 for exact checks
  std::string detail;          //!< optional extra report lines
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const;
  //! one line per check: [PASS|FAIL] name (err=...), details indented
  std::string report() const;
};

//! Symbolic commutator table of the shifted coordinates plus the square-root
//! argument expansion, all as exact normal-form equalities.
SuiteResult run_bopp();

//! Exact normalization and branch orthogonality of the spin-orbit coupling
//! coefficients for l <= 10, plus agreement with the ladder-recursion
//! evaluation within 1e-12.
SuiteResult run_cg();

//! Closed-form <1/r^3> against Gauss-Laguerre quadrature for
//! 1 <= l <= n-1 <= 9 (1e-8 relative), plus quadrature normalization <r^0>.
SuiteResult run_radial(int node_count = 200);

//! Truncated-basis diagonalization against the closed-form first-order
//! shifts: residual bound 10 theta_z^2 for n <= 3 at theta_z = 1e-4, and
//! theta^2 residual scaling (halving ratio in [2.5,6], tenth ratio in
//! [50,200]).
SuiteResult run_oracle(int node_count = 200);

//! All four suites in order.
std::vector<SuiteResult> run_all(int node_count = 200);

} // namespace ncspectra::verify
