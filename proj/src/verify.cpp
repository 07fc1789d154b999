#include "ncspectra/verify.hpp"

#include "ncspectra/angular.hpp"
#include "ncspectra/opalg.hpp"
#include "ncspectra/radial.hpp"
#include "ncspectra/spectrum.hpp"

#include <cmath>
#include <sstream>

namespace ncspectra::verify {

bool SuiteResult::pass() const {
  for (const auto& c : checks)
    if (!c.pass)
      return false;
  return true;
}

std::string SuiteResult::report() const {
  std::ostringstream os;
  os << "suite " << suite << ":\n";
  for (const auto& c : checks) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (c.measured_error != 0.0)
      os << " (err=" << c.measured_error << ")";
    os << '\n';
    if (!c.detail.empty()) {
      std::istringstream lines(c.detail);
      std::string line;
      while (std::getline(lines, line))
        os << "      " << line << '\n';
    }
  }
  os << "  suite result: " << (pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

//==============================================================================
// bopp

SuiteResult run_bopp() {
  using opalg::CRational;
  using opalg::OperatorPoly;

  SuiteResult suite{"bopp", {}};
  const CRational i_unit = CRational::i_unit();

  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const OperatorPoly bi = opalg::bopp_shift(i);
      const OperatorPoly bj = opalg::bopp_shift(j);
      const OperatorPoly pi = OperatorPoly::momentum(i);
      const OperatorPoly pj = OperatorPoly::momentum(j);

      const bool xx = opalg::op_commutator(bi, bj) ==
                      OperatorPoly::theta(i, j).scaled(i_unit);
      const OperatorPoly xp_expect =
          i == j ? OperatorPoly::hbar(1).scaled(i_unit) : OperatorPoly::zero();
      const bool xp = opalg::op_commutator(bi, pj) == xp_expect;
      const bool pp = opalg::op_commutator(pi, pj).is_zero();

      CheckResult c;
      std::ostringstream name;
      name << "commutators (i=" << i << ", j=" << j << "): [x'_i,x'_j]=i th_ij,"
           << " [x'_i,p_j]=i hbar d_ij, [p_i,p_j]=0";
      c.name = name.str();
      c.pass = xx && xp && pp;
      if (!c.pass)
        c.detail = std::string("[x',x'] ") + (xx ? "ok" : "MISMATCH") +
                   ", [x',p] " + (xp ? "ok" : "MISMATCH") + ", [p,p] " +
                   (pp ? "ok" : "MISMATCH");
      suite.checks.push_back(std::move(c));
    }
  }

  const opalg::SqrtArgumentProof proof = opalg::verify_sqrt_argument_identity();
  CheckResult c;
  c.name = "square-root argument identity (antisymmetry cancellation)";
  c.pass = proof.pass;
  c.detail = proof.report();
  suite.checks.push_back(std::move(c));

  return suite;
}

//==============================================================================
// cg

SuiteResult run_cg() {
  SuiteResult suite{"cg", {}};

  bool norm_ok = true, orth_ok = true;
  double oracle_err = 0.0;
  const HalfInt shalf = HalfInt::from_twice(1);

  for (int l = 0; l <= 10; ++l) {
    for (int tj : {2 * l - 1, 2 * l + 1}) {
      if (tj < 1)
        continue;
      const HalfInt j = HalfInt::from_twice(tj);
      for (int tjz = -tj; tjz <= tj; tjz += 2) {
        const HalfInt jz = HalfInt::from_twice(tjz);
        Rational norm(0);
        for (int tsz : {-1, 1}) {
          const HalfInt sz = HalfInt::from_twice(tsz);
          const ExactCoeff c = angular::cg_half(l, j, jz, sz);
          norm += c.squared();

          const HalfInt lz = jz - sz;
          const double ref =
              angular::cg_general(HalfInt::from_int(l), lz, shalf, sz, j, jz);
          oracle_err = std::max(oracle_err, std::abs(c.value() - ref));
        }
        if (!(norm == Rational(1)))
          norm_ok = false;

        // orthogonality of the two branches at fixed (l, j_z): the two
        // products share a radicand, so exact cancellation means equal
        // radicands with opposite (or both zero) signs
        if (l >= 1 && tjz <= 2 * l - 1 && tjz >= -(2 * l - 1)) {
          const HalfInt jm = HalfInt::from_twice(2 * l - 1);
          const HalfInt jp = HalfInt::from_twice(2 * l + 1);
          const ExactCoeff p1 = angular::cg_half(l, jp, jz, HalfInt::from_twice(1)) *
                                angular::cg_half(l, jm, jz, HalfInt::from_twice(1));
          const ExactCoeff p2 = angular::cg_half(l, jp, jz, HalfInt::from_twice(-1)) *
                                angular::cg_half(l, jm, jz, HalfInt::from_twice(-1));
          const bool cancel = (p1.is_zero() && p2.is_zero()) ||
                              (p1.radicand() == p2.radicand() &&
                               p1.sign() == -p2.sign());
          if (!cancel)
            orth_ok = false;
        }
      }
    }
  }

  suite.checks.push_back({"normalization sum_{s_z} cg^2 = 1, exact, l <= 10",
                          norm_ok, 0.0, ""});
  suite.checks.push_back({"branch orthogonality at fixed (l, j_z), exact",
                          orth_ok, 0.0, ""});
  suite.checks.push_back({"agreement with ladder-recursion evaluation, l <= 10",
                          oracle_err <= 1e-12, oracle_err, ""});
  return suite;
}

//==============================================================================
// radial

SuiteResult run_radial(int node_count) {
  SuiteResult suite{"radial", {}};
  radial::QuadratureSpec spec;
  spec.node_count = node_count;

  double max_rel = 0.0;
  std::ostringstream table;
  table << "n  l  closed          quadrature      rel.err\n";
  for (int n = 2; n <= 10; ++n) {
    for (int l = 1; l <= n - 1; ++l) {
      const double closed = radial::expect_inv_r3_closed(n, l).to_double();
      const double quad = radial::expect_inv_rk_numeric(n, l, -3, spec);
      const double rel = std::abs(quad - closed) / closed;
      max_rel = std::max(max_rel, rel);
      char line[96];
      std::snprintf(line, sizeof line, "%-2d %-2d %-15.10g %-15.10g %.3g\n", n,
                    l, closed, quad, rel);
      table << line;
    }
  }
  suite.checks.push_back({"<1/r^3> closed form vs quadrature, 1 <= l <= n-1 <= 9",
                          max_rel <= 1e-8, max_rel, table.str()});

  double max_norm = 0.0;
  for (int n = 1; n <= 10; ++n)
    for (int l = 0; l <= n - 1; ++l)
      max_norm = std::max(
          max_norm, std::abs(radial::expect_inv_rk_numeric(n, l, 0, spec) - 1.0));
  suite.checks.push_back({"wavefunction normalization <r^0> = 1, n <= 10",
                          max_norm <= 1e-9, max_norm, ""});
  return suite;
}

//==============================================================================
// oracle

namespace {

struct RatioStats {
  double min_ratio = 1e300;
  double max_ratio = 0.0;
  int counted = 0;

  void add(double num, double den) {
    if (den < 1e-15)
      return; // below float noise, no measurable residual
    const double r = num / den;
    min_ratio = std::min(min_ratio, r);
    max_ratio = std::max(max_ratio, r);
    ++counted;
  }
};

} // namespace

SuiteResult run_oracle(int node_count) {
  SuiteResult suite{"oracle", {}};
  radial::QuadratureSpec spec;
  spec.node_count = node_count;

  const int n_max = 10;
  const double theta = 1e-4;

  const auto h1 = opalg::build_hamiltonian(n_max, theta, false, spec);
  const auto h2 = opalg::build_hamiltonian(n_max, theta / 2, false, spec);
  const auto h10 = opalg::build_hamiltonian(n_max, theta / 10, false, spec);
  const auto g1 = opalg::build_hamiltonian(n_max, theta, true, spec);
  const auto g2 = opalg::build_hamiltonian(n_max, theta / 2, true, spec);
  const auto g10 = opalg::build_hamiltonian(n_max, theta / 10, true, spec);

  double max_resid = 0.0;
  RatioStats halving, tenth;

  for (int n = 1; n <= 3; ++n) {
    for (int l = 0; l <= n - 1; ++l) {
      for (int m = -l; m <= l; ++m) {
        const UncoupledState s{n, l, m};
        const double closed = spectrum::nc_shift_spinless(n, l, m, theta);
        const double r1 =
            std::abs(opalg::first_order_shift_oracle(h1, s) - closed);
        const double r2 = std::abs(opalg::first_order_shift_oracle(h2, s) -
                                   spectrum::nc_shift_spinless(n, l, m, theta / 2));
        const double r10 = std::abs(opalg::first_order_shift_oracle(h10, s) -
                                    spectrum::nc_shift_spinless(n, l, m, theta / 10));
        max_resid = std::max(max_resid, r1);
        halving.add(r1, r2);
        tenth.add(r1, r10);
      }
      for (int tj : {2 * l - 1, 2 * l + 1}) {
        if (tj < 1)
          continue;
        const HalfInt j = HalfInt::from_twice(tj);
        for (int tjz = -tj; tjz <= tj; tjz += 2) {
          const HalfInt jz = HalfInt::from_twice(tjz);
          const CoupledState s{n, l, j, jz};
          const double r1 = std::abs(opalg::first_order_shift_oracle(g1, s) -
                                     spectrum::nc_shift_spinful(n, l, j, jz, theta));
          const double r2 =
              std::abs(opalg::first_order_shift_oracle(g2, s) -
                       spectrum::nc_shift_spinful(n, l, j, jz, theta / 2));
          const double r10 =
              std::abs(opalg::first_order_shift_oracle(g10, s) -
                       spectrum::nc_shift_spinful(n, l, j, jz, theta / 10));
          max_resid = std::max(max_resid, r1);
          halving.add(r1, r2);
          tenth.add(r1, r10);
        }
      }
    }
  }

  {
    CheckResult c;
    c.name = "closed-form shift vs diagonalization, n <= 3, theta_z = 1e-4,"
             " residual <= 10 theta_z^2";
    c.pass = max_resid <= 10 * theta * theta;
    c.measured_error = max_resid;
    suite.checks.push_back(std::move(c));
  }
  {
    CheckResult c;
    std::ostringstream d;
    d << "ratios over " << halving.counted << " states: [" << halving.min_ratio
      << ", " << halving.max_ratio << "]";
    c.name = "residual ratio under theta_z halving in [2.5, 6]";
    c.pass = halving.counted > 0 && halving.min_ratio >= 2.5 &&
             halving.max_ratio <= 6.0;
    c.detail = d.str();
    suite.checks.push_back(std::move(c));
  }
  {
    CheckResult c;
    std::ostringstream d;
    d << "ratios over " << tenth.counted << " states: [" << tenth.min_ratio
      << ", " << tenth.max_ratio << "]";
    c.name = "residual ratio under theta_z tenth in [50, 200]";
    c.pass =
        tenth.counted > 0 && tenth.min_ratio >= 50.0 && tenth.max_ratio <= 200.0;
    c.detail = d.str();
    suite.checks.push_back(std::move(c));
  }
  return suite;
}

std::vector<SuiteResult> run_all(int node_count) {
  return {run_bopp(), run_cg(), run_radial(node_count), run_oracle(node_count)};
}

} // namespace ncspectra::verify
