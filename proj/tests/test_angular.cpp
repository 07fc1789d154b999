#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncspectra/angular.hpp"
#include "ncspectra/exact_coeff.hpp"
#include "ncspectra/half_int.hpp"
#include "ncspectra/rational.hpp"
#include "ncspectra/states.hpp"

#include <cmath>
#include <cstdint>

using namespace ncspectra;

namespace {
HalfInt h2(int twice) { return HalfInt::from_twice(twice); }
} // namespace

TEST_CASE("rational arithmetic is normalized and exact") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(3, 4) + Rational(1, 4) == Rational(1));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK(Rational(1, 3) / Rational(1, 6) == Rational(2));
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational overflow is detected, not wrapped") {
  const Rational big(INT64_MAX);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  // products that reduce back into range are fine
  CHECK(Rational(INT64_MAX, 2) * Rational(2, INT64_MAX) == Rational(1));
}

TEST_CASE("half-integers behave exactly") {
  CHECK(h2(3).str() == "3/2");
  CHECK(h2(-3).str() == "-3/2");
  CHECK(h2(4).str() == "2");
  CHECK(h2(3).is_half_odd());
  CHECK(h2(4).is_integer());
  CHECK(h2(3) + h2(1) == h2(4));
  CHECK(-h2(3) == h2(-3));
  CHECK(h2(-3).abs() == h2(3));
  CHECK(h2(1) < h2(3));
  CHECK(h2(3).to_rational() == Rational(3, 2));
  CHECK(HalfInt::from_int(2) == h2(4));
}

TEST_CASE("exact coefficients: signed square roots of rationals") {
  const ExactCoeff c = ExactCoeff::sqrt_of(Rational(2, 3), 1);
  CHECK(c.str() == "+sqrt(2/3)");
  CHECK(c.squared() == Rational(2, 3));
  CHECK(c.value() == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
  CHECK((-c).str() == "-sqrt(2/3)");
  CHECK(ExactCoeff::one().str() == "+sqrt(1/1)");
  CHECK(ExactCoeff::zero().str() == "0");
  CHECK(ExactCoeff::sqrt_of(Rational(0), 1).is_zero());
  CHECK((c * c).squared() == Rational(4, 9));
  CHECK((c * -c) == ExactCoeff::sqrt_of(Rational(4, 9), -1));
  CHECK_THROWS_AS(ExactCoeff::sqrt_of(Rational(-1, 2), 1), std::domain_error);
}

TEST_CASE("state validation") {
  CHECK((UncoupledState{2, 1, -1}.valid()));
  CHECK_FALSE((UncoupledState{2, 2, 0}.valid()));
  CHECK_FALSE((UncoupledState{2, 1, 2}.valid()));
  CHECK_THROWS_AS((UncoupledState{0, 0, 0}.validate()), std::domain_error);

  CHECK((CoupledState{2, 1, h2(3), h2(-3)}.valid()));
  CHECK((CoupledState{2, 1, h2(1), h2(1)}.valid()));
  CHECK_FALSE((CoupledState{2, 1, h2(5), h2(1)}.valid())); // j != l +- 1/2
  CHECK_FALSE((CoupledState{2, 1, h2(3), h2(5)}.valid())); // |j_z| > j
  CHECK_FALSE((CoupledState{1, 0, h2(-1), h2(-1)}.valid()));
  CHECK_THROWS_AS((CoupledState{2, 1, h2(3), h2(4)}.validate()),
                  std::domain_error);
}

TEST_CASE("coupling coefficients match the closed 2x2 table") {
  // j = l+1/2 branch
  CHECK(angular::cg_half(1, h2(3), h2(1), h2(1)) ==
        ExactCoeff::sqrt_of(Rational(2, 3), 1));
  CHECK(angular::cg_half(1, h2(3), h2(1), h2(-1)) ==
        ExactCoeff::sqrt_of(Rational(1, 3), 1));
  // j = l-1/2 branch carries the minus sign on s_z = +1/2
  CHECK(angular::cg_half(1, h2(1), h2(1), h2(1)) ==
        ExactCoeff::sqrt_of(Rational(1, 3), -1));
  CHECK(angular::cg_half(1, h2(1), h2(1), h2(-1)) ==
        ExactCoeff::sqrt_of(Rational(2, 3), 1));
  // l = 0: single product state
  CHECK(angular::cg_half(0, h2(1), h2(1), h2(1)) == ExactCoeff::one());
  CHECK(angular::cg_half(0, h2(1), h2(1), h2(-1)).is_zero());
}

TEST_CASE("coupling coefficient selection rules and domain errors") {
  // implied l_z out of range is an exact zero, not an error
  CHECK(angular::cg_half(1, h2(3), h2(3), h2(-1)).is_zero());
  CHECK_THROWS_AS(angular::cg_half(1, h2(5), h2(1), h2(1)), std::domain_error);
  CHECK_THROWS_AS(angular::cg_half(1, h2(3), h2(5), h2(1)), std::domain_error);
  CHECK_THROWS_AS(angular::cg_half(0, h2(-1), h2(1), h2(1)), std::domain_error);
  CHECK_THROWS_AS(angular::cg_half(1, h2(3), h2(1), h2(3)), std::domain_error);
}

TEST_CASE("normalization and branch orthogonality are exact up to l = 10") {
  for (int l = 0; l <= 10; ++l) {
    for (int tj : {2 * l - 1, 2 * l + 1}) {
      if (tj < 1)
        continue;
      for (int tjz = -tj; tjz <= tj; tjz += 2) {
        Rational norm(0);
        for (int tsz : {-1, 1})
          norm += angular::cg_half(l, h2(tj), h2(tjz), h2(tsz)).squared();
        CHECK(norm == Rational(1));
      }
    }
    // orthogonality of the two branches at shared j_z
    for (int tjz = -(2 * l - 1); tjz <= 2 * l - 1 && l >= 1; tjz += 2) {
      const ExactCoeff up = angular::cg_half(l, h2(2 * l + 1), h2(tjz), h2(1)) *
                            angular::cg_half(l, h2(2 * l - 1), h2(tjz), h2(1));
      const ExactCoeff dn = angular::cg_half(l, h2(2 * l + 1), h2(tjz), h2(-1)) *
                            angular::cg_half(l, h2(2 * l - 1), h2(tjz), h2(-1));
      const bool cancels = (up.is_zero() && dn.is_zero()) ||
                           (up.radicand() == dn.radicand() &&
                            up.sign() == -dn.sign());
      CHECK(cancels);
    }
  }
}

TEST_CASE("pair solver reproduces the table entries exactly") {
  // ratio examples at both eigenvalues
  const angular::CgPair p1 = angular::cg_pair_solve(1, h2(1), 1);
  REQUIRE(p1.ratio_defined);
  CHECK(p1.ratio_b_over_a == ExactCoeff::sqrt_of(Rational(2), 1));

  const angular::CgPair p2 = angular::cg_pair_solve(2, h2(-1), -3);
  REQUIRE(p2.ratio_defined);
  CHECK(p2.ratio_b_over_a == ExactCoeff::sqrt_of(Rational(3, 2), -1));

  // degenerate stretched case: single product state, one coefficient is 1
  const angular::CgPair st = angular::cg_pair_solve(1, h2(3), 1);
  CHECK_FALSE(st.ratio_defined);
  CHECK(st.a.squared() + st.b.squared() == Rational(1));
  CHECK((st.a.is_zero() || st.b.is_zero()));
  CHECK(st.b == ExactCoeff::one());
  const angular::CgPair sb = angular::cg_pair_solve(1, h2(-3), 1);
  CHECK(sb.a == ExactCoeff::one());
  CHECK(sb.b.is_zero());

  // the eigenvalue not present in the degenerate subspace is rejected
  CHECK_THROWS_AS(angular::cg_pair_solve(1, h2(3), -2), std::domain_error);
  CHECK_THROWS_AS(angular::cg_pair_solve(1, h2(1), 5), std::domain_error);

  // normalized pair must equal the table columns for both branches
  for (int l = 1; l <= 6; ++l) {
    for (int tjz = -(2 * l + 1); tjz <= 2 * l + 1; tjz += 2) {
      const angular::CgPair up = angular::cg_pair_solve(l, h2(tjz), l);
      CHECK(up.a == angular::cg_half(l, h2(2 * l + 1), h2(tjz), h2(-1)));
      CHECK(up.b == angular::cg_half(l, h2(2 * l + 1), h2(tjz), h2(1)));
      if (std::abs(tjz) <= 2 * l - 1) {
        const angular::CgPair dn = angular::cg_pair_solve(l, h2(tjz), -l - 1);
        CHECK(dn.a == angular::cg_half(l, h2(2 * l - 1), h2(tjz), h2(-1)));
        CHECK(dn.b == angular::cg_half(l, h2(2 * l - 1), h2(tjz), h2(1)));
      }
    }
  }
}

TEST_CASE("coupled-basis L_z expectation: closed form and pinned values") {
  CHECK(angular::lz_coupled_expectation(1, h2(3), h2(3)) == Rational(1));
  CHECK(angular::lz_coupled_expectation(1, h2(1), h2(1)) == Rational(2, 3));
  CHECK(angular::lz_coupled_expectation(0, h2(1), h2(-1)) == Rational(0));
  CHECK(angular::lz_via_completeness(1, h2(3), h2(1)) == Rational(1, 3));
  CHECK(angular::lz_via_completeness(0, h2(1), h2(1)) == Rational(0));
  CHECK(angular::lz_via_completeness(2, h2(5), h2(5)) == Rational(2));
  CHECK_THROWS_AS(angular::lz_coupled_expectation(1, h2(7), h2(1)),
                  std::domain_error);
}

TEST_CASE("both L_z routes agree exactly and are odd in j_z, l <= 10") {
  for (int l = 0; l <= 10; ++l) {
    for (int tj : {2 * l - 1, 2 * l + 1}) {
      if (tj < 1)
        continue;
      for (int tjz = -tj; tjz <= tj; tjz += 2) {
        const Rational a = angular::lz_coupled_expectation(l, h2(tj), h2(tjz));
        const Rational b = angular::lz_via_completeness(l, h2(tj), h2(tjz));
        CHECK(a == b);
        CHECK(angular::lz_coupled_expectation(l, h2(tj), h2(-tjz)) == -a);
      }
    }
  }
}

TEST_CASE("general coupling oracle: pinned values and selection rules") {
  // singlet formed from two spins 1/2
  CHECK(angular::cg_general(h2(1), h2(1), h2(1), h2(-1), h2(0), h2(0)) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));
  // stretched states are exactly 1
  CHECK(angular::cg_general(h2(2), h2(2), h2(1), h2(1), h2(3), h2(3)) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(angular::cg_general(h2(5), h2(5), h2(4), h2(4), h2(9), h2(9)) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(angular::cg_general(h2(2), h2(2), h2(1), h2(-1), h2(3), h2(1)) ==
        doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-13));

  // selection rules return exact zero
  CHECK(angular::cg_general(h2(2), h2(2), h2(1), h2(-1), h2(3), h2(3)) == 0.0);
  CHECK(angular::cg_general(h2(2), h2(0), h2(1), h2(0), h2(7), h2(0)) == 0.0);
  CHECK(angular::cg_general(h2(2), h2(4), h2(1), h2(1), h2(3), h2(5)) == 0.0);
}

TEST_CASE("table coefficients agree with the ladder-recursion oracle") {
  double max_err = 0.0;
  for (int l = 0; l <= 10; ++l) {
    for (int tj : {2 * l - 1, 2 * l + 1}) {
      if (tj < 1)
        continue;
      for (int tjz = -tj; tjz <= tj; tjz += 2) {
        for (int tsz : {-1, 1}) {
          const double exact =
              angular::cg_half(l, h2(tj), h2(tjz), h2(tsz)).value();
          const double ref =
              angular::cg_general(HalfInt::from_int(l), h2(tjz - tsz), h2(1),
                                  h2(tsz), h2(tj), h2(tjz));
          max_err = std::max(max_err, std::abs(exact - ref));
        }
      }
    }
  }
  CHECK(max_err <= 1e-12);
  MESSAGE("max |table - ladder oracle| = ", max_err);
}

TEST_CASE("oracle magnitude bound |cg| <= 1") {
  for (int tj1 = 1; tj1 <= 6; ++tj1)
    for (int tj2 = 1; tj2 <= 6; ++tj2)
      for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2)
        for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2)
          for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
            const double v = angular::cg_general(h2(tj1), h2(tm1), h2(tj2),
                                                 h2(tm2), h2(tJ), h2(tm1 + tm2));
            CHECK(std::abs(v) <= 1.0 + 1e-12);
          }
}
