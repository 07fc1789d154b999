#include "ncspectra/angular.hpp"

#include "ncspectra/states.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncspectra::angular {

namespace {

void check_lj(int l, HalfInt j, HalfInt jz) {
  if (l < 0)
    throw std::domain_error("cg_half: l must be nonnegative");
  const int tj = j.twice();
  if (tj != 2 * l + 1 && tj != 2 * l - 1)
    throw std::domain_error("cg_half: j must be l +- 1/2, got j=" + j.str() +
                            " for l=" + std::to_string(l));
  if (tj < 1)
    throw std::domain_error("cg_half: j must be positive");
  if (jz.abs() > j || (jz.twice() - tj) % 2 != 0)
    throw std::domain_error("cg_half: j_z=" + jz.str() + " out of range for j=" +
                            j.str());
}

} // namespace

ExactCoeff cg_half(int l, HalfInt j, HalfInt jz, HalfInt sz) {
  check_lj(l, j, jz);
  if (sz.twice() != 1 && sz.twice() != -1)
    throw std::domain_error("cg_half: s_z must be +-1/2");

  // l_z = j_z - s_z outside [-l, l] is a selection-rule zero
  const HalfInt lz = jz - sz;
  if (!lz.is_integer() || lz.abs() > HalfInt::from_int(l))
    return ExactCoeff::zero();

  // radicands (l +- j_z + 1/2)/(2l+1) in doubled form
  const Rational plus(2 * l + jz.twice() + 1, 2 * (2 * l + 1));
  const Rational minus(2 * l - jz.twice() + 1, 2 * (2 * l + 1));

  const bool upper = j.twice() == 2 * l + 1;
  const bool spin_up = sz.twice() == 1;
  if (upper)
    return ExactCoeff::sqrt_of(spin_up ? plus : minus, +1);
  return spin_up ? ExactCoeff::sqrt_of(minus, -1) : ExactCoeff::sqrt_of(plus, +1);
}

CgPair cg_pair_solve(int l, HalfInt jz, int lambda) {
  if (l < 0)
    throw std::domain_error("cg_pair_solve: l must be nonnegative");
  if (lambda != l && lambda != -l - 1)
    throw std::domain_error("cg_pair_solve: lambda must be l or -l-1, got " +
                            std::to_string(lambda));
  if (jz.abs().twice() > 2 * l + 1 || jz.is_integer())
    throw std::domain_error("cg_pair_solve: |j_z| must be a half-odd integer <= l+1/2");

  const Rational lp(2 * l + jz.twice() + 1, 2); // l + j_z + 1/2
  const Rational lm(2 * l - jz.twice() + 1, 2); // l - j_z + 1/2

  CgPair out;
  // j_z = +-(l+1/2): a single product state survives, only defined for
  // lambda = l (the j = l+1/2 branch)
  if (jz.abs().twice() == 2 * l + 1) {
    if (lambda != l)
      throw std::domain_error("cg_pair_solve: |j_z| = l+1/2 has no j = l-1/2 state");
    out.ratio_defined = false;
    if (jz.twice() > 0) {
      out.a = ExactCoeff::zero();
      out.b = ExactCoeff::one();
    } else {
      out.a = ExactCoeff::one();
      out.b = ExactCoeff::zero();
    }
    return out;
  }

  const Rational norm(2 * l + 1);
  out.ratio_defined = true;
  if (lambda == l) {
    out.ratio_b_over_a = ExactCoeff::sqrt_of(lp / lm, +1);
    out.a = ExactCoeff::sqrt_of(lm / norm, +1);
    out.b = ExactCoeff::sqrt_of(lp / norm, +1);
  } else {
    out.ratio_b_over_a = ExactCoeff::sqrt_of(lm / lp, -1);
    out.a = ExactCoeff::sqrt_of(lp / norm, +1);
    out.b = ExactCoeff::sqrt_of(lm / norm, -1);
  }
  return out;
}

Rational lz_coupled_expectation(int l, HalfInt j, HalfInt jz) {
  check_lj(l, j, jz);
  if (l == 0)
    return Rational(0);
  const Rational jzr = jz.to_rational();
  const Rational inv(1, 2 * l + 1);
  if (j.twice() == 2 * l + 1)
    return (Rational(1) - inv) * jzr;
  return (Rational(1) + inv) * jzr;
}

Rational lz_via_completeness(int l, HalfInt j, HalfInt jz) {
  check_lj(l, j, jz);
  Rational sum(0);
  for (int tsz : {+1, -1}) {
    const HalfInt sz = HalfInt::from_twice(tsz);
    const HalfInt lz = jz - sz;
    sum += lz.to_rational() * cg_half(l, j, jz, sz).squared();
  }
  return sum;
}

//==============================================================================
// cg_general: ladder recursion oracle

namespace {

// coefficient vectors at fixed (J, M), keyed by twice(m1); m2 = M - m1
using MVector = std::map<int, double>;

double ladder_factor(HalfInt j, HalfInt m) {
  // J- |j,m> = sqrt(j(j+1) - m(m-1)) |j,m-1>, in doubled arithmetic
  const double tj = j.twice(), tm = m.twice();
  return std::sqrt((tj * (tj + 2) - tm * (tm - 2)) / 4.0);
}

void normalize(MVector& v) {
  double n2 = 0;
  for (auto& [k, c] : v)
    n2 += c * c;
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& [k, c] : v)
    c *= inv;
}

// all product-state m1 values (doubled) contributing to total projection M
std::vector<int> m1_range(HalfInt j1, HalfInt j2, HalfInt M) {
  std::vector<int> out;
  const int lo = std::max(-j1.twice(), M.twice() - j2.twice());
  const int hi = std::min(j1.twice(), M.twice() + j2.twice());
  for (int t = hi; t >= lo; t -= 2)
    out.push_back(t);
  return out;
}

} // namespace

double cg_general(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
                  HalfInt M) {
  // selection rules return exact zero
  if (j1.twice() < 0 || j2.twice() < 0 || J.twice() < 0)
    return 0.0;
  if ((m1 + m2) != M)
    return 0.0;
  if (m1.abs() > j1 || m2.abs() > j2 || M.abs() > J)
    return 0.0;
  if ((j1.twice() - m1.twice()) % 2 != 0 || (j2.twice() - m2.twice()) % 2 != 0 ||
      (J.twice() - M.twice()) % 2 != 0)
    return 0.0;
  if (J > j1 + j2 || J < (j1 - j2).abs() ||
      (j1.twice() + j2.twice() - J.twice()) % 2 != 0)
    return 0.0;

  // Build |J',M'> coefficient tables from the stretched state down. For each
  // J' the M' = J' seed is the unit vector orthogonal to all higher-J vectors
  // at that projection (Gram-Schmidt), signed so the largest-m1 coefficient
  // is positive; lower M' follow by applying J-.
  const HalfInt Jmax = j1 + j2;
  const HalfInt Jmin = (j1 - j2).abs();
  std::map<int, std::map<int, MVector>> table; // [twice J'][twice M'] -> vector

  for (int tJ = Jmax.twice(); tJ >= Jmin.twice(); tJ -= 2) {
    const HalfInt Jc = HalfInt::from_twice(tJ);
    MVector seed;
    if (tJ == Jmax.twice()) {
      seed[j1.twice()] = 1.0;
    } else {
      // project each basis vector onto the orthogonal complement of the
      // higher-J states and keep the best-conditioned remainder
      double best_n2 = -1.0;
      for (int cand : m1_range(j1, j2, Jc)) {
        MVector v;
        v[cand] = 1.0;
        for (int tJp = Jmax.twice(); tJp > tJ; tJp -= 2) {
          const MVector& u = table[tJp][tJ];
          double dot = 0;
          for (const auto& [k, c] : u)
            if (auto it = v.find(k); it != v.end())
              dot += c * it->second;
          for (const auto& [k, c] : u)
            v[k] -= dot * c;
        }
        double n2 = 0;
        for (const auto& [k, c] : v)
          n2 += c * c;
        if (n2 > best_n2) {
          best_n2 = n2;
          seed = v;
        }
      }
      normalize(seed);
      // Condon-Shortley: coefficient at maximal m1 positive
      if (seed.rbegin()->second < 0)
        for (auto& [k, c] : seed)
          c = -c;
    }
    table[tJ][tJ] = seed;

    MVector cur = seed;
    for (int tM = tJ; tM > -tJ; tM -= 2) {
      const HalfInt Mc = HalfInt::from_twice(tM);
      MVector next;
      const double denom = ladder_factor(Jc, Mc);
      for (const auto& [tm1, c] : cur) {
        const HalfInt m1c = HalfInt::from_twice(tm1);
        const HalfInt m2c = Mc - m1c;
        if (m1c.twice() > -j1.twice()) // J1- lowers m1
          next[tm1 - 2] += c * ladder_factor(j1, m1c) / denom;
        if (m2c.twice() > -j2.twice()) // J2- lowers m2
          next[tm1] += c * ladder_factor(j2, m2c) / denom;
      }
      normalize(next); // absorb rounding drift; never flips sign
      table[tJ][tM - 2] = next;
      cur = next;
    }
  }

  const MVector& v = table[J.twice()][M.twice()];
  auto it = v.find(m1.twice());
  return it == v.end() ? 0.0 : it->second;
}

} // namespace ncspectra::angular
