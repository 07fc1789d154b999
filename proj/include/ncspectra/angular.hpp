#pragma once
#include "ncspectra/exact_coeff.hpp"
#include "ncspectra/half_int.hpp"
#include "ncspectra/rational.hpp"

namespace ncspectra::angular {

//! Clebsch-Gordan coefficient <l,l_z;1/2,s_z|j,j_z> for spin-orbit coupling,
//! exact and in the Condon-Shortley phase convention:
//!
//!                    s_z = +1/2                 s_z = -1/2
//!   j = l+1/2   +sqrt((l+j_z+1/2)/(2l+1))   +sqrt((l-j_z+1/2)/(2l+1))
//!   j = l-1/2   -sqrt((l-j_z+1/2)/(2l+1))   +sqrt((l+j_z+1/2)/(2l+1))
//!
//! The implied orbital projection is l_z = j_z - s_z; when |l_z| > l the
//! coefficient is exactly zero (selection rule, not an error).
//! Throws std::domain_error for an invalid (l, j) pairing or |j_z| > j.
ExactCoeff cg_half(int l, HalfInt j, HalfInt jz, HalfInt sz);

//! Result of solving the 2x2 spin-orbit eigenproblem at fixed (l, j_z).
//!
//! a multiplies the s_z = -1/2 product state (l_z = j_z + 1/2) and b the
//! s_z = +1/2 one (l_z = j_z - 1/2). At |j_z| = l + 1/2 only one product
//! state exists; the system degenerates to 1x1 and the ratio is undefined.
struct CgPair {
  ExactCoeff ratio_b_over_a; // meaningful only when ratio_defined
  bool ratio_defined = false;
  ExactCoeff a;
  ExactCoeff b;
};

//! Solves the coupled eigenvalue system for 2 L.S with eigenvalue lambda
//! (lambda = l for j = l+1/2, lambda = -l-1 for j = l-1/2) and returns the
//! exact ratio b/a together with the normalized pair, a^2 + b^2 = 1, sign
//! convention a >= 0 (b >= 0 in the degenerate case where a = 0).
CgPair cg_pair_solve(int l, HalfInt jz, int lambda);

//! <j,j_z|L_z|j,j_z> in units of hbar, exact:
//! (1 - 1/(2l+1)) j_z for j = l+1/2 and (1 + 1/(2l+1)) j_z for j = l-1/2.
//! Exactly zero for l = 0.
Rational lz_coupled_expectation(int l, HalfInt j, HalfInt jz);

//! Same expectation evaluated by inserting the product-basis identity:
//! sum over s_z of (j_z - s_z) cg_half(...)^2, in exact rational arithmetic.
//! Must agree with lz_coupled_expectation identically.
Rational lz_via_completeness(int l, HalfInt j, HalfInt jz);

//! General numeric Clebsch-Gordan coefficient <j1,m1;j2,m2|J,M> in the
//! Condon-Shortley convention.
//!
//! Computed by descending-M ladder recursion from the stretched state with
//! Gram-Schmidt across J at fixed M, so it shares no algebra with cg_half
//! and serves as an independent oracle. Selection-rule violations (triangle
//! inequality, M != m1+m2, out-of-range projections) return exactly 0.
double cg_general(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
                  HalfInt M);

} // namespace ncspectra::angular
