#pragma once
#include "ncspectra/half_int.hpp"
#include "ncspectra/radial.hpp"
#include "ncspectra/rational.hpp"
#include "ncspectra/states.hpp"

#include <Eigen/Dense>

#include <array>
#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace ncspectra::opalg {

//! Exact complex number with rational real and imaginary parts.
struct CRational {
  Rational re;
  Rational im;

  CRational() = default;
  CRational(Rational r) : re(r) {}
  CRational(Rational r, Rational i) : re(r), im(i) {}
  static CRational i_unit() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  friend CRational operator+(const CRational& a, const CRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend CRational operator-(const CRational& a, const CRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend CRational operator*(const CRational& a, const CRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  CRational operator-() const { return {-re, -im}; }
  friend bool operator==(const CRational&, const CRational&) = default;
  std::string str() const;
};

//! One normal-ordered monomial: x1^a1 x2^a2 x3^a3 p1^b1 p2^b2 p3^b3 scaled by
//! a monomial in the formal symbols th12, th13, th23 and a (possibly negative)
//! power of hbar.
struct OpTermKey {
  std::array<int, 3> x{0, 0, 0};
  std::array<int, 3> p{0, 0, 0};
  std::array<int, 3> theta{0, 0, 0}; // exponents of th12, th13, th23
  int hbar = 0;

  friend auto operator<=>(const OpTermKey&, const OpTermKey&) = default;
};

//! Polynomial over the noncommuting symbols x1..x3, p1..p3 with exact
//! rational-complex coefficients and formal antisymmetric theta / hbar
//! parameters. Every stored monomial is normal-ordered (all x before all p);
//! zero coefficients are pruned; theta_ii = 0 and theta_ji = -theta_ij are
//! enforced at construction of the symbols.
class OperatorPoly {
public:
  OperatorPoly() = default; // zero

  static OperatorPoly zero() { return {}; }
  static OperatorPoly scalar(const CRational& c);
  static OperatorPoly one() { return scalar(CRational(Rational(1))); }
  //! x_i, axis in {1,2,3}
  static OperatorPoly position(int axis);
  //! p_i, axis in {1,2,3}
  static OperatorPoly momentum(int axis);
  //! theta_{ij} as a scalar factor; theta_ii is the zero polynomial and
  //! theta_{ji} = -theta_{ij}
  static OperatorPoly theta(int i, int j);
  //! hbar^power as a scalar factor (power may be negative)
  static OperatorPoly hbar(int power = 1);

  const std::map<OpTermKey, CRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend OperatorPoly operator+(const OperatorPoly& a, const OperatorPoly& b);
  friend OperatorPoly operator-(const OperatorPoly& a, const OperatorPoly& b);
  //! Product with full normal re-ordering via p_j x_i = x_i p_j - i hbar d_ij.
  friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);
  OperatorPoly operator-() const;
  OperatorPoly scaled(const CRational& c) const;

  //! Copy with every term containing the given theta symbol (0 = th12,
  //! 1 = th13, 2 = th23) removed, i.e. that parameter set to zero.
  OperatorPoly with_theta_zeroed(int symbol_index) const;

  friend bool operator==(const OperatorPoly&, const OperatorPoly&) = default;

  //! Deterministic human-readable normal form, one term per line when
  //! multiline, e.g. "(-1) th12 hbar^-1 x1 p2".
  std::string str(bool multiline = false) const;

private:
  std::map<OpTermKey, CRational> terms_;
  void add_term(const OpTermKey& k, const CRational& c);
};

//! A B - B A, fully normal-ordered.
OperatorPoly op_commutator(const OperatorPoly& a, const OperatorPoly& b);

//! The canonical variable change for noncommuting coordinates:
//! x_i - sum_j theta_{ij} p_j / (2 hbar). Commutators of these reproduce
//! [x'_i, x'_j] = i theta_{ij} on an ordinary phase space.
OperatorPoly bopp_shift(int axis);

//! Outcome of the symbolic square-argument check: expanding
//! sum_i bopp_shift(i)^2 must equal
//! x.x - sum_ij theta_{ij} x_i p_j / hbar + sum_ijk theta_{ij} theta_{ik} p_j p_k / (4 hbar^2),
//! with no leftover scalar i*hbar*theta_ii term (antisymmetry kills it).
struct SqrtArgumentProof {
  OperatorPoly lhs;
  OperatorPoly rhs;
  bool pass = false;
  //! plain-text proof: both normal forms printed term by term
  std::string report() const;
};

SqrtArgumentProof verify_sqrt_argument_identity();

//==============================================================================
// truncated-basis diagonalization oracle

//! One symmetry block of the perturbed Hamiltonian over principal quantum
//! numbers n in [l+1, n_max]. Spinless blocks are keyed by (l, m); spinful
//! blocks by (l, j, j_z) in the coupled basis.
struct HamiltonianBlock {
  int l = 0;
  int m = 0;                              // spinless key
  HalfInt j, jz;                          // spinful key
  std::vector<int> ns;                    // basis n values, ascending
  Eigen::VectorXd h0;                     // unperturbed diagonal -1/(2n^2)
  Eigen::MatrixXd w_coeff;                // perturbation per unit theta_z
};

//! Perturbed Hamiltonian assembled per conserved-quantum-number block. The
//! perturbation -theta_z L_z / (4 hbar r^3) conserves (l, m) in the product
//! basis and is applied per (l, j, j_z) subspace in the coupled basis, so each
//! block is a nondegenerate eigenproblem.
struct PerturbedHamiltonian {
  int n_max = 0;
  double theta_z = 0.0;
  bool include_spin = false;
  std::vector<HamiltonianBlock> blocks;

  const HamiltonianBlock& block_for(const UncoupledState& s) const;
  const HamiltonianBlock& block_for(const CoupledState& s) const;
};

//! Builds all blocks up to the basis cutoff. Spinless W entries are
//! -(theta_z m / 4) <n1|r^-3|n2>; spinful entries carry the coupled-basis
//! <L_z> obtained from the product basis through the Clebsch-Gordan rotation.
//! Blocks with l = 0 or m = 0 have W identically zero.
PerturbedHamiltonian build_hamiltonian(int n_max, double theta_z,
                                       bool include_spin,
                                       const radial::QuadratureSpec& spec = {});

//! Numeric first-order shift: diagonalizes the state's block at theta_z and
//! returns E(theta_z) - E(0) for the eigenvalue continuously connected to the
//! unperturbed state, matched by eigenvector overlap > 0.99. Requires
//! n <= n_max - 2 so truncation does not distort the tracked level.
double first_order_shift_oracle(const PerturbedHamiltonian& h,
                                const UncoupledState& state);
double first_order_shift_oracle(const PerturbedHamiltonian& h,
                                const CoupledState& state);

} // namespace ncspectra::opalg
