#pragma once
#include "ncspectra/half_int.hpp"
#include "ncspectra/rational.hpp"
#include "ncspectra/states.hpp"

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ncspectra::spectrum {

//! Noncommutativity parameter vector, components in Bohr radii squared.
struct ThetaVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double magnitude() const;
};

struct AlignedTheta {
  double theta_z = 0.0;      //!< |theta|, the value after aligning with z
  Eigen::Matrix3d rotation;  //!< proper rotation taking the theta axis to +z
};

//! Rotates the frame so theta points along +z. The zero vector maps to
//! (0, identity); otherwise theta_z = |theta| and rotation * (theta/|theta|)
//! = z_hat with rotation orthogonal and det +1.
AlignedTheta align_theta(const ThetaVector& theta);

//==============================================================================
// first-order shifts (exact coefficients of theta_z, hartree per Bohr^2)

//! Spinless shift coefficient: -m / (4 n^3 l (l+1/2) (l+1)); exactly zero for
//! l = 0 or m = 0.
Rational nc_shift_spinless_coeff(int n, int l, int m);

//! Spin-coupled shift coefficient:
//! -(j_z/4) (1 -+ 1/(2l+1)) / (n^3 l (l+1/2) (l+1)), upper sign j = l+1/2;
//! exactly zero for l = 0. Computed as the coupled-basis <L_z> times
//! -(1/4) <1/r^3>.
Rational nc_shift_spinful_coeff(int n, int l, HalfInt j, HalfInt jz);

//! coefficient * theta_z, as a plain double
double nc_shift_spinless(int n, int l, int m, double theta_z);
double nc_shift_spinful(int n, int l, HalfInt j, HalfInt jz, double theta_z);

//! [-j, -j+1, ..., +j], length 2j+1.
std::vector<HalfInt> jz_sublevels(HalfInt j);

//==============================================================================
// term symbols

//! Spectroscopic label ^{2s+1}L_{j}, with an optional signed j_z subscript
//! variant ^{2s+1}L_{+-j_z} used to tag split sublevels. In the signed
//! variant j is implied by |j_z| (the only case the subscripted labels are
//! used for here).
struct TermSymbol {
  int multiplicity = 2; //!< 2s+1
  int l = 0;
  HalfInt j;
  std::optional<HalfInt> jz; //!< present only for split-sublevel labels

  friend bool operator==(const TermSymbol&, const TermSymbol&) = default;
};

//! S,P,D,F,G,H,I,K,... (J omitted); l up to 20.
char l_letter(int l);
//! inverse of l_letter
int letter_l(char c);

//! "^2P_{1/2}"; with jz set, "^2P_{+1/2}" / "^2P_{-1/2}" (sign mandatory).
std::string format_term_symbol(const TermSymbol& t);

struct TermParseError : std::runtime_error {
  std::size_t position; //!< offset into the input where parsing failed
  TermParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what), position(pos) {}
};

//! Inverse of format_term_symbol. A signed subscript yields the split-
//! sublevel variant with j = |j_z|. Malformed input throws TermParseError
//! carrying the offending position.
TermSymbol parse_term_symbol(const std::string& text);

//==============================================================================
// level assembly

enum class Mode { spinless, spinful };

struct EnergyLevel {
  std::variant<UncoupledState, CoupledState> state;
  double e0 = 0.0;            //!< unperturbed energy, hartree
  double delta_e = 0.0;       //!< first-order shift, hartree
  Rational delta_e_per_theta; //!< exact coefficient of theta_z at unit mass
  std::optional<TermSymbol> term; //!< coupled states only
};

//! One EnergyLevel per state with n <= n_max, sorted by (n, l, m) in
//! spinless mode and (n, l, j, j_z) in spinful mode. Shifts depend on theta
//! only through its magnitude (the frame is aligned first). A reduced mass
//! mu != 1 scales e0 by mu and delta_e by mu^3; delta_e_per_theta always
//! refers to mu = 1.
std::vector<EnergyLevel> level_table(int n_max, const ThetaVector& theta,
                                     Mode mode, double reduced_mass = 1.0);

//==============================================================================
// n=2 splitting report

struct LambSublevel {
  TermSymbol label; //!< signed-subscript form, e.g. ^2P_{-1/2}
  HalfInt jz;
  Rational shift_coeff; //!< coefficient of theta_z
  double shift = 0.0;   //!< hartree
};

//! The n=2, j=1/2 pair: the l=0 level is untouched at first order while the
//! l=1 level splits into its two j_z sublevels.
struct LambReport {
  double theta_z = 0.0;
  TermSymbol s_label;         //!< ^2S_{1/2}
  Rational s_shift_coeff;     //!< exactly 0
  double s_shift = 0.0;       //!< exactly 0
  std::vector<LambSublevel> p_sublevels; //!< exactly 2, ascending j_z
  Rational splitting_coeff;   //!< 1/72
  double splitting = 0.0;     //!< theta_z / 72, hartree
  std::string note;           //!< degeneracy context for the pair
};

LambReport lamb_split_report(double theta_z);

} // namespace ncspectra::spectrum
