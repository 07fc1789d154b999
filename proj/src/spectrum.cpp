#include "ncspectra/spectrum.hpp"

#include "ncspectra/angular.hpp"
#include "ncspectra/radial.hpp"

#include <Eigen/Geometry>

#include <cctype>
#include <cmath>
#include <sstream>

namespace ncspectra::spectrum {

double ThetaVector::magnitude() const { return std::hypot(x, y, z); }

AlignedTheta align_theta(const ThetaVector& theta) {
  AlignedTheta out;
  out.rotation = Eigen::Matrix3d::Identity();
  const double mag = theta.magnitude();
  out.theta_z = mag;
  if (mag == 0.0)
    return out;
  const Eigen::Vector3d axis(theta.x, theta.y, theta.z);
  out.rotation = Eigen::Quaterniond::FromTwoVectors(axis, Eigen::Vector3d::UnitZ())
                     .toRotationMatrix();
  return out;
}

//==============================================================================
// shifts

Rational nc_shift_spinless_coeff(int n, int l, int m) {
  UncoupledState{n, l, m}.validate();
  if (l == 0 || m == 0)
    return Rational(0);
  // -(m/4) <1/r^3> = -m / (4 n^3 l (l+1/2) (l+1))
  return Rational(-m, 4) * radial::expect_inv_r3_closed(n, l);
}

Rational nc_shift_spinful_coeff(int n, int l, HalfInt j, HalfInt jz) {
  CoupledState{n, l, j, jz}.validate();
  if (l == 0)
    return Rational(0);
  // -(1/4) <L_z>_{l,j,j_z} <1/r^3>
  return Rational(-1, 4) * angular::lz_coupled_expectation(l, j, jz) *
         radial::expect_inv_r3_closed(n, l);
}

double nc_shift_spinless(int n, int l, int m, double theta_z) {
  return nc_shift_spinless_coeff(n, l, m).to_double() * theta_z;
}

double nc_shift_spinful(int n, int l, HalfInt j, HalfInt jz, double theta_z) {
  return nc_shift_spinful_coeff(n, l, j, jz).to_double() * theta_z;
}

std::vector<HalfInt> jz_sublevels(HalfInt j) {
  if (j.twice() < 0)
    throw std::domain_error("jz_sublevels: j must be >= 0");
  std::vector<HalfInt> out;
  out.reserve(j.twice() + 1);
  for (int t = -j.twice(); t <= j.twice(); t += 2)
    out.push_back(HalfInt::from_twice(t));
  return out;
}

//==============================================================================
// term symbols

namespace {
// J is skipped by convention; P,S,D,F are taken by the low letters
constexpr const char* kLetters = "SPDFGHIKLMNOQRTUVWXYZ";
constexpr int kMaxLetterL = 20;
} // namespace

char l_letter(int l) {
  if (l < 0 || l > kMaxLetterL)
    throw std::domain_error("l_letter: no letter assigned to l = " +
                            std::to_string(l));
  return kLetters[l];
}

int letter_l(char c) {
  for (int l = 0; l <= kMaxLetterL; ++l)
    if (kLetters[l] == c)
      return l;
  throw std::domain_error(std::string("letter_l: unknown level letter '") + c +
                          "'");
}

std::string format_term_symbol(const TermSymbol& t) {
  std::ostringstream os;
  os << '^' << t.multiplicity << l_letter(t.l) << "_{";
  if (t.jz) {
    if (t.jz->twice() >= 0)
      os << '+';
    os << t.jz->str();
  } else {
    os << t.j.str();
  }
  os << '}';
  return os.str();
}

namespace {

struct Scanner {
  const std::string& s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }

  void expect(char c, const char* what) {
    if (done() || s[pos] != c)
      throw TermParseError(std::string("expected ") + what + " at position " +
                               std::to_string(pos),
                           pos);
    ++pos;
  }

  long long digits(const char* what) {
    if (done() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw TermParseError(std::string("expected ") + what + " at position " +
                               std::to_string(pos),
                           pos);
    long long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000)
        throw TermParseError("number too large at position " +
                                 std::to_string(pos),
                             pos);
      ++pos;
    }
    return v;
  }
};

} // namespace

TermSymbol parse_term_symbol(const std::string& text) {
  Scanner sc{text};
  TermSymbol t;

  sc.expect('^', "'^'");
  t.multiplicity = static_cast<int>(sc.digits("multiplicity"));

  const std::size_t letter_pos = sc.pos;
  if (sc.done())
    throw TermParseError("expected level letter at position " +
                             std::to_string(letter_pos),
                         letter_pos);
  try {
    t.l = letter_l(sc.s[sc.pos]);
  } catch (const std::domain_error&) {
    throw TermParseError("unknown level letter at position " +
                             std::to_string(letter_pos),
                         letter_pos);
  }
  ++sc.pos;

  sc.expect('_', "'_'");
  sc.expect('{', "'{'");

  int sign = 0; // 0 = unsigned (plain j), otherwise the j_z sign
  if (sc.peek() == '+' || sc.peek() == '-') {
    sign = sc.peek() == '+' ? 1 : -1;
    ++sc.pos;
  }
  long long numer = sc.digits("angular momentum value");
  int twice = static_cast<int>(2 * numer);
  if (sc.peek() == '/') {
    ++sc.pos;
    const std::size_t den_pos = sc.pos;
    if (sc.digits("denominator") != 2)
      throw TermParseError("only halves are allowed; expected 2 at position " +
                               std::to_string(den_pos),
                           den_pos);
    twice = static_cast<int>(numer);
  }
  sc.expect('}', "'}'");
  if (!sc.done())
    throw TermParseError("trailing characters at position " +
                             std::to_string(sc.pos),
                         sc.pos);

  if (sign != 0) {
    // signed subscript: a split-sublevel label, j implied by |j_z|
    t.jz = HalfInt::from_twice(sign * twice);
    t.j = HalfInt::from_twice(twice);
  } else {
    t.j = HalfInt::from_twice(twice);
  }
  return t;
}

//==============================================================================
// level assembly

std::vector<EnergyLevel> level_table(int n_max, const ThetaVector& theta,
                                     Mode mode, double reduced_mass) {
  if (n_max < 1)
    throw std::domain_error("level_table: n_max must be >= 1");
  if (!(reduced_mass > 0.0))
    throw std::domain_error("level_table: reduced mass must be positive");

  const double theta_z = align_theta(theta).theta_z;
  const double mu3 = reduced_mass * reduced_mass * reduced_mass;

  std::vector<EnergyLevel> out;
  for (int n = 1; n <= n_max; ++n) {
    const double e0 = radial::bohr_energy(n, reduced_mass);
    for (int l = 0; l <= n - 1; ++l) {
      if (mode == Mode::spinless) {
        for (int m = -l; m <= l; ++m) {
          EnergyLevel lvl;
          lvl.state = UncoupledState{n, l, m};
          lvl.e0 = e0;
          lvl.delta_e_per_theta = nc_shift_spinless_coeff(n, l, m);
          lvl.delta_e = lvl.delta_e_per_theta.to_double() * theta_z * mu3;
          out.push_back(std::move(lvl));
        }
      } else {
        for (int tj : {2 * l - 1, 2 * l + 1}) {
          if (tj < 1)
            continue;
          const HalfInt j = HalfInt::from_twice(tj);
          for (const HalfInt jz : jz_sublevels(j)) {
            EnergyLevel lvl;
            lvl.state = CoupledState{n, l, j, jz};
            lvl.e0 = e0;
            lvl.delta_e_per_theta = nc_shift_spinful_coeff(n, l, j, jz);
            lvl.delta_e = lvl.delta_e_per_theta.to_double() * theta_z * mu3;
            lvl.term = TermSymbol{2, l, j, std::nullopt};
            out.push_back(std::move(lvl));
          }
        }
      }
    }
  }
  return out;
}

//==============================================================================
// n=2 splitting report

LambReport lamb_split_report(double theta_z) {
  LambReport rep;
  rep.theta_z = theta_z;

  const HalfInt half = HalfInt::from_twice(1);
  rep.s_label = TermSymbol{2, 0, half, std::nullopt};
  rep.s_shift_coeff = nc_shift_spinful_coeff(2, 0, half, half); // exactly 0
  rep.s_shift = rep.s_shift_coeff.to_double() * theta_z;

  for (const HalfInt jz : jz_sublevels(half)) {
    LambSublevel sub;
    sub.jz = jz;
    sub.label = TermSymbol{2, 1, half, jz};
    sub.shift_coeff = nc_shift_spinful_coeff(2, 1, half, jz);
    sub.shift = sub.shift_coeff.to_double() * theta_z;
    rep.p_sublevels.push_back(std::move(sub));
  }

  Rational gap = rep.p_sublevels.front().shift_coeff -
                 rep.p_sublevels.back().shift_coeff;
  if (gap.sign() < 0)
    gap = -gap;
  rep.splitting_coeff = gap;
  rep.splitting = rep.splitting_coeff.to_double() * std::abs(theta_z);

  rep.note = "Before the correction the two n=2, j=1/2 levels are degenerate "
             "at the Coulomb energy -1/8 hartree. At first order the l=0 "
             "level is untouched while the l=1, j=1/2 level splits into its "
             "two j_z sublevels, symmetric about the unperturbed energy.";
  return rep;
}

} // namespace ncspectra::spectrum
