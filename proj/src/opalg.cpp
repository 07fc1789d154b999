#include "ncspectra/opalg.hpp"

#include "ncspectra/angular.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ncspectra::opalg {

std::string CRational::str() const {
  // unit imaginary parts print as "i"/"-i", not "1i"
  const auto imag_str = [this] {
    if (im == Rational(1))
      return std::string("i");
    if (im == Rational(-1))
      return std::string("-i");
    return im.str() + "i";
  };
  if (im.is_zero())
    return re.str();
  if (re.is_zero())
    return imag_str();
  return re.str() + (im.sign() > 0 ? "+" : "") + imag_str();
}

//==============================================================================
// OperatorPoly

void OperatorPoly::add_term(const OpTermKey& k, const CRational& c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

OperatorPoly OperatorPoly::scalar(const CRational& c) {
  OperatorPoly p;
  p.add_term(OpTermKey{}, c);
  return p;
}

OperatorPoly OperatorPoly::position(int axis) {
  if (axis < 1 || axis > 3)
    throw std::domain_error("OperatorPoly::position: axis must be 1..3");
  OpTermKey k;
  k.x[axis - 1] = 1;
  OperatorPoly p;
  p.add_term(k, CRational(Rational(1)));
  return p;
}

OperatorPoly OperatorPoly::momentum(int axis) {
  if (axis < 1 || axis > 3)
    throw std::domain_error("OperatorPoly::momentum: axis must be 1..3");
  OpTermKey k;
  k.p[axis - 1] = 1;
  OperatorPoly p;
  p.add_term(k, CRational(Rational(1)));
  return p;
}

namespace {

// theta_{ij} -> (sign, symbol index) with th12 = 0, th13 = 1, th23 = 2
struct ThetaSym {
  int sign; // 0 means theta_ii = 0
  int index;
};

ThetaSym theta_symbol(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3)
    throw std::domain_error("theta: indices must be 1..3");
  if (i == j)
    return {0, 0};
  const int a = std::min(i, j), b = std::max(i, j);
  const int index = (a == 1) ? (b == 2 ? 0 : 1) : 2;
  return {i < j ? 1 : -1, index};
}

} // namespace

OperatorPoly OperatorPoly::theta(int i, int j) {
  const ThetaSym s = theta_symbol(i, j);
  if (s.sign == 0)
    return zero();
  OpTermKey k;
  k.theta[s.index] = 1;
  OperatorPoly p;
  p.add_term(k, CRational(Rational(s.sign)));
  return p;
}

OperatorPoly OperatorPoly::hbar(int power) {
  OpTermKey k;
  k.hbar = power;
  OperatorPoly p;
  p.add_term(k, CRational(Rational(1)));
  return p;
}

OperatorPoly operator+(const OperatorPoly& a, const OperatorPoly& b) {
  OperatorPoly out = a;
  for (const auto& [k, c] : b.terms_)
    out.add_term(k, c);
  return out;
}

OperatorPoly operator-(const OperatorPoly& a, const OperatorPoly& b) {
  OperatorPoly out = a;
  for (const auto& [k, c] : b.terms_)
    out.add_term(k, -c);
  return out;
}

OperatorPoly OperatorPoly::operator-() const {
  OperatorPoly out;
  for (const auto& [k, c] : terms_)
    out.terms_.emplace(k, -c);
  return out;
}

OperatorPoly OperatorPoly::scaled(const CRational& c) const {
  OperatorPoly out;
  if (c.is_zero())
    return out;
  for (const auto& [k, v] : terms_)
    out.terms_.emplace(k, v * c);
  return out;
}

namespace {

// generator encoding for word rewriting: 0..2 = x1..x3, 3..5 = p1..p3
constexpr bool is_momentum(int g) { return g >= 3; }

// Rewrites a word of generators into normal order, accumulating terms into
// `out`. Each out-of-order adjacent pair p_j x_i splits the word in two:
// the swap x_i p_j and, when i = j, the contraction -i hbar.
void reduce_word(std::vector<int> word, CRational coeff,
                 std::array<int, 3> theta_exp, int hbar_exp,
                 std::map<OpTermKey, CRational>& out) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (is_momentum(word[i]) && !is_momentum(word[i + 1])) {
      const int pj = word[i] - 3;
      const int xi = word[i + 1];
      std::vector<int> swapped = word;
      std::swap(swapped[i], swapped[i + 1]);
      reduce_word(std::move(swapped), coeff, theta_exp, hbar_exp, out);
      if (pj == xi) {
        std::vector<int> contracted;
        contracted.reserve(word.size() - 2);
        contracted.insert(contracted.end(), word.begin(), word.begin() + i);
        contracted.insert(contracted.end(), word.begin() + i + 2, word.end());
        reduce_word(std::move(contracted),
                    coeff * CRational(Rational(0), Rational(-1)), theta_exp,
                    hbar_exp + 1, out);
      }
      return;
    }
  }
  // normal-ordered: bucket the exponents
  OpTermKey key;
  key.theta = theta_exp;
  key.hbar = hbar_exp;
  for (int g : word) {
    if (is_momentum(g))
      ++key.p[g - 3];
    else
      ++key.x[g];
  }
  auto [it, inserted] = out.emplace(key, coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero())
      out.erase(it);
  }
}

std::vector<int> key_word(const OpTermKey& k) {
  std::vector<int> w;
  for (int a = 0; a < 3; ++a)
    w.insert(w.end(), k.x[a], a);
  for (int a = 0; a < 3; ++a)
    w.insert(w.end(), k.p[a], a + 3);
  return w;
}

} // namespace

OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
  OperatorPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      std::array<int, 3> th{ka.theta[0] + kb.theta[0], ka.theta[1] + kb.theta[1],
                            ka.theta[2] + kb.theta[2]};
      std::vector<int> word = key_word(ka);
      const std::vector<int> wb = key_word(kb);
      word.insert(word.end(), wb.begin(), wb.end());
      reduce_word(std::move(word), ca * cb, th, ka.hbar + kb.hbar, out.terms_);
    }
  }
  return out;
}

OperatorPoly OperatorPoly::with_theta_zeroed(int symbol_index) const {
  if (symbol_index < 0 || symbol_index > 2)
    throw std::domain_error("with_theta_zeroed: symbol index must be 0..2");
  OperatorPoly out;
  for (const auto& [k, c] : terms_)
    if (k.theta[symbol_index] == 0)
      out.terms_.emplace(k, c);
  return out;
}

std::string OperatorPoly::str(bool multiline) const {
  if (terms_.empty())
    return "0";
  static const char* theta_names[3] = {"th12", "th13", "th23"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first)
      os << (multiline ? "\n" : " + ");
    first = false;
    os << "(" << c.str() << ")";
    for (int t = 0; t < 3; ++t) {
      if (k.theta[t] == 0)
        continue;
      os << " " << theta_names[t];
      if (k.theta[t] != 1)
        os << "^" << k.theta[t];
    }
    if (k.hbar != 0) {
      os << " hbar";
      if (k.hbar != 1)
        os << "^" << k.hbar;
    }
    for (int a = 0; a < 3; ++a) {
      if (k.x[a] == 0)
        continue;
      os << " x" << a + 1;
      if (k.x[a] != 1)
        os << "^" << k.x[a];
    }
    for (int a = 0; a < 3; ++a) {
      if (k.p[a] == 0)
        continue;
      os << " p" << a + 1;
      if (k.p[a] != 1)
        os << "^" << k.p[a];
    }
  }
  return os.str();
}

OperatorPoly op_commutator(const OperatorPoly& a, const OperatorPoly& b) {
  return a * b - b * a;
}

OperatorPoly bopp_shift(int axis) {
  if (axis < 1 || axis > 3)
    throw std::domain_error("bopp_shift: axis must be 1..3");
  OperatorPoly out = OperatorPoly::position(axis);
  const CRational minus_half(Rational(-1, 2));
  for (int j = 1; j <= 3; ++j) {
    if (j == axis)
      continue;
    out = out + (OperatorPoly::theta(axis, j) * OperatorPoly::hbar(-1) *
                 OperatorPoly::momentum(j))
                    .scaled(minus_half);
  }
  return out;
}

SqrtArgumentProof verify_sqrt_argument_identity() {
  SqrtArgumentProof proof;

  for (int i = 1; i <= 3; ++i) {
    const OperatorPoly bi = bopp_shift(i);
    proof.lhs = proof.lhs + bi * bi;
  }

  // x.x - sum_ij theta_ij x_i p_j / hbar + sum_ijk theta_ij theta_ik p_j p_k / (4 hbar^2)
  for (int i = 1; i <= 3; ++i)
    proof.rhs = proof.rhs + OperatorPoly::position(i) * OperatorPoly::position(i);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      proof.rhs = proof.rhs - OperatorPoly::theta(i, j) * OperatorPoly::hbar(-1) *
                                  OperatorPoly::position(i) *
                                  OperatorPoly::momentum(j);
  const CRational quarter(Rational(1, 4));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        proof.rhs = proof.rhs + (OperatorPoly::theta(i, j) *
                                 OperatorPoly::theta(i, k) *
                                 OperatorPoly::hbar(-2) *
                                 OperatorPoly::momentum(j) *
                                 OperatorPoly::momentum(k))
                                    .scaled(quarter);

  proof.pass = proof.lhs == proof.rhs;
  return proof;
}

std::string SqrtArgumentProof::report() const {
  std::ostringstream os;
  os << "squared shifted-coordinate sum, normal form:\n"
     << lhs.str(true) << "\n\n"
     << "target expansion x.x - th_ij x_i p_j / hbar"
     << " + th_ij th_ik p_j p_k / (4 hbar^2), normal form:\n"
     << rhs.str(true) << "\n\n";
  // the would-be scalar i*hbar*theta_ii remnant: absent iff antisymmetry holds
  bool scalar_remnant = false;
  for (const auto& term : lhs.terms())
    if (term.first.x == std::array<int, 3>{0, 0, 0} &&
        term.first.p == std::array<int, 3>{0, 0, 0})
      scalar_remnant = true;
  os << "scalar remnant after contraction: " << (scalar_remnant ? "present" : "none")
     << "\n";
  os << "normal forms " << (pass ? "IDENTICAL" : "DIFFER") << "\n";
  return os.str();
}

//==============================================================================
// truncated-basis oracle

namespace {

Eigen::MatrixXd overlap_matrix(int l, int n_max,
                               const radial::QuadratureSpec& spec) {
  const int dim = n_max - l;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  if (l == 0)
    return m; // never used: l=0 blocks carry no perturbation
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b) {
      m(a, b) = radial::radial_overlap_inv_r3(l + 1 + a, l + 1 + b, l, spec);
      m(b, a) = m(a, b);
    }
  return m;
}

HamiltonianBlock make_block(int l, int n_max) {
  HamiltonianBlock blk;
  blk.l = l;
  const int dim = n_max - l;
  blk.ns.resize(dim);
  blk.h0.resize(dim);
  for (int a = 0; a < dim; ++a) {
    blk.ns[a] = l + 1 + a;
    blk.h0[a] = radial::bohr_energy(blk.ns[a]);
  }
  blk.w_coeff = Eigen::MatrixXd::Zero(dim, dim);
  return blk;
}

double tracked_eigenvalue(const HamiltonianBlock& blk, double theta_z, int idx) {
  using MatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const int dim = static_cast<int>(blk.ns.size());
  MatL h = MatL::Zero(dim, dim);
  for (int a = 0; a < dim; ++a)
    h(a, a) = blk.h0[a];
  h += static_cast<long double>(theta_z) * blk.w_coeff.cast<long double>();
  Eigen::SelfAdjointEigenSolver<MatL> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("first_order_shift_oracle: diagonalization failed");
  // eigenvector with dominant weight on the unperturbed basis state
  int best = -1;
  long double best_overlap = 0;
  for (int c = 0; c < dim; ++c) {
    const long double ov = std::abs(es.eigenvectors()(idx, c));
    if (ov > best_overlap) {
      best_overlap = ov;
      best = c;
    }
  }
  if (best_overlap <= 0.99L)
    throw std::runtime_error(
        "first_order_shift_oracle: eigenvector overlap " +
        std::to_string(static_cast<double>(best_overlap)) +
        " below 0.99; perturbative matching is ambiguous, use a smaller theta_z");
  return static_cast<double>(es.eigenvalues()[best]);
}

double shift_for(const PerturbedHamiltonian& h, const HamiltonianBlock& blk,
                 int n) {
  if (n > h.n_max - 2)
    throw std::domain_error("first_order_shift_oracle: need n <= n_max - 2 as "
                            "truncation margin");
  const int idx = n - (blk.l + 1);
  return tracked_eigenvalue(blk, h.theta_z, idx) - blk.h0[idx];
}

} // namespace

const HamiltonianBlock& PerturbedHamiltonian::block_for(
    const UncoupledState& s) const {
  s.validate();
  if (include_spin)
    throw std::domain_error("block_for: spinful Hamiltonian indexed by coupled states");
  for (const auto& blk : blocks)
    if (blk.l == s.l && blk.m == s.m)
      return blk;
  throw std::domain_error("block_for: state outside basis cutoff");
}

const HamiltonianBlock& PerturbedHamiltonian::block_for(
    const CoupledState& s) const {
  s.validate();
  if (!include_spin)
    throw std::domain_error("block_for: spinless Hamiltonian indexed by product states");
  for (const auto& blk : blocks)
    if (blk.l == s.l && blk.j == s.j && blk.jz == s.jz)
      return blk;
  throw std::domain_error("block_for: state outside basis cutoff");
}

PerturbedHamiltonian build_hamiltonian(int n_max, double theta_z,
                                       bool include_spin,
                                       const radial::QuadratureSpec& spec) {
  if (n_max < 2)
    throw std::domain_error("build_hamiltonian: n_max must be >= 2");
  if (!(std::abs(theta_z) < 1.0))
    throw std::domain_error("build_hamiltonian: |theta_z| must be < 1 (Bohr^2)");

  PerturbedHamiltonian h;
  h.n_max = n_max;
  h.theta_z = theta_z;
  h.include_spin = include_spin;

  for (int l = 0; l <= n_max - 1; ++l) {
    const Eigen::MatrixXd overlap =
        l == 0 ? Eigen::MatrixXd() : overlap_matrix(l, n_max, spec);
    if (!include_spin) {
      for (int m = -l; m <= l; ++m) {
        HamiltonianBlock blk = make_block(l, n_max);
        blk.m = m;
        if (l > 0 && m != 0)
          blk.w_coeff = (-0.25 * m) * overlap;
        h.blocks.push_back(std::move(blk));
      }
    } else {
      for (int tj : {2 * l - 1, 2 * l + 1}) {
        if (tj < 1)
          continue;
        const HalfInt j = HalfInt::from_twice(tj);
        for (int tjz = -tj; tjz <= tj; tjz += 2) {
          const HalfInt jz = HalfInt::from_twice(tjz);
          HamiltonianBlock blk = make_block(l, n_max);
          blk.j = j;
          blk.jz = jz;
          if (l > 0) {
            // coupled-basis <L_z> through the CG rotation of the product basis
            const double lz =
                angular::lz_via_completeness(l, j, jz).to_double();
            if (lz != 0.0)
              blk.w_coeff = (-0.25 * lz) * overlap;
          }
          h.blocks.push_back(std::move(blk));
        }
      }
    }
  }
  return h;
}

double first_order_shift_oracle(const PerturbedHamiltonian& h,
                                const UncoupledState& state) {
  return shift_for(h, h.block_for(state), state.n);
}

double first_order_shift_oracle(const PerturbedHamiltonian& h,
                                const CoupledState& state) {
  return shift_for(h, h.block_for(state), state.n);
}

} // namespace ncspectra::opalg
