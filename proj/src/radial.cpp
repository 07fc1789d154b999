#include "ncspectra/radial.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ncspectra::radial {

namespace {

void check_nl(int n, int l) {
  if (n < 1)
    throw std::domain_error("principal quantum number must satisfy n >= 1");
  if (l < 0 || l > n - 1)
    throw std::domain_error("orbital quantum number must satisfy 0 <= l <= n-1, got n=" +
                            std::to_string(n) + " l=" + std::to_string(l));
}

// associated Laguerre L^alpha_k(x) by the stable three-term recurrence
double laguerre(int k, int alpha, double x) {
  if (k == 0)
    return 1.0;
  double lm1 = 1.0;
  double l0 = 1.0 + alpha - x;
  for (int i = 1; i < k; ++i) {
    const double lp = ((2.0 * i + 1.0 + alpha - x) * l0 - (i + alpha) * lm1) / (i + 1.0);
    lm1 = l0;
    l0 = lp;
  }
  return l0;
}

// normalization sqrt((2/n)^3 (n-l-1)! / (2n (n+l)!)) via lgamma
double radial_norm(int n, int l) {
  const double ln = 3.0 * std::log(2.0 / n) + std::lgamma(n - l) -
                    std::log(2.0 * n) - std::lgamma(n + l + 1);
  return std::exp(0.5 * ln);
}

// R_{nl}(r) with the exp(-r/n) factor stripped; used by the quadrature so the
// exponentials can be combined analytically with the Laguerre weight
double radial_poly_part(int n, int l, double r) {
  const double rho = 2.0 * r / n;
  return radial_norm(n, l) * std::pow(rho, l) * laguerre(n - l - 1, 2 * l + 1, rho);
}

// L_{n-1}(x)/L_n(x) and ln|L_{n+1}(x)| (alpha = 0) by the three-term
// recurrence with power-of-two rescaling, so nothing overflows even where
// the polynomial values exceed the double range
struct LaguerreProbe {
  double ratio_prev;  // L_{n-1}(x) / L_n(x)
  double ln_abs_next; // ln |L_{n+1}(x)|
};

LaguerreProbe probe_laguerre(int n, double x) {
  double lm1 = 1.0;     // L_{k-1}
  double l0 = 1.0 - x;  // L_k
  long twos = 0;        // both values carry a factor 2^twos
  for (int k = 1; k < n; ++k) {
    const double lp = ((2.0 * k + 1.0 - x) * l0 - k * lm1) / (k + 1.0);
    lm1 = l0;
    l0 = lp;
    const double mag = std::max(std::abs(l0), std::abs(lm1));
    if (mag > 0x1p+500) {
      l0 = std::ldexp(l0, -500);
      lm1 = std::ldexp(lm1, -500);
      twos += 500;
    } else if (mag < 0x1p-500 && mag > 0.0) {
      l0 = std::ldexp(l0, 500);
      lm1 = std::ldexp(lm1, 500);
      twos -= 500;
    }
  }
  const double lnext = ((2.0 * n + 1.0 - x) * l0 - n * lm1) / (n + 1.0);
  return {lm1 / l0, std::log(std::abs(lnext)) +
                        static_cast<double>(twos) * std::numbers::ln2};
}

} // namespace

const GaussLaguerreRule& gauss_laguerre(int node_count) {
  if (node_count < 1)
    throw std::domain_error("gauss_laguerre: node_count must be positive");

  static std::mutex mtx;
  static std::map<int, GaussLaguerreRule> cache;
  std::lock_guard lock(mtx);
  auto it = cache.find(node_count);
  if (it != cache.end())
    return it->second;

  // node seeds: eigenvalues of the Jacobi matrix of the Laguerre weight
  // (diagonal 2k+1, subdiagonal k)
  Eigen::VectorXd diag(node_count), sub(std::max(node_count - 1, 1));
  for (int k = 0; k < node_count; ++k)
    diag[k] = 2.0 * k + 1.0;
  for (int k = 1; k < node_count; ++k)
    sub[k - 1] = k;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub.head(node_count - 1),
                            Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_laguerre: eigen decomposition failed");

  GaussLaguerreRule rule;
  rule.nodes.resize(node_count);
  rule.weights.resize(node_count);
  rule.scaled_weights.resize(node_count);
  for (int i = 0; i < node_count; ++i) {
    // polish the seed with Newton steps on L_n; with the derivative identity
    // x L_n' = n (L_n - L_{n-1}) the step needs only the value ratio
    double x = es.eigenvalues()[i];
    for (int it = 0; it < 8; ++it) {
      const LaguerreProbe pr = probe_laguerre(node_count, x);
      const double dx = x / (node_count * (1.0 - pr.ratio_prev));
      if (!std::isfinite(dx) || std::abs(dx) > 0.05 * x + 0.05)
        break; // seed already sits on a derivative zero or worse; keep it
      x -= dx;
      if (std::abs(dx) <= 1e-15 * x)
        break;
    }
    rule.nodes[i] = x;

    // w_i = x_i / ((n+1) L_{n+1}(x_i))^2, evaluated in log form: the plain
    // weight underflows in the far tail while the exp(+x)-scaled weight
    // keeps full relative accuracy there
    const LaguerreProbe pr = probe_laguerre(node_count, x);
    const double ln_w = std::log(x) - 2.0 * std::log(node_count + 1.0) -
                        2.0 * pr.ln_abs_next;
    rule.weights[i] = std::exp(ln_w);
    rule.scaled_weights[i] = std::exp(ln_w + x);
  }
  return cache.emplace(node_count, std::move(rule)).first->second;
}

void QuadratureSpec::validate() const {
  if (node_count < 32)
    throw std::domain_error("QuadratureSpec: node_count must be >= 32");
  if (!(scale > 0.0))
    throw std::domain_error("QuadratureSpec: scale must be positive");
}

double bohr_energy(int n, double reduced_mass) {
  if (n < 1)
    throw std::domain_error("bohr_energy: n must be >= 1");
  if (!(reduced_mass > 0.0))
    throw std::domain_error("bohr_energy: reduced mass must be positive");
  return -reduced_mass / (2.0 * n * n);
}

double radial_wavefunction(int n, int l, double r) {
  check_nl(n, l);
  if (!(r > 0.0))
    throw std::domain_error("radial_wavefunction: r must be positive");
  return radial_poly_part(n, l, r) * std::exp(-r / n);
}

Rational expect_inv_r3_closed(int n, int l) {
  check_nl(n, l);
  if (l == 0)
    throw std::domain_error("expect_inv_r3_closed: divergent matrix element; "
                            "l=0 states receive no first-order shift");
  // 1/(n^3 l (l+1/2) (l+1)) = 2/(n^3 l (2l+1) (l+1)), overflow-checked
  const Rational denom = Rational(n) * Rational(n) * Rational(n) * Rational(l) *
                         Rational(2LL * l + 1) * Rational(l + 1);
  return Rational(2) / denom;
}

double radial_matrix_element(int n1, int n2, int l, int k,
                             const QuadratureSpec& spec) {
  check_nl(n1, l);
  check_nl(n2, l);
  if (2 * l + 2 + k < 1)
    throw std::domain_error("radial matrix element of r^" + std::to_string(k) +
                            " is not integrable for l=" + std::to_string(l));
  spec.validate();

  // substitute r = s*x so the combined exponential exp(x - r(1/n1 + 1/n2))
  // becomes exp(x(1 - scale)); at the default scale it cancels exactly and
  // the integrand against exp(-x) is the polynomial part alone
  const double inv_decay = 1.0 / n1 + 1.0 / n2;
  const double s = spec.scale / inv_decay;
  const double resid = 1.0 - s * inv_decay;

  const GaussLaguerreRule& rule = gauss_laguerre(spec.node_count);
  double sum = 0.0;
  for (int i = 0; i < spec.node_count; ++i) {
    const double x = rule.nodes[i];
    // pair the scaled weight with exp(resid*x - x): the tail terms become
    // products of accurately tiny factors instead of a huge polynomial value
    // against an absolutely-rounded (or underflowed) plain weight
    const double damp = std::exp((resid - 1.0) * x);
    if (damp == 0.0)
      continue;
    const double r = s * x;
    sum += rule.scaled_weights[i] * damp * radial_poly_part(n1, l, r) *
           radial_poly_part(n2, l, r) * std::pow(r, 2 + k);
  }
  return s * sum;
}

double expect_inv_rk_numeric(int n, int l, int k, const QuadratureSpec& spec) {
  return radial_matrix_element(n, n, l, k, spec);
}

RadialExpectation radial_expectation(int n, int l, int power,
                                     const QuadratureSpec& spec) {
  return {n, l, power, expect_inv_rk_numeric(n, l, power, spec)};
}

double radial_overlap_inv_r3(int n1, int n2, int l, const QuadratureSpec& spec) {
  if (l < 1)
    throw std::domain_error("radial_overlap_inv_r3: requires l >= 1");
  return radial_matrix_element(n1, n2, l, -3, spec);
}

} // namespace ncspectra::radial
