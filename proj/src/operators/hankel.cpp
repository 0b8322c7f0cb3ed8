#include "operators/hankel.hpp"

#include "quadrature/rules.hpp"

#include <cmath>
#include <stdexcept>

namespace operators {

namespace {

using Cx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

// Above this the direct series has lost too many digits to cancellation and
// the asymptotic expansion has long since converged.
constexpr double kSeriesLimit = 400.0;

Cx kernel_series(double lambda, double u) {
  const Cx z(0.0, u);
  Cx term(1.0, 0.0), acc(1.0, 0.0);
  for (int k = 0; k < 800; ++k) {
    term *= z / ((lambda + k) * (k + 1.0));
    acc += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(acc))) break;
  }
  return acc;
}

// 0F1(a; z) = Gamma(a) (sqrt z)^{1-a} I_{a-1}(2 sqrt z).  For z = iu with
// u > 0 the argument xi = 2 sqrt(z) sits on the ray arg = pi/4, so the
// standard large-argument expansion of I applies and the recessive e^{-xi}
// branch is smaller by e^{-2 Re xi} < 1e-24 wherever this path is taken.
Cx kernel_asymptotic(double lambda, double u) {
  const double nu = lambda - 1.0;
  const Cx sqrtz = std::sqrt(u) * std::polar(1.0, kPi / 4);
  const Cx xi = 2.0 * sqrtz;

  Cx term(1.0, 0.0), acc(1.0, 0.0);
  double last = 1.0;
  for (int k = 1; k <= 40; ++k) {
    term *= -(4 * nu * nu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k) / xi;
    const double mag = std::abs(term);
    if (mag > last) break;  // past the optimal truncation point
    last = mag;
    acc += term;
    if (mag < 1e-17) break;
  }
  const Cx bessel_i = std::exp(xi) / std::sqrt(2.0 * kPi * xi) * acc;
  return std::tgamma(lambda) * std::pow(sqrtz, 1.0 - lambda) * bessel_i;
}

}  // namespace

Cx hankel_kernel(double lambda, double u) {
  if (lambda <= 0 && lambda == std::floor(lambda))
    throw std::invalid_argument("hankel_kernel: parameter is a nonpositive integer");
  if (std::abs(u) <= kSeriesLimit) return kernel_series(lambda, u);
  return u > 0 ? kernel_asymptotic(lambda, u)
               : std::conj(kernel_asymptotic(lambda, -u));
}

HankelRule hankel_rule(double truncation, int npts) {
  if (!(truncation > 0) || npts < 1)
    throw std::invalid_argument("hankel_rule: parameters");
  const auto gl = quadrature::gauss_jacobi_rule(npts, 0.0, 0.0);
  HankelRule r;
  r.truncation = truncation;
  r.x.resize(npts);
  r.w.resize(npts);
  for (int i = 0; i < npts; ++i) {
    r.x[i] = truncation * (gl.nodes(i, 0) + 1) / 2;
    r.w[i] = truncation / 2 * gl.weights(i);
  }
  return r;
}

std::vector<Cx> hankel_rank1(double lambda, const std::vector<Cx>& f_at_nodes,
                             const HankelRule& rule, const std::vector<double>& tgrid,
                             bool* truncation_warning) {
  if (!(lambda > 1)) throw std::invalid_argument("hankel_rank1: requires lambda > 1");
  if (f_at_nodes.size() != rule.x.size())
    throw std::invalid_argument("hankel_rank1: node count mismatch");

  const Cx prefactor = 1.0 / (std::tgamma(lambda) * std::exp(Cx(0.0, kPi * lambda / 2)));

  std::vector<double> xw(rule.x.size());
  size_t top = 0;
  for (size_t j = 0; j < rule.x.size(); ++j) {
    xw[j] = rule.w[j] * std::pow(rule.x[j], lambda - 1);
    if (rule.x[j] > rule.x[top]) top = j;
  }

  bool warn = false;
  std::vector<Cx> out;
  out.reserve(tgrid.size());
  for (double t : tgrid) {
    Cx acc = 0;
    double mass = 0;
    Cx at_top = 0;
    for (size_t j = 0; j < rule.x.size(); ++j) {
      const Cx contrib = xw[j] * hankel_kernel(lambda, rule.x[j] * t) * f_at_nodes[j];
      acc += contrib;
      mass += std::abs(contrib);
      if (j == top) at_top = contrib;
    }
    if (std::abs(at_top) > 1e-8 * std::max(mass, 1e-300)) warn = true;
    out.push_back(prefactor * acc);
  }
  if (truncation_warning) *truncation_warning = warn;
  return out;
}

}  // namespace operators
