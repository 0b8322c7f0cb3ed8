#include "cones/gamma.hpp"

#include "quadrature/rules.hpp"

#include <cmath>
#include <stdexcept>

namespace cones {

namespace {

bool is_gamma_pole(double a) { return a <= 0.0 && a == std::floor(a); }

}  // namespace

double gamma_cone(const jordan::Algebra& alg, double lambda) {
  double value = 1.0;
  for (const jordan::Factor& f : alg.factors()) {
    const double d = f.peirce_dim();
    for (int i = 1; i <= f.rank; ++i) {
      const double a = lambda - 0.5 * d * (i - 1);
      if (is_gamma_pole(a)) {
        throw std::domain_error("gamma_cone: lambda hits a pole of the factor at " +
                                std::to_string(a));
      }
      value *= std::tgamma(a);
    }
    value *= std::pow(2.0 * M_PI, 0.5 * (f.dim - f.rank));
  }
  return value;
}

double beta_cone(const jordan::Algebra& alg, double lambda1, double lambda2) {
  return gamma_cone(alg, lambda1) * gamma_cone(alg, lambda2) /
         gamma_cone(alg, lambda1 + lambda2);
}

GammaProductParts gamma_product_identity(const std::vector<double>& lambda,
                                         const jordan::Algebra& alg) {
  if (lambda.empty()) {
    throw std::invalid_argument("gamma_product_identity: empty weight list");
  }
  if (!alg.simple()) {
    throw std::invalid_argument("gamma_product_identity: algebra must be simple");
  }
  const int p = static_cast<int>(lambda.size());
  const int r = alg.rank();
  const int n = alg.dim();
  const double d = alg.factors().front().peirce_dim();
  double sum = 0.0;
  for (double lk : lambda) {
    if (lk <= 0.5 * d * (r - 1)) {
      throw std::domain_error("gamma_product_identity: weight below (r-1)d/2");
    }
    sum += lk;
  }

  GammaProductParts parts{};
  parts.lhs = 1.0;
  for (double lk : lambda) parts.lhs *= gamma_cone(alg, lk);

  if (p == 1) {
    parts.integral = 1.0;
  } else if (r == 1) {
    // The substitution x_k = (1 + v_k)/p maps the fiber onto the open simplex
    // and turns the weight into the Dirichlet weight with exponents lambda.
    const auto rule =
        quadrature::simplex_rule(p - 1, lambda, quadrature::kDefaultNodeCount);
    const double mass = quadrature::integrate([](const Eigen::VectorXd&) { return 1.0; }, rule);
    parts.integral = std::pow(static_cast<double>(p), sum - 1.0) * mass;
  } else {
    double chain = 1.0;
    double partial = lambda[0];
    for (int k = 1; k < p; ++k) {
      chain *= beta_cone(alg, partial, lambda[k]);
      partial += lambda[k];
    }
    parts.integral = std::pow(static_cast<double>(p), r * sum - n) * chain;
  }

  parts.rhs = gamma_cone(alg, sum) *
              std::pow(static_cast<double>(p), -(r * sum - n)) * parts.integral;
  return parts;
}

}  // namespace cones
