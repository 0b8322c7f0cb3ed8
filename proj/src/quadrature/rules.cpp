#include "quadrature/rules.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace quadrature {

namespace {

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

}  // namespace

double jacobi_total_mass(double alpha, double beta) {
  // int_{-1}^{1} (1-v)^a (1+v)^b dv = 2^{a+b+1} B(a+1, b+1).
  return std::exp((alpha + beta + 1.0) * std::log(2.0) + log_beta(alpha + 1.0, beta + 1.0));
}

double simplex_total_mass(const std::vector<double>& lambda) {
  double s = 0.0, lg = 0.0;
  for (double l : lambda) {
    s += l;
    lg += std::lgamma(l);
  }
  return std::exp(lg - std::lgamma(s));
}

double ball_total_mass(int p, double alpha) {
  return std::exp(-0.5 * p * std::log(2.0) + 0.5 * p * std::log(M_PI) +
                  std::lgamma(alpha + 0.5) - std::lgamma(alpha + 0.5 * (p + 1)));
}

QuadratureRule gauss_jacobi_rule(int npts, double alpha, double beta) {
  if (npts < 1) throw std::invalid_argument("gauss_jacobi_rule: npts >= 1 required");
  if (alpha <= -1.0 || beta <= -1.0)
    throw std::invalid_argument("gauss_jacobi_rule: alpha, beta > -1 required");

  const double ab = alpha + beta;
  Eigen::VectorXd diag(npts);
  Eigen::VectorXd sub(std::max(npts - 1, 0));
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < npts; ++k) {
    double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    diag(k) = (beta * beta - alpha * alpha) / den;
  }
  for (int k = 1; k < npts; ++k) {
    double b;
    if (k == 1)
      b = 4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    else
      b = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
          ((2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0));
    sub(k - 1) = std::sqrt(b);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);

  const double mu0 = jacobi_total_mass(alpha, beta);
  QuadratureRule rule;
  rule.weight = {Domain::Interval, {alpha, beta}};
  rule.nodes = es.eigenvalues();
  rule.weights.resize(npts);
  for (int i = 0; i < npts; ++i) {
    double v0 = es.eigenvectors()(0, i);
    rule.weights(i) = mu0 * v0 * v0;
  }
  rule.order = 2 * npts - 1;
  return rule;
}

QuadratureRule simplex_rule(int n, const std::vector<double>& lambda, int npts) {
  if (n < 1) throw std::invalid_argument("simplex_rule: n >= 1 required");
  if (static_cast<int>(lambda.size()) != n + 1)
    throw std::invalid_argument("simplex_rule: lambda needs n+1 entries");
  for (double l : lambda)
    if (l <= 0.0) throw std::invalid_argument("simplex_rule: lambda entries > 0 required");

  QuadratureRule rule;
  rule.weight = {Domain::Simplex, lambda};
  rule.order = 2 * npts - 1;

  // D_1 = (0,1) with weight t^{l_1-1} (1-t)^{l_2-1}: map t = (1+s)/2.
  QuadratureRule gj = gauss_jacobi_rule(npts, lambda[1] - 1.0, lambda[0] - 1.0);
  const double scale1 = std::pow(2.0, -(lambda[0] + lambda[1] - 1.0));
  if (n == 1) {
    rule.nodes.resize(npts, 1);
    rule.weights.resize(npts);
    for (int i = 0; i < npts; ++i) {
      rule.nodes(i, 0) = 0.5 * (1.0 + gj.nodes(i, 0));
      rule.weights(i) = scale1 * gj.weights(i);
    }
    return rule;
  }

  // x = phi(y, u) splits y_1 into the first two coordinates; the mass factor
  // 2^{-(l_1+l_2-1)} and the Jacobi weight (1-u)^{l_2-1} (1+u)^{l_1-1} come
  // from the pullback of the measure.
  std::vector<double> reduced;
  reduced.push_back(lambda[0] + lambda[1]);
  reduced.insert(reduced.end(), lambda.begin() + 2, lambda.end());
  QuadratureRule inner = simplex_rule(n - 1, reduced, npts);

  const int total = inner.size() * npts;
  rule.nodes.resize(total, n);
  rule.weights.resize(total);
  int row = 0;
  for (int a = 0; a < inner.size(); ++a)
    for (int b = 0; b < npts; ++b, ++row) {
      double y1 = inner.nodes(a, 0);
      double u = gj.nodes(b, 0);
      rule.nodes(row, 0) = 0.5 * y1 * (1.0 + u);
      rule.nodes(row, 1) = 0.5 * y1 * (1.0 - u);
      for (int j = 1; j < n - 1; ++j) rule.nodes(row, j + 1) = inner.nodes(a, j);
      rule.weights(row) = scale1 * inner.weights(a) * gj.weights(b);
    }
  return rule;
}

QuadratureRule ball_rule(int p, double alpha, int npts) {
  if (p < 1) throw std::invalid_argument("ball_rule: p >= 1 required");
  if (alpha <= -0.5) throw std::invalid_argument("ball_rule: alpha > -1/2 required");

  QuadratureRule rule;
  rule.weight = {Domain::Ball, {alpha}};
  rule.order = 2 * npts - 1;

  QuadratureRule gj = gauss_jacobi_rule(npts, alpha - 0.5, alpha - 0.5);
  const double scale = std::sqrt(0.5);
  if (p == 1) {
    rule.nodes = gj.nodes;
    rule.weights = scale * gj.weights;
    return rule;
  }

  // v = theta(x, u) = (x, (1-|x|^2)^{1/2} u); the leftover radial power feeds
  // the inner ball with alpha + 1/2.
  QuadratureRule inner = ball_rule(p - 1, alpha + 0.5, npts);

  const int total = inner.size() * npts;
  rule.nodes.resize(total, p);
  rule.weights.resize(total);
  int row = 0;
  for (int a = 0; a < inner.size(); ++a) {
    double r2 = inner.nodes.row(a).squaredNorm();
    double c = std::sqrt(std::max(0.0, 1.0 - r2));
    for (int b = 0; b < npts; ++b, ++row) {
      rule.nodes.row(row).head(p - 1) = inner.nodes.row(a);
      rule.nodes(row, p - 1) = c * gj.nodes(b, 0);
      rule.weights(row) = scale * inner.weights(a) * gj.weights(b);
    }
  }
  return rule;
}

}  // namespace quadrature
