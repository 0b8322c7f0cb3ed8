#pragma once

// Gauss-Jacobi rules on (-1,1) and mapped product rules on the simplex
//   D_n = {x_i > 0, 1 - |x| > 0},  weight (1-|x|)^{l_{n+1}-1} prod x_i^{l_i-1},
// and the unit ball B^p with measure
//   dmu_a(v) = 2^{-p/2} (1 - |v|^2)^{a-1/2} dv.
//
// The multivariate rules are tensor products pushed through the same iterated
// diffeomorphisms that split the weights into one-dimensional Jacobi factors:
//   phi((y_1,..,y_{n-1}), u) = (y_1(1+u)/2, y_1(1-u)/2, y_2, .., y_{n-1})
// on the simplex, with per-step mass factor 2^{-(l_1+l_2-1)}, and
//   theta(x, u) = (x, (1-|x|^2)^{1/2} u)
// on the ball, with 1 - |theta(x,u)|^2 = (1-|x|^2)(1-u^2) and mass factor
// 2^{-1/2} per step.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <type_traits>
#include <vector>

namespace quadrature {

enum class Domain { Interval, Simplex, Ball };

// Parameters of the measure a rule integrates against.
//   Interval: params = {alpha, beta}   for (1-v)^alpha (1+v)^beta on (-1,1)
//   Simplex:  params = {l_1,..,l_{n+1}} for the Dirichlet-type weight on D_n
//   Ball:     params = {alpha}          for dmu_alpha on B^p
struct WeightSpec {
  Domain domain;
  std::vector<double> params;
};

struct QuadratureRule {
  WeightSpec weight;
  Eigen::MatrixXd nodes;    // one row per node
  Eigen::VectorXd weights;  // positive
  int order;                // per-factor polynomial exactness degree

  int size() const { return static_cast<int>(weights.size()); }
  int dim() const { return static_cast<int>(nodes.cols()); }
};

// Default per-dimension node count for the verification suites.
inline constexpr int kDefaultNodeCount = 40;

// Nodes and weights for the weight (1-v)^alpha (1+v)^beta on (-1,1), by the
// symmetric tridiagonal eigenproblem of the three-term recurrence. Exact for
// polynomials of degree <= 2 npts - 1. Requires alpha, beta > -1, npts >= 1.
QuadratureRule gauss_jacobi_rule(int npts, double alpha, double beta);

// Rule on D_n for the weight (1-|x|)^{l_{n+1}-1} prod x_i^{l_i-1}; lambda
// holds (l_1, .., l_{n+1}), all > 0. npts nodes per one-dimensional factor.
QuadratureRule simplex_rule(int n, const std::vector<double>& lambda, int npts);

// Rule on B^p for dmu_alpha; requires alpha > -1/2.
QuadratureRule ball_rule(int p, double alpha, int npts);

// Closed-form total masses of the three weights, for consistency checks.
double jacobi_total_mass(double alpha, double beta);
double simplex_total_mass(const std::vector<double>& lambda);
double ball_total_mass(int p, double alpha);

// Pairwise (cascade) summation: deterministic and accurate independent of the
// evaluation order used to fill the buffer.
template <class T>
T pairwise_sum(const T* data, std::size_t n) {
  if (n == 0) return T(0);
  if (n <= 8) {
    T s = data[0];
    for (std::size_t i = 1; i < n; ++i) s += data[i];
    return s;
  }
  std::size_t h = n / 2;
  return pairwise_sum(data, h) + pairwise_sum(data + h, n - h);
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(v.data(), v.size());
}

inline double total_weight(const QuadratureRule& rule) {
  std::vector<double> w(rule.weights.data(), rule.weights.data() + rule.size());
  return pairwise_sum(w);
}

// Integrate f against the rule's measure; f takes a node as a vector.
template <class F>
auto integrate(F&& f, const QuadratureRule& rule) {
  using R = std::decay_t<decltype(f(std::declval<const Eigen::VectorXd&>()))>;
  std::vector<R> terms(static_cast<std::size_t>(rule.size()));
  for (int i = 0; i < rule.size(); ++i) {
    Eigen::VectorXd x = rule.nodes.row(i).transpose();
    terms[static_cast<std::size_t>(i)] = rule.weights(i) * f(x);
  }
  return pairwise_sum(terms);
}

// One-dimensional convenience overload; f takes the node as a scalar.
template <class F>
auto integrate1(F&& f, const QuadratureRule& rule) {
  using R = std::decay_t<decltype(f(0.0))>;
  std::vector<R> terms(static_cast<std::size_t>(rule.size()));
  for (int i = 0; i < rule.size(); ++i)
    terms[static_cast<std::size_t>(i)] = rule.weights(i) * f(rule.nodes(i, 0));
  return pairwise_sum(terms);
}

}  // namespace quadrature
