#pragma once

// Shared helpers for the test suites: seeded random vectors and points
// strictly inside a symmetric cone.

#include "jordan/algebra.hpp"

#include <random>

namespace testsupport {

inline Eigen::VectorXd random_vector(std::mt19937& rng, int n, double lo = -1.0,
                                     double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = d(rng);
  return v;
}

// A square plus a multiple of the identity lies strictly inside the cone.
inline Eigen::VectorXd random_in_cone(const jordan::Algebra& alg, std::mt19937& rng,
                                      double margin = 0.4) {
  Eigen::VectorXd y = random_vector(rng, alg.dim(), -0.6, 0.6);
  return jordan::product(alg, y, y) + margin * jordan::identity(alg);
}

}  // namespace testsupport
