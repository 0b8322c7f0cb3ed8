#pragma once

// Gamma and Beta functions of symmetric cones.
//
// For a simple cone of rank r, Peirce multiplicity d and ambient dimension n,
//   gamma_cone(lambda) = (2 pi)^{(n-r)/2} prod_{i=1}^{r} Gamma(lambda - (i-1) d/2),
// which is the value of  int_cone exp(-tr x) det(x)^{lambda - n/r} dx  when dx
// is the Lebesgue measure induced by the trace inner product.  A direct sum
// multiplies the values of its factors.  The Beta function is the quotient
//   beta_cone(a, b) = gamma_cone(a) gamma_cone(b) / gamma_cone(a + b),
// equal to  int_{cone intersect (e - cone)} det(x)^{a-m} det(e-x)^{b-m} dx
// with m = n/r.

#include "jordan/algebra.hpp"

#include <vector>

namespace cones {

// Throws std::domain_error when some lambda - (i-1) d/2 is a pole of Gamma.
double gamma_cone(const jordan::Algebra& alg, double lambda);

double beta_cone(const jordan::Algebra& alg, double lambda1, double lambda2);

// Both sides of the factorization of a product of cone Gamma values through
// the diagonal stratification of cone^p, together with the strat-space
// integral linking them.  With |L| = lambda_1 + .. + lambda_p,
//
//   lhs = prod_k gamma_cone(lambda_k),
//   rhs = gamma_cone(|L|) p^{-(r|L| - n)} I,
//   I   = int_X det(e - |v|)^{lambda_p - m} prod_{k<p} det(e + v_k)^{lambda_k - m} dv,
//
// where X = { (v_1, .., v_{p-1}) : e + v_k and e - |v| in the cone } and
// |v| = v_1 + .. + v_{p-1}.  On the rank-1 cone I is evaluated by simplex
// quadrature (the affine map x_k = (1 + v_k)/p turns the weight into the
// Dirichlet weight, contributing p^{|L| - 1}); on higher-rank cones it is
// assembled from the telescoping Beta product
//   I = p^{r|L| - n} prod_{k=1}^{p-1} beta_cone(lambda_1 + .. + lambda_k, lambda_{k+1}).
struct GammaProductParts {
  double lhs;
  double rhs;
  double integral;
};

// pre: alg simple, every lambda_k > (r-1) d/2.
GammaProductParts gamma_product_identity(const std::vector<double>& lambda,
                                         const jordan::Algebra& alg);

}  // namespace cones
