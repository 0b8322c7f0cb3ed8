#pragma once

// The hypergeometric-type partial differential operators whose polynomial
// eigenspaces drive the branching decompositions: the simplex operator left
// over from the scalar-line stratification, and the ball operator left over
// from the Lorentz one.  Everything here is exact rational arithmetic.

#include "polyalg/multipoly.hpp"
#include "polyalg/rational.hpp"

#include <vector>

namespace operators {

using polyalg::MultiPoly;
using polyalg::Rational;

// L_Lambda P = sum_i v_i(1-v_i) d_i^2 P - 2 sum_{i<j} v_i v_j d_i d_j P
//              + sum_i (lambda_i - |Lambda| v_i) d_i P
// on the simplex D_{n-1}, n = lambda.size(); P has n-1 variables.
MultiPoly simplex_pde_apply(const std::vector<Rational>& lambda,
                            const MultiPoly& P);

// The degree-k orthogonal polynomials on D_{n-1} for the weight
// prod v_i^{lambda_i - 1} (1-|v|)^{lambda_n - 1} satisfy
// L_Lambda P = -k(k + |Lambda| - 1) P.  True iff the residual is the zero
// polynomial on every basis element of degree k.
bool simplex_eigencheck(const std::vector<Rational>& lambda, int k);

// D_alpha P = sum_i d_i^2 P
//             - sum_i d_i [ v_i ((2 alpha - 1) P + sum_j v_j d_j P) ]
// on the ball B^p.
MultiPoly ball_pde_apply(const Rational& alpha, int p, const MultiPoly& P);

// The degree-k orthogonal polynomials for (1-|v|^2)^{alpha-1/2} satisfy
// D_alpha P + (k+p)(k + 2 alpha - 1) P = 0.  True iff the residual is the
// zero polynomial on every basis element of degree k.
bool ball_eigencheck(const Rational& alpha, int p, int k);

}  // namespace operators
