#pragma once

// Bessel operators of symmetric cones acting on the closed class
// base^mu * polynomial, together with the closed forms these operators take
// after stratifying a cone over a smaller one (a scalar line inside a
// product of lines, and a Lorentz cone inside a larger Lorentz cone).
//
// Everything is written in plain coordinates.  The defining expression
// P(d/dx)x + lambda d/dx lives in a basis orthonormal for the trace form;
// on a Lorentz factor that basis is e_k/sqrt(2), which is where the 1/4,
// 1/2 and lambda/2 prefactors below come from.  Rank one lives on (0,oo)
// with base t, the Lorentz family on R^n with the Lorentz determinant as
// base, and all results are exact.

#include "polyalg/multipoly.hpp"
#include "polyalg/powpoly.hpp"
#include "polyalg/rational.hpp"

#include <vector>

namespace operators {

using polyalg::MultiPoly;
using polyalg::PowPoly;
using polyalg::Rational;

// x_1^2 - x_2^2 - ... - x_m^2 as a polynomial in nvars >= m variables.
MultiPoly lorentz_determinant(int nvars, int m);
inline MultiPoly lorentz_determinant(int n) { return lorentz_determinant(n, n); }

// Rank one: B_lambda f = t f'' + lambda f'.  Requires base t.
PowPoly bessel_rank1(const Rational& lambda, const PowPoly& f);

// Lorentz cone in the first m variables of f (all of them when m < 0).
// Component l of B_lambda f is
//   (1/4) x_l sum_i eps(i,l) d_i^2 f + (1/2) sum_{i != l} x_i d_i d_l f
//     + (lambda/2) d_l f,
// with eps(i,l) = +1 when i = 1, l = 1 or i = l and -1 otherwise; these are
// the structure constants P(e_i,e_j)e_k of the polarized quadratic
// representation in the canonical basis.  Variables beyond the first m ride
// along as parameters, and the base of f is unconstrained.
std::vector<PowPoly> bessel_lorentz(const Rational& lambda, const PowPoly& f,
                                    int m = -1);

// Product of rank-one factors, one weight per variable:
//   sum_i (x_i d_i^2 + lambda_i d_i) f.
PowPoly bessel_tensor_sum(const std::vector<Rational>& lambda, const PowPoly& f);

// Residual of the shift identity
//   B_lambda(det^mu f) = det^mu (B_{lambda+2mu} f + mu(mu+lambda-n/r) x^{-1} f),
// identically zero on the whole class.  Rank one has det = t, n/r = 1 and
// x^{-1} = 1/t; the Lorentz version has n/r = n/2, (x^{-1})_l = eps_l x_l/det
// with eps = (+1,-1,..,-1), and requires base lorentz_determinant(n).
PowPoly bessel_shift_residual_rank1(const Rational& lambda, const Rational& mu,
                                    const PowPoly& f);
std::vector<PowPoly> bessel_shift_residual_lorentz(const Rational& lambda,
                                                   const Rational& mu,
                                                   const PowPoly& f);

// Scalar line inside a product of n lines: on (t, v_1..v_{n-1}) with base t,
// pulled through (t,v) -> (t v_1, .., t v_{n-1}, t(1-|v|)), the tensor sum
// becomes
//   (t d_t^2 + |Lambda| d_t) f
//     + (1/t) [ sum_i v_i(1-v_i) d_{v_i}^2 f
//               - 2 sum_{i<j} v_i v_j d_{v_i} d_{v_j} f
//               + sum_i (lambda_i - |Lambda| v_i) d_{v_i} f ].
PowPoly strat_bessel_tensor(const std::vector<Rational>& lambda, const PowPoly& f);

// Lorentz cone of dimension n-p inside one of dimension n: on
// (x_1..x_{n-p}, v_1..v_p) with base D(x) = x_1^2 - .. - x_{n-p}^2, pulled
// through z = (x, -sqrt(D(x)) v), the V_{n-p}-components of the ambient
// operator are
//   (B^{(n-p)}_lambda f)_l + (eps_l x_l / (4 D)) [ sum_k d_{v_k}^2 f
//     - sum_{k,k'} v_k v_{k'} d_{v_k} d_{v_k'} f
//     - (2 lambda - n + p + 1) sum_k v_k d_{v_k} f ].
std::vector<PowPoly> strat_bessel_lorentz(const Rational& lambda, int n, int p,
                                          const PowPoly& f);

// The families above (plus the polynomial eigen-operators from
// eigen_pde.hpp) bundled behind one description, for table drivers.
enum class OperatorFamily {
  BesselRank1,
  BesselLorentz,
  BesselTensorSum,
  SimplexPde,
  BallPde,
  StratBesselTensor,
  StratBesselLorentz,
};

struct DiffOperatorSpec {
  OperatorFamily family;
  std::vector<Rational> lambda;  // one entry unless the family takes a vector
  int n = 0;                     // ambient dimension where one is needed
  int p = 0;                     // fiber dimension of the Lorentz stratification
};

// Validates parameter ranges and dispatches.  Scalar families return a
// single entry; vector-valued ones return their components in coordinate
// order.  The two Pde families expect a plain polynomial (a single base^0
// term).
std::vector<PowPoly> apply_operator(const DiffOperatorSpec& spec, const PowPoly& f);

}  // namespace operators
