#pragma once

// Orthogonal polynomial bases on the simplex and the unit ball, built from
// homogenized Jacobi/Gegenbauer factors, together with harmonic polynomial
// spaces: exact Laplacian null-space bases, exact moments over the unit
// sphere, and the zonal reproducing kernel.

#include "orthopoly/classical.hpp"
#include "polyalg/multipoly.hpp"
#include "polyalg/rational.hpp"

#include <Eigen/Dense>

#include <vector>

namespace orthopoly {

// All exponent vectors of total degree n in p variables, in descending
// lexicographic order (so (n,0,...,0) first).
std::vector<std::vector<int>> homogeneous_exponents(int p, int n);

// ---------------------------------------------------------------------------
// Simplex D_n = {x_i > 0, |x| < 1}, weight prod x_i^{l_i - 1} (1-|x|)^{l_{n+1}-1}.

// The nested family built from the corner (x_1, x_2) pairing: with head sums
// a_i = l_1 + ... + l_i + 2(k_1 + ... + k_{i-1}),
//   R_k(x) = P_{k_n}^{l_{n+1}-1, a_n-1}(2|x| - 1)
//            prod_{i<n} (|x^{(i)}| + x_{i+1})^{k_i}
//                       P_{k_i}^{l_{i+1}-1, a_i-1}((|x^{(i)}| - x_{i+1}) /
//                                                  (|x^{(i)}| + x_{i+1})).
// Exact, degree |k|, pairwise orthogonal for the weight above.
polyalg::MultiPoly simplex_basis(int n, const std::vector<polyalg::Rational>& lambda,
                                 const std::vector<int>& k);

// The stick-breaking family: with tail sums
// a_i = l_{i+1} + ... + l_{n+1} + 2(k_{i+1} + ... + k_n) - 1 and w_i =
// 1 - (x_1 + ... + x_{i-1}),
//   Q_k(x) = prod_i w_i^{k_i} P_{k_i}^{a_i, l_i - 1}(2 x_i / w_i - 1).
// Spans the same per-degree orthogonal complements as simplex_basis.
polyalg::MultiPoly simplex_basis_dunklxu(int n, const std::vector<polyalg::Rational>& lambda,
                                         const std::vector<int>& k);

// ---------------------------------------------------------------------------
// Unit ball B^p, weight (1 - |v|^2)^{a - 1/2}.

// Nested Gegenbauer family: with tail sums a_j = a + (k_{j+1} + ... + k_p) +
// (p-j)/2 and W_j = 1 - v_1^2 - ... - v_{j-1}^2,
//   P_k(v) = prod_j W_j^{k_j/2} C_{k_j}^{a_j}(v_j / W_j^{1/2}),
// assembled from inflated Gegenbauer factors so all exponents are integral.
polyalg::MultiPoly ball_basis(int p, const polyalg::Rational& a, const std::vector<int>& k);

// Radial-times-spherical-harmonic family on B^p (p >= 2):
//   P_{j,kappa}(v) = P_j^{a - 1/2, l - 2j + (p-2)/2}(2|v|^2 - 1)
//                    Y_kappa(v),  Y_kappa in harmonic_basis(p, l - 2j).
// Degree l; requires 0 <= 2j <= l and kappa indexing that harmonic basis.
polyalg::MultiPoly ball_mixed_basis(int p, const polyalg::Rational& a, int l, int j, int kappa);

// ---------------------------------------------------------------------------
// Harmonic polynomials.

// Exact basis of the harmonic (Laplacian null-space) homogeneous polynomials
// of degree n in p >= 2 variables.  Elements are pairwise orthogonal over the
// unit sphere, have coprime integer coefficients with positive leading
// (lexicographically largest) coefficient, and the list order is the
// descending graded-lex order of the leading monomials before
// orthogonalization, so the output is deterministic.
std::vector<polyalg::MultiPoly> harmonic_basis(int p, int n);

// Zonal reproducing kernel of the degree-n harmonic space for p >= 3:
//   K_n(x, y) = ((2n + p - 2)/(p - 2)) |x|^n |y|^n C_n^{(p-2)/2}(<x,y>/(|x||y|)),
// a polynomial in x and y; reproduces against the normalized surface measure.
// The p = 2 case has no such formula and is rejected.
double harmonic_kernel(int p, int n, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// Exact moment of a monomial over the unit sphere S^{p-1} against the
// normalized surface measure (total mass 1); zero when any exponent is odd.
polyalg::Rational sphere_moment(int p, const std::vector<int>& exps);

// Exact inner product of two polynomials in L^2(S^{p-1}, normalized measure).
polyalg::Rational sphere_inner(int p, const polyalg::MultiPoly& f, const polyalg::MultiPoly& g);

// Surface area of S^{p-1}, i.e. 2 pi^{p/2} / Gamma(p/2); converts the
// normalized sphere inner product into the raw surface-measure one.
double surface_area(int p);

}  // namespace orthopoly
