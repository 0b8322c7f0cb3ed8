#pragma once

// Derived action of the conformal Lie algebra on the L^2(cone) model,
// restricted to the closed class f(x) e^{i(x|w)} with f a base^mu-polynomial
// sum over Gaussian rationals and w a fixed rational frequency.  The phase
// is a symbolic marker: the exact operators rewrite f and w only, and the
// numeric evaluator multiplies the phase back in.
//
// With (.|.) the trace form, m = n/r and T^* the trace-form adjoint, the
// three graded pieces act by
//   (u,0,0): multiplication by i (u|x),
//   (0,T,0): (lambda/2m) Tr(T^*) + the directional derivative along T^* x,
//   (0,0,v): i (v | B_lambda . ) with the vector-valued Bessel operator.

#include "jordan/algebra.hpp"
#include "polyalg/multipoly.hpp"
#include "polyalg/powpoly.hpp"
#include "polyalg/rational.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace operators {

using polyalg::GaussRational;
using polyalg::MultiPolyC;
using polyalg::PowPolyC;
using polyalg::Rational;

struct PhaseFn {
  std::vector<Rational> w;  // frequency of the symbolic phase e^{i(x|w)}
  PowPolyC f;
};

// Diagonal of the trace-form Gram matrix in plain coordinates: 2 on Lorentz
// blocks and 1 elsewhere.  (The plain basis is trace-form orthogonal for
// every supported algebra.)
std::vector<Rational> trace_form_diagonal(const jordan::Algebra& alg);

// d_k applied to f e^{i(x|w)}: (d_k f + i c_k w_k f) e^{i(x|w)}.
PhaseFn phase_derivative(const jordan::Algebra& alg, const PhaseFn& F, int var);

std::complex<double> phase_eval(const jordan::Algebra& alg, const PhaseFn& F,
                                const Eigen::VectorXd& x);

PhaseFn lie_translation(const jordan::Algebra& alg, const std::vector<Rational>& u,
                        const PhaseFn& F);

// T is a plain-coordinate matrix in the span of the box operators.
PhaseFn lie_structure(const jordan::Algebra& alg, const Rational& lambda,
                      const std::vector<std::vector<Rational>>& T,
                      const PhaseFn& F);

// Supported algebras: a single Lorentz factor, or a product of rank-one
// lines; other shapes are rejected.
PhaseFn lie_inversion(const jordan::Algebra& alg, const Rational& lambda,
                      const std::vector<Rational>& v, const PhaseFn& F);

}  // namespace operators
