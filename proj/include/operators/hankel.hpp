#pragma once

// Rank-one generalized Hankel transform: the inversion element of the
// conformal group acts on L^2(R^+, x^{lambda-1} dx) by
//   (T f)(t) = (Gamma(lambda) i^lambda)^{-1}
//              int_0^oo 0F1(lambda; i x t) f(x) x^{lambda-1} dx,
// with the principal branch of i^lambda.  Applied twice this is the scalar
// i^{-lambda}, the phase the inversion squares to in the metaplectic-type
// cover.
//
// The kernel is complex and grows like exp(sqrt(2xt)) in modulus, so the
// truncated transform is only trustworthy on inputs whose decay beats that
// growth; the truncation check reports when the last node still carries
// weight.  This corner of the library is numerically exploratory:
// fixed-order quadrature on a truncated interval, series or asymptotic
// evaluation of the kernel, strictly serial summation so results are
// reproducible.

#include <complex>
#include <vector>

namespace operators {

// 0F1(lambda; i u); lambda not a nonpositive integer.  Direct series while
// |u| <= 400 (cancellation there costs about exp(sqrt(2|u|)), still well
// inside double precision), and the large-argument expansion of the modified
// Bessel function I_{lambda-1}(2 sqrt(iu)) beyond.
std::complex<double> hankel_kernel(double lambda, double u);

struct HankelRule {
  std::vector<double> x, w;  // Gauss-Legendre nodes and weights on (0, truncation)
  double truncation = 0;
};
HankelRule hankel_rule(double truncation, int npts);

// Transform of f, given by its values at rule.x, evaluated on tgrid.
// Requires lambda > 1.  truncation_warning (optional) is set when the
// integrand at the last node is not negligible against the accumulated
// mass, i.e. when the truncation was too aggressive for this input.
std::vector<std::complex<double>> hankel_rank1(
    double lambda, const std::vector<std::complex<double>>& f_at_nodes,
    const HankelRule& rule, const std::vector<double>& tgrid,
    bool* truncation_warning = nullptr);

}  // namespace operators
