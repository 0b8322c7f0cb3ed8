#pragma once

// Classical one-variable orthogonal polynomial families (Jacobi, Gegenbauer)
// with exact rational coefficients, generalized hypergeometric series in the
// convergent regime, and the coefficient constructors built from them: the
// Juhl-type symbol, Rankin-Cohen coefficient lists, and the two
// Fourier-integral identities used by the verification harness.

#include "polyalg/multipoly.hpp"
#include "polyalg/rational.hpp"

#include <complex>
#include <vector>

namespace orthopoly {

using polyalg::MultiPoly;
using polyalg::Rational;

// ---------------------------------------------------------------------------
// Hypergeometric series (forward summation; convergent arguments only).

double pochhammer(double a, int n);
std::complex<double> pochhammer(std::complex<double> a, int n);

// pFq(a; b; z) by direct term recursion.  Terminates early when an upper
// parameter is a non-positive integer (the series is then a polynomial).
// Throws std::domain_error when a lower parameter is a non-positive integer
// or when p > q+1 with |z| >= 1 (divergent), and std::runtime_error when the
// tail has not dropped below tol after the iteration cap.
std::complex<double> hyper_pfq(const std::vector<std::complex<double>>& a,
                               const std::vector<std::complex<double>>& b,
                               std::complex<double> z, double tol = 1e-15);

std::complex<double> kummer_1f1(std::complex<double> a, std::complex<double> b,
                                std::complex<double> z, double tol = 1e-15);
std::complex<double> conf_0f1(std::complex<double> b, std::complex<double> z,
                              double tol = 1e-15);

// ---------------------------------------------------------------------------
// Jacobi and Gegenbauer polynomials, exact in one variable.

// P_n^{a,b}(t) = 2^{-n} sum_s C(n+a, n-s) C(n+b, s) (t-1)^s (t+1)^{n-s}.
MultiPoly jacobi_poly(int n, const Rational& a, const Rational& b);

// L^2 norm squared of P_n^{a,b} for the weight (1-t)^a (1+t)^b on (-1,1).
double jacobi_norm2(int n, double a, double b);

// C_n^a = ((2a)_n / (a+1/2)_n) P_n^{a-1/2, a-1/2}; requires (a+1/2)_n != 0.
MultiPoly gegenbauer(int n, const Rational& a);

// L^2 norm squared of C_n^a for the weight (1-t^2)^{a-1/2}; requires a > 0.
double gegenbauer_norm2(int n, double a);

// B(t)^k P_k^{a,b}(A(t)/B(t)), expanded exactly:
//   2^{-k} sum_s C(k+a, k-s) C(k+b, s) (A-B)^s (A+B)^{k-s}.
// This homogenized form is what the multivariate bases are assembled from.
MultiPoly inflated_jacobi(int k, const Rational& a, const Rational& b,
                          const MultiPoly& A, const MultiPoly& B);

// Two-variable polynomial x^{l/2} C_l^a(y / x^{1/2}) in (x, y); the parity of
// C_l^a makes every exponent of x integral.
MultiPoly inflated_gegenbauer(int l, const Rational& a);

// Coefficients a_k(l, a) = (-1)^k 2^{l-2k} (a)_{l-k} / (k! (l-2k)!) for
// k = 0..floor(l/2).  The Pochhammer form equals the Gamma-function ratio
// Gamma(a+l-k)/Gamma(a) wherever the latter is finite and extends it by the
// limiting value elsewhere, so no parameter is singular.
std::vector<Rational> juhl_coefficients(int l, const Rational& a);

// Symbol sum_k a_k(l, a) y^{l-2k} q^k in the variables (q, y); coincides with
// inflated_gegenbauer(l, a) under (x, y) -> (q, y).
MultiPoly juhl_symbol(int l, const Rational& a);

// c_j = (-1)^j (lp + l - j)_j (lpp + j)_{l-j} / (j! (l-j)!), j = 0..l.
std::vector<Rational> rankin_cohen_coefficients(const Rational& lp, const Rational& lpp, int l);

// ---------------------------------------------------------------------------
// Fourier-integral identities.  Each evaluator returns the two sides of the
// identity separately so tests can compare them against one another.

struct FourierPair {
  std::complex<double> lhs;
  std::complex<double> rhs;
  // False when the oscillation exceeds the calibrated quadrature range
  // (|x| > 50); the values are still computed but should not be trusted.
  bool quadrature_ok = true;
  // True when the parameters satisfy the hypotheses under which the identity
  // is stated (a, b > 1, resp. nu > 1); smaller positive values are accepted
  // and evaluated anyway.
  bool in_stated_range = true;
};

// lhs = 2^{a+b+l-1} (i^l / l!) B(a+l, b+l) x^l e^{ix} 1F1(a+l, a+b+2l; -2ix),
// rhs = int_{-1}^{1} P_l^{a-1,b-1}(v) e^{ivx} (1-v)^{a-1} (1+v)^{b-1} dv.
// Requires a, b > 0.
FourierPair kummer_integral_pair(double a, double b, int l, double x);

// lhs = int_{-1}^{1} C_l^{nu}(v) (1-v^2)^{nu-1/2} e^{ixv} dv,
// rhs = c(l; nu) x^l 0F1(l+nu+1; -x^2/4) with
// c(l; nu) = i^l sqrt(pi) (2nu)_l Gamma(nu+1/2) / (2^l l! Gamma(l+nu+1)).
// Requires nu > 1/2.
FourierPair gegenbauer_fourier_pair(double nu, int l, double x);

}  // namespace orthopoly
