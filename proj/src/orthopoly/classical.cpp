#include "orthopoly/classical.hpp"

#include "quadrature/rules.hpp"

#include <cmath>
#include <stdexcept>

namespace orthopoly {

namespace {

using std::complex;

bool is_nonpositive_integer(complex<double> z) {
  if (z.imag() != 0.0) return false;
  return z.real() <= 0.0 && z.real() == std::round(z.real());
}

// Gauss-Jacobi node count that resolves degree l polynomials times e^{ivx}
// on (-1,1).  The phase spans 2|x| radians, and Gauss rules resolve an
// oscillation comfortably with a handful of points per radian of half-span.
int oscillatory_node_count(int l, double x) {
  return l + 30 + 2 * static_cast<int>(std::ceil(std::abs(x)));
}

complex<double> i_pow(int l) {
  switch (((l % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

constexpr double kOscillationCap = 50.0;

}  // namespace

double pochhammer(double a, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= a + i;
  return r;
}

complex<double> pochhammer(complex<double> a, int n) {
  complex<double> r = 1.0;
  for (int i = 0; i < n; ++i) r *= a + static_cast<double>(i);
  return r;
}

complex<double> hyper_pfq(const std::vector<complex<double>>& a,
                          const std::vector<complex<double>>& b, complex<double> z,
                          double tol) {
  for (const auto& bj : b)
    if (is_nonpositive_integer(bj))
      throw std::domain_error("hyper_pfq: lower parameter is a non-positive integer");
  if (a.size() > b.size() + 1 && std::abs(z) >= 1.0)
    throw std::domain_error("hyper_pfq: divergent series (p > q+1 and |z| >= 1)");

  const int max_terms = 10000;
  complex<double> sum = 1.0;
  complex<double> term = 1.0;
  int small_tail = 0;
  for (int n = 0; n < max_terms; ++n) {
    complex<double> ratio = z / static_cast<double>(n + 1);
    for (const auto& ai : a) ratio *= ai + static_cast<double>(n);
    for (const auto& bj : b) ratio /= bj + static_cast<double>(n);
    term *= ratio;
    sum += term;
    if (term == 0.0) return sum;  // terminating (polynomial) case
    if (std::abs(term) <= tol * std::max(std::abs(sum), 1.0)) {
      if (++small_tail >= 2) return sum;
    } else {
      small_tail = 0;
    }
  }
  throw std::runtime_error("hyper_pfq: series did not converge within the term cap");
}

complex<double> kummer_1f1(complex<double> a, complex<double> b, complex<double> z,
                           double tol) {
  return hyper_pfq({a}, {b}, z, tol);
}

complex<double> conf_0f1(complex<double> b, complex<double> z, double tol) {
  return hyper_pfq({}, {b}, z, tol);
}

MultiPoly jacobi_poly(int n, const Rational& a, const Rational& b) {
  if (n < 0) throw std::invalid_argument("jacobi_poly: negative degree");
  const MultiPoly t = MultiPoly::variable(1, 0);
  const MultiPoly one = MultiPoly::constant(1, Rational(1));
  return inflated_jacobi(n, a, b, t, one);
}

double jacobi_norm2(int n, double a, double b) {
  if (n < 0) throw std::invalid_argument("jacobi_norm2: negative degree");
  if (a <= -1.0 || b <= -1.0) throw std::invalid_argument("jacobi_norm2: parameter range");
  if (n == 0) {
    // 2^{a+b+1} B(a+1, b+1), written to avoid Gamma(a+b+1) which can sit in
    // (-1, 0] when a + b does.
    return std::exp((a + b + 1) * std::log(2.0) + std::lgamma(a + 1) + std::lgamma(b + 1) -
                    std::lgamma(a + b + 2));
  }
  return std::exp((a + b + 1) * std::log(2.0) + std::lgamma(n + a + 1) + std::lgamma(n + b + 1) -
                  std::lgamma(n + a + b + 1) - std::lgamma(n + 1.0)) /
         (2 * n + a + b + 1);
}

MultiPoly gegenbauer(int n, const Rational& a) {
  if (n < 0) throw std::invalid_argument("gegenbauer: negative degree");
  const Rational half = polyalg::rat(1, 2);
  const Rational denom = polyalg::pochhammer(a + half, n);
  if (denom == 0) throw std::invalid_argument("gegenbauer: parameter pole at a + 1/2");
  const Rational scale = polyalg::pochhammer(2 * a, n) / denom;
  return jacobi_poly(n, a - half, a - half).scaled(scale);
}

double gegenbauer_norm2(int n, double a) {
  if (n < 0) throw std::invalid_argument("gegenbauer_norm2: negative degree");
  if (a <= 0.0) throw std::invalid_argument("gegenbauer_norm2: requires a > 0");
  return M_PI * std::exp((1 - 2 * a) * std::log(2.0) + std::lgamma(2 * a + n) -
                         std::lgamma(n + 1.0) - 2 * std::lgamma(a)) /
         (n + a);
}

MultiPoly inflated_jacobi(int k, const Rational& a, const Rational& b, const MultiPoly& A,
                          const MultiPoly& B) {
  if (k < 0) throw std::invalid_argument("inflated_jacobi: negative degree");
  const MultiPoly diff = A - B;
  const MultiPoly sum = A + B;
  MultiPoly r(A.nvars());
  const Rational two_pow = polyalg::Rational(polyalg::BigInt(1) << k);
  for (int s = 0; s <= k; ++s) {
    const Rational c = polyalg::binom(Rational(k) + a, k - s) * polyalg::binom(Rational(k) + b, s);
    if (c == 0) continue;
    r += (diff.pow(s) * sum.pow(k - s)).scaled(c / two_pow);
  }
  return r;
}

MultiPoly inflated_gegenbauer(int l, const Rational& a) {
  const MultiPoly c = gegenbauer(l, a);
  MultiPoly r(2);
  for (const auto& [e, coeff] : c.terms()) {
    const int j = e[0];  // t^j carries the parity of l, so l - j is even
    r.add_term({(l - j) / 2, j}, coeff);
  }
  return r;
}

std::vector<Rational> juhl_coefficients(int l, const Rational& a) {
  if (l < 0) throw std::invalid_argument("juhl_coefficients: negative degree");
  std::vector<Rational> coeffs;
  for (int k = 0; 2 * k <= l; ++k) {
    Rational c = polyalg::pochhammer(a, l - k) * Rational(polyalg::BigInt(1) << (l - 2 * k)) /
                 (Rational(polyalg::factorial(k)) * Rational(polyalg::factorial(l - 2 * k)));
    if (k % 2 != 0) c = -c;
    coeffs.push_back(std::move(c));
  }
  return coeffs;
}

MultiPoly juhl_symbol(int l, const Rational& a) {
  const std::vector<Rational> coeffs = juhl_coefficients(l, a);
  MultiPoly r(2);  // variables (q, y)
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) r.add_term({k, l - 2 * k}, coeffs[k]);
  return r;
}

std::vector<Rational> rankin_cohen_coefficients(const Rational& lp, const Rational& lpp, int l) {
  if (l < 0) throw std::invalid_argument("rankin_cohen_coefficients: negative degree");
  std::vector<Rational> coeffs;
  for (int j = 0; j <= l; ++j) {
    Rational c = polyalg::pochhammer(lp + Rational(l - j), j) *
                 polyalg::pochhammer(lpp + Rational(j), l - j) /
                 (Rational(polyalg::factorial(j)) * Rational(polyalg::factorial(l - j)));
    if (j % 2 != 0) c = -c;
    coeffs.push_back(std::move(c));
  }
  return coeffs;
}

FourierPair kummer_integral_pair(double a, double b, int l, double x) {
  if (a <= 0.0 || b <= 0.0)
    throw std::invalid_argument("kummer_integral_pair: requires a, b > 0");
  if (l < 0) throw std::invalid_argument("kummer_integral_pair: negative degree");

  FourierPair out;
  out.in_stated_range = a > 1.0 && b > 1.0;
  out.quadrature_ok = std::abs(x) <= kOscillationCap;

  const complex<double> i_unit(0.0, 1.0);
  const double log_beta =
      std::lgamma(a + l) + std::lgamma(b + l) - std::lgamma(a + b + 2 * l);
  const complex<double> prefactor = i_pow(l) * std::exp((a + b + l - 1) * std::log(2.0) +
                                                        log_beta - std::lgamma(l + 1.0));
  out.lhs = prefactor * std::pow(x, l) * std::exp(i_unit * x) *
            kummer_1f1(a + l, a + b + 2 * l, -2.0 * i_unit * x);

  const quadrature::QuadratureRule rule =
      quadrature::gauss_jacobi_rule(oscillatory_node_count(l, x), a - 1, b - 1);
  const MultiPoly p = jacobi_poly(l, Rational(a) - 1, Rational(b) - 1);
  std::vector<double> pc(l + 1, 0.0);
  for (const auto& [e, c] : p.terms()) pc[e[0]] = polyalg::to_double(c);
  out.rhs = quadrature::integrate1(
      [&](double v) {
        double pv = 0.0;
        for (int j = l; j >= 0; --j) pv = pv * v + pc[j];
        return pv * std::exp(i_unit * (v * x));
      },
      rule);
  return out;
}

FourierPair gegenbauer_fourier_pair(double nu, int l, double x) {
  if (nu <= 0.5) throw std::invalid_argument("gegenbauer_fourier_pair: requires nu > 1/2");
  if (l < 0) throw std::invalid_argument("gegenbauer_fourier_pair: negative degree");

  FourierPair out;
  out.in_stated_range = nu > 1.0;
  out.quadrature_ok = std::abs(x) <= kOscillationCap;

  const complex<double> i_unit(0.0, 1.0);
  const quadrature::QuadratureRule rule =
      quadrature::gauss_jacobi_rule(oscillatory_node_count(l, x), nu - 0.5, nu - 0.5);
  out.lhs = quadrature::integrate1(
      [&](double v) {
        // Three-term recurrence for C_n^{nu}(v).
        double c0 = 1.0, c1 = 2.0 * nu * v;
        if (l == 0) return complex<double>(1.0, 0.0) * std::exp(i_unit * (x * v));
        for (int n = 2; n <= l; ++n) {
          const double c2 = (2.0 * v * (n + nu - 1.0) * c1 - (n + 2.0 * nu - 2.0) * c0) / n;
          c0 = c1;
          c1 = c2;
        }
        return c1 * std::exp(i_unit * (x * v));
      },
      rule);

  const complex<double> c_l_nu =
      i_pow(l) * std::sqrt(M_PI) * pochhammer(2.0 * nu, l) *
      std::exp(std::lgamma(nu + 0.5) - l * std::log(2.0) - std::lgamma(l + 1.0) -
               std::lgamma(l + nu + 1.0));
  out.rhs = c_l_nu * std::pow(x, l) * conf_0f1(l + nu + 1.0, -x * x / 4.0);
  return out;
}

}  // namespace orthopoly
