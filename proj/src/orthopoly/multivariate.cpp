#include "orthopoly/multivariate.hpp"

#include "polyalg/linalg.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace orthopoly {

using polyalg::MultiPoly;
using polyalg::Rational;

namespace {

void check_simplex_args(int n, const std::vector<Rational>& lambda, const std::vector<int>& k) {
  if (n < 1) throw std::invalid_argument("simplex basis: need n >= 1");
  if (static_cast<int>(lambda.size()) != n + 1)
    throw std::invalid_argument("simplex basis: need n+1 weight parameters");
  for (const auto& l : lambda)
    if (l <= 0) throw std::invalid_argument("simplex basis: weight parameters must be positive");
  if (static_cast<int>(k.size()) != n)
    throw std::invalid_argument("simplex basis: index length mismatch");
  for (int ki : k)
    if (ki < 0) throw std::invalid_argument("simplex basis: negative index");
}

// Gamma(m/2) as q * pi^{s/2} with q rational and s in {0, 1}.
std::pair<Rational, int> gamma_half(int m) {
  if (m <= 0) throw std::invalid_argument("gamma_half: non-positive argument");
  if (m % 2 == 0) return {Rational(polyalg::factorial(m / 2 - 1)), 0};
  const int t = (m - 1) / 2;  // Gamma(t + 1/2) = (2t)! / (4^t t!) sqrt(pi)
  const Rational q = Rational(polyalg::factorial(2 * t)) /
                     (Rational(polyalg::BigInt(1) << (2 * t)) * Rational(polyalg::factorial(t)));
  return {q, 1};
}

// Lexicographically largest exponent vector with nonzero coefficient.
const std::vector<int>& leading_exponents(const MultiPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("leading_exponents: zero polynomial");
  return f.terms().rbegin()->first;
}

// Scale to coprime integer coefficients with positive leading coefficient.
MultiPoly primitive_scale(const MultiPoly& f) {
  if (f.is_zero()) return f;
  polyalg::BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : f.terms()) {
    const polyalg::BigInt num(boost::multiprecision::abs(numerator(c)));
    const polyalg::BigInt den(denominator(c));
    num_gcd = boost::multiprecision::gcd(num_gcd, num);
    den_lcm = boost::multiprecision::lcm(den_lcm, den);
  }
  Rational scale = Rational(den_lcm) / Rational(num_gcd);
  if (f.terms().rbegin()->second < 0) scale = -scale;
  return f.scaled(scale);
}

}  // namespace

std::vector<std::vector<int>> homogeneous_exponents(int p, int n) {
  if (p < 1 || n < 0) throw std::invalid_argument("homogeneous_exponents: bad arguments");
  std::vector<std::vector<int>> out;
  std::vector<int> e(p, 0);
  // Recursive descent emits exponents with larger leading entries first,
  // which is exactly descending lex order within the fixed total degree.
  auto fill = [&](auto&& self, int pos, int rest) -> void {
    if (pos == p - 1) {
      e[pos] = rest;
      out.push_back(e);
      return;
    }
    for (int v = rest; v >= 0; --v) {
      e[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  fill(fill, 0, n);
  return out;
}

MultiPoly simplex_basis(int n, const std::vector<Rational>& lambda, const std::vector<int>& k) {
  check_simplex_args(n, lambda, k);
  const MultiPoly one = MultiPoly::constant(n, Rational(1));

  // Partial coordinate sums |x^{(i)}| = x_1 + ... + x_i.
  std::vector<MultiPoly> head(n + 1, MultiPoly(n));
  for (int i = 1; i <= n; ++i) head[i] = head[i - 1] + MultiPoly::variable(n, i - 1);

  Rational alpha = 0;  // running a_i = |Lambda^{(i)}| + 2|k^{(i-1)}|
  MultiPoly r = one;
  for (int i = 1; i < n; ++i) {
    alpha += lambda[i - 1] + Rational(2 * (i >= 2 ? k[i - 2] : 0));
    const MultiPoly a = head[i] - MultiPoly::variable(n, i);
    const MultiPoly b = head[i] + MultiPoly::variable(n, i);
    r *= inflated_jacobi(k[i - 1], lambda[i] - 1, alpha - 1, a, b);
  }
  alpha += lambda[n - 1] + Rational(2 * (n >= 2 ? k[n - 2] : 0));
  r *= inflated_jacobi(k[n - 1], lambda[n] - 1, alpha - 1,
                       head[n] + head[n] - one, one);
  return r;
}

MultiPoly simplex_basis_dunklxu(int n, const std::vector<Rational>& lambda,
                                const std::vector<int>& k) {
  check_simplex_args(n, lambda, k);
  const MultiPoly one = MultiPoly::constant(n, Rational(1));

  Rational lambda_tail = std::accumulate(lambda.begin(), lambda.end(), Rational(0));
  int k_tail = std::accumulate(k.begin(), k.end(), 0);

  MultiPoly w = one;  // w_i = 1 - (x_1 + ... + x_{i-1})
  MultiPoly r = one;
  for (int i = 1; i <= n; ++i) {
    lambda_tail -= lambda[i - 1];
    k_tail -= k[i - 1];
    const Rational a = lambda_tail + Rational(2 * k_tail) - 1;
    const MultiPoly x = MultiPoly::variable(n, i - 1);
    r *= inflated_jacobi(k[i - 1], a, lambda[i - 1] - 1, x + x - w, w);
    w -= x;
  }
  return r;
}

MultiPoly ball_basis(int p, const Rational& a, const std::vector<int>& k) {
  if (p < 1) throw std::invalid_argument("ball_basis: need p >= 1");
  if (2 * a <= -1) throw std::invalid_argument("ball_basis: need a > -1/2");
  if (static_cast<int>(k.size()) != p)
    throw std::invalid_argument("ball_basis: index length mismatch");
  for (int kj : k)
    if (kj < 0) throw std::invalid_argument("ball_basis: negative index");

  MultiPoly w = MultiPoly::constant(p, Rational(1));  // 1 - v_1^2 - ... - v_{j-1}^2
  MultiPoly r = MultiPoly::constant(p, Rational(1));
  int k_tail = std::accumulate(k.begin(), k.end(), 0);
  for (int j = 1; j <= p; ++j) {
    k_tail -= k[j - 1];
    const Rational aj = a + Rational(k_tail) + polyalg::rat(p - j, 2);
    const MultiPoly v = MultiPoly::variable(p, j - 1);
    r *= inflated_gegenbauer(k[j - 1], aj).compose({w, v});
    w -= v * v;
  }
  return r;
}

MultiPoly ball_mixed_basis(int p, const Rational& a, int l, int j, int kappa) {
  if (p < 2) throw std::invalid_argument("ball_mixed_basis: need p >= 2");
  if (l < 0 || j < 0 || 2 * j > l)
    throw std::invalid_argument("ball_mixed_basis: need 0 <= 2j <= l");
  const std::vector<MultiPoly> harmonics = harmonic_basis(p, l - 2 * j);
  if (kappa < 0 || kappa >= static_cast<int>(harmonics.size()))
    throw std::out_of_range("ball_mixed_basis: harmonic index out of range");

  MultiPoly radial_arg = MultiPoly::constant(p, Rational(-1));
  for (int i = 0; i < p; ++i) {
    const MultiPoly v = MultiPoly::variable(p, i);
    radial_arg += (v * v).scaled(Rational(2));
  }
  const MultiPoly radial =
      jacobi_poly(j, a - polyalg::rat(1, 2), Rational(l - 2 * j) + polyalg::rat(p - 2, 2))
          .compose({radial_arg});
  return radial * harmonics[kappa];
}

std::vector<MultiPoly> harmonic_basis(int p, int n) {
  if (p < 2) throw std::invalid_argument("harmonic_basis: need p >= 2");
  if (n < 0) throw std::invalid_argument("harmonic_basis: negative degree");
  if (n == 0) return {MultiPoly::constant(p, Rational(1))};

  const std::vector<std::vector<int>> monos = homogeneous_exponents(p, n);
  // Matrix of the Laplacian from degree n down to degree n-2, columns in the
  // same descending lex order as monos (degree 1 gets a single zero row).
  polyalg::RatMatrix lap(1, std::vector<Rational>(monos.size(), Rational(0)));
  if (n >= 2) {
    const std::vector<std::vector<int>> down = homogeneous_exponents(p, n - 2);
    std::map<std::vector<int>, int> down_index;
    for (int i = 0; i < static_cast<int>(down.size()); ++i) down_index[down[i]] = i;
    lap.assign(down.size(), std::vector<Rational>(monos.size(), Rational(0)));
    for (int c = 0; c < static_cast<int>(monos.size()); ++c)
      for (int v = 0; v < p; ++v) {
        const int ev = monos[c][v];
        if (ev < 2) continue;
        std::vector<int> e = monos[c];
        e[v] -= 2;
        lap[down_index.at(e)][c] += Rational(ev * (ev - 1));
      }
  }

  polyalg::RatMatrix null = polyalg::nullspace(lap);
  std::vector<MultiPoly> basis;
  for (const auto& vec : null) {
    MultiPoly f(p);
    for (int c = 0; c < static_cast<int>(monos.size()); ++c) f.add_term(monos[c], vec[c]);
    basis.push_back(std::move(f));
  }

  // Deterministic order: descending lex on the leading monomial.
  std::sort(basis.begin(), basis.end(), [](const MultiPoly& f, const MultiPoly& g) {
    return leading_exponents(f) > leading_exponents(g);
  });

  // Gram-Schmidt over the sphere, kept exact; then tidy each element.
  std::vector<Rational> norms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Rational c = sphere_inner(p, basis[i], basis[j]) / norms[j];
      if (c != 0) basis[i] -= basis[j].scaled(c);
    }
    basis[i] = primitive_scale(basis[i]);
    norms.push_back(sphere_inner(p, basis[i], basis[i]));
  }
  return basis;
}

double harmonic_kernel(int p, int n, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (p < 3)
    throw std::invalid_argument("harmonic_kernel: zonal formula needs p >= 3");
  if (x.size() != p || y.size() != p)
    throw std::invalid_argument("harmonic_kernel: dimension mismatch");
  const MultiPoly zonal = inflated_gegenbauer(n, polyalg::rat(p - 2, 2));
  const double value =
      zonal.evaluate<double>({x.squaredNorm() * y.squaredNorm(), x.dot(y)});
  return (2.0 * n + p - 2) / (p - 2) * value;
}

Rational sphere_moment(int p, const std::vector<int>& exps) {
  if (p < 1) throw std::invalid_argument("sphere_moment: need p >= 1");
  if (static_cast<int>(exps.size()) != p)
    throw std::invalid_argument("sphere_moment: exponent length mismatch");
  int total = 0;
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("sphere_moment: negative exponent");
    if (e % 2 != 0) return Rational(0);
    total += e;
  }
  // prod_i Gamma(c_i + 1/2) * Gamma(p/2) / (Gamma(|c| + p/2) pi^{p/2});
  // the sqrt-pi powers cancel, leaving a rational number.
  Rational q = gamma_half(p).first / gamma_half(total + p).first;
  for (int e : exps) q *= gamma_half(e + 1).first;
  return q;
}

Rational sphere_inner(int p, const MultiPoly& f, const MultiPoly& g) {
  if (f.nvars() != p || g.nvars() != p)
    throw std::invalid_argument("sphere_inner: arity mismatch");
  const MultiPoly h = f * g;
  Rational acc = 0;
  for (const auto& [e, c] : h.terms()) acc += c * sphere_moment(p, e);
  return acc;
}

double surface_area(int p) {
  if (p < 1) throw std::invalid_argument("surface_area: need p >= 1");
  return 2.0 * std::exp(0.5 * p * std::log(M_PI) - std::lgamma(0.5 * p));
}

}  // namespace orthopoly
