#include "operators/eigen_pde.hpp"

#include "orthopoly/multivariate.hpp"

#include <stdexcept>

namespace operators {

namespace {

Rational weight_sum(const std::vector<Rational>& lambda) {
  Rational total(0);
  for (const auto& l : lambda) total += l;
  return total;
}

}  // namespace

MultiPoly simplex_pde_apply(const std::vector<Rational>& lambda, const MultiPoly& P) {
  const int n = static_cast<int>(lambda.size());
  if (n < 2 || P.nvars() != n - 1)
    throw std::invalid_argument("simplex_pde_apply: arity");
  const Rational total = weight_sum(lambda);
  const int d = n - 1;

  MultiPoly out(d);
  for (int i = 0; i < d; ++i) {
    const MultiPoly di = P.derivative(i);
    const MultiPoly vi = MultiPoly::variable(d, i);
    out += (vi - vi * vi) * di.derivative(i);
    for (int j = i + 1; j < d; ++j)
      out -= (vi * MultiPoly::variable(d, j) * di.derivative(j)).scaled(2);
    out += (MultiPoly::constant(d, lambda[i]) - vi.scaled(total)) * di;
  }
  return out;
}

bool simplex_eigencheck(const std::vector<Rational>& lambda, int k) {
  const int n = static_cast<int>(lambda.size());
  if (n < 2 || k < 0) throw std::invalid_argument("simplex_eigencheck: arguments");
  const Rational ev = Rational(k) * (Rational(k) + weight_sum(lambda) - 1);
  for (const auto& kv : orthopoly::homogeneous_exponents(n - 1, k)) {
    const MultiPoly P = orthopoly::simplex_basis(n - 1, lambda, kv);
    if (!(simplex_pde_apply(lambda, P) + P.scaled(ev)).is_zero()) return false;
  }
  return true;
}

MultiPoly ball_pde_apply(const Rational& alpha, int p, const MultiPoly& P) {
  if (p < 1 || P.nvars() != p) throw std::invalid_argument("ball_pde_apply: arity");
  if (!(2 * alpha + 1 > 0)) throw std::invalid_argument("ball_pde_apply: parameter");

  MultiPoly out = polyalg::laplacian(P);
  MultiPoly euler(p);
  for (int j = 0; j < p; ++j) euler += MultiPoly::variable(p, j) * P.derivative(j);
  const MultiPoly inner = P.scaled(2 * alpha - 1) + euler;
  for (int i = 0; i < p; ++i)
    out -= (MultiPoly::variable(p, i) * inner).derivative(i);
  return out;
}

bool ball_eigencheck(const Rational& alpha, int p, int k) {
  if (k < 0) throw std::invalid_argument("ball_eigencheck: degree");
  const Rational ev = Rational(k + p) * (Rational(k) + 2 * alpha - 1);
  for (const auto& kv : orthopoly::homogeneous_exponents(p, k)) {
    const MultiPoly P = orthopoly::ball_basis(p, alpha, kv);
    if (!(ball_pde_apply(alpha, p, P) + P.scaled(ev)).is_zero()) return false;
  }
  return true;
}

}  // namespace operators
