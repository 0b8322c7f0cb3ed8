#include "operators/bessel.hpp"

#include "operators/eigen_pde.hpp"

#include <stdexcept>

namespace operators {

using polyalg::rat;

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Sign of P(e_i, e_i) e_l in the canonical Lorentz basis.
int eps(int i, int l) { return (i == 0 || l == 0 || i == l) ? 1 : -1; }

Rational weight_sum(const std::vector<Rational>& lambda) {
  Rational total(0);
  for (const auto& l : lambda) total += l;
  return total;
}

// The polynomial eigen-operators ride on a single plain term.
MultiPoly plain_part(const PowPoly& f) {
  const auto& terms = f.terms();
  if (terms.empty()) return MultiPoly(f.base().nvars());
  if (terms.size() != 1 || !(terms.begin()->first == 0))
    throw std::invalid_argument("apply_operator: eigen-operators take plain polynomials");
  return terms.begin()->second;
}

}  // namespace

MultiPoly lorentz_determinant(int nvars, int m) {
  require(m >= 1 && m <= nvars, "lorentz_determinant: dimensions");
  MultiPoly d(nvars);
  for (int i = 0; i < m; ++i) {
    std::vector<int> e(nvars, 0);
    e[i] = 2;
    d.add_term(std::move(e), Rational(i == 0 ? 1 : -1));
  }
  return d;
}

PowPoly bessel_rank1(const Rational& lambda, const PowPoly& f) {
  require(f.base() == MultiPoly::variable(1, 0), "bessel_rank1: base must be the coordinate");
  const PowPoly d = f.derivative(0);
  return d.derivative(0).mul_base_pow(1) + d.scaled(lambda);
}

std::vector<PowPoly> bessel_lorentz(const Rational& lambda, const PowPoly& f, int m) {
  const int nv = f.base().nvars();
  if (m < 0) m = nv;
  require(m >= 2 && m <= nv, "bessel_lorentz: dimension");

  std::vector<PowPoly> d1;
  d1.reserve(m);
  for (int i = 0; i < m; ++i) d1.push_back(f.derivative(i));

  std::vector<PowPoly> out;
  out.reserve(m);
  for (int l = 0; l < m; ++l) {
    PowPoly diag = PowPoly::zero(f.base());
    for (int i = 0; i < m; ++i)
      diag += d1[i].derivative(i).scaled(Rational(eps(i, l)));

    PowPoly mixed = PowPoly::zero(f.base());
    for (int i = 0; i < m; ++i) {
      if (i == l) continue;
      mixed += d1[l].derivative(i).mul_poly(MultiPoly::variable(nv, i));
    }

    PowPoly comp = diag.mul_poly(MultiPoly::variable(nv, l)).scaled(rat(1, 4));
    comp += mixed.scaled(rat(1, 2));
    comp += d1[l].scaled(lambda / 2);
    out.push_back(std::move(comp));
  }
  return out;
}

PowPoly bessel_tensor_sum(const std::vector<Rational>& lambda, const PowPoly& f) {
  const int nv = f.base().nvars();
  require(static_cast<int>(lambda.size()) == nv, "bessel_tensor_sum: weight count");
  PowPoly acc = PowPoly::zero(f.base());
  for (int i = 0; i < nv; ++i) {
    const PowPoly di = f.derivative(i);
    acc += di.derivative(i).mul_poly(MultiPoly::variable(nv, i));
    acc += di.scaled(lambda[i]);
  }
  return acc;
}

PowPoly bessel_shift_residual_rank1(const Rational& lambda, const Rational& mu,
                                    const PowPoly& f) {
  const PowPoly lhs = bessel_rank1(lambda, f.mul_base_pow(mu));
  PowPoly rhs = bessel_rank1(lambda + 2 * mu, f);
  rhs += f.scaled(mu * (mu + lambda - 1)).mul_base_pow(-1);
  return lhs - rhs.mul_base_pow(mu);
}

std::vector<PowPoly> bessel_shift_residual_lorentz(const Rational& lambda,
                                                   const Rational& mu,
                                                   const PowPoly& f) {
  const int n = f.base().nvars();
  require(f.base() == lorentz_determinant(n), "bessel_shift_residual_lorentz: base");
  const auto lhs = bessel_lorentz(lambda, f.mul_base_pow(mu));
  const auto shifted = bessel_lorentz(lambda + 2 * mu, f);
  const Rational c = mu * (mu + lambda - rat(n, 2));
  std::vector<PowPoly> out;
  out.reserve(n);
  for (int l = 0; l < n; ++l) {
    const PowPoly inv_term = f.mul_poly(MultiPoly::variable(n, l))
                                 .scaled(l == 0 ? c : -c)
                                 .mul_base_pow(-1);
    out.push_back(lhs[l] - (shifted[l] + inv_term).mul_base_pow(mu));
  }
  return out;
}

PowPoly strat_bessel_tensor(const std::vector<Rational>& lambda, const PowPoly& f) {
  const int n = static_cast<int>(lambda.size());
  require(n >= 2, "strat_bessel_tensor: needs at least two factors");
  require(f.base().nvars() == n, "strat_bessel_tensor: arity");
  require(f.base() == MultiPoly::variable(n, 0), "strat_bessel_tensor: base must be t");
  const Rational total = weight_sum(lambda);

  const PowPoly dt = f.derivative(0);
  PowPoly acc = dt.derivative(0).mul_base_pow(1) + dt.scaled(total);

  PowPoly fiber = PowPoly::zero(f.base());
  for (int i = 1; i < n; ++i) {
    const MultiPoly vi = MultiPoly::variable(n, i);
    const PowPoly di = f.derivative(i);
    fiber += di.derivative(i).mul_poly(vi - vi * vi);
    for (int j = i + 1; j < n; ++j)
      fiber += di.derivative(j).mul_poly(vi * MultiPoly::variable(n, j)).scaled(-2);
    fiber += di.mul_poly(MultiPoly::constant(n, lambda[i - 1]) - vi.scaled(total));
  }
  return acc + fiber.mul_base_pow(-1);
}

std::vector<PowPoly> strat_bessel_lorentz(const Rational& lambda, int n, int p,
                                          const PowPoly& f) {
  const int q = n - p;
  require(p >= 1 && q >= 2, "strat_bessel_lorentz: dimensions");
  require(f.base().nvars() == n, "strat_bessel_lorentz: arity");
  require(f.base() == lorentz_determinant(n, q), "strat_bessel_lorentz: base");

  auto out = bessel_lorentz(lambda, f, q);

  std::vector<PowPoly> dv;
  dv.reserve(p);
  for (int k = q; k < n; ++k) dv.push_back(f.derivative(k));

  const Rational euler = 2 * lambda - n + p + 1;
  PowPoly bracket = PowPoly::zero(f.base());
  for (int k = q; k < n; ++k) {
    bracket += dv[k - q].derivative(k);
    for (int kp = q; kp < n; ++kp) {
      bracket -= dv[k - q]
                     .derivative(kp)
                     .mul_poly(MultiPoly::variable(n, k) * MultiPoly::variable(n, kp));
    }
    bracket -= dv[k - q].mul_poly(MultiPoly::variable(n, k)).scaled(euler);
  }
  bracket = bracket.mul_base_pow(-1).scaled(rat(1, 4));

  for (int l = 0; l < q; ++l) {
    const PowPoly term = bracket.mul_poly(MultiPoly::variable(n, l));
    out[l] += l == 0 ? term : term.scaled(-1);
  }
  return out;
}

std::vector<PowPoly> apply_operator(const DiffOperatorSpec& spec, const PowPoly& f) {
  const auto check_weights = [&](size_t count) {
    if (count > 0)
      require(spec.lambda.size() == count, "apply_operator: weight count");
    else
      require(!spec.lambda.empty(), "apply_operator: weight count");
    for (const auto& l : spec.lambda)
      require(l > 0, "apply_operator: weights must be positive");
  };

  switch (spec.family) {
    case OperatorFamily::BesselRank1:
      check_weights(1);
      return {bessel_rank1(spec.lambda[0], f)};

    case OperatorFamily::BesselLorentz: {
      check_weights(1);
      const int m = spec.n > 0 ? spec.n : f.base().nvars();
      require(m >= 2 && m <= f.base().nvars(), "apply_operator: dimension");
      return bessel_lorentz(spec.lambda[0], f, m);
    }

    case OperatorFamily::BesselTensorSum:
      check_weights(0);
      return {bessel_tensor_sum(spec.lambda, f)};

    case OperatorFamily::SimplexPde: {
      check_weights(0);
      require(spec.lambda.size() >= 2, "apply_operator: weight count");
      const MultiPoly res = simplex_pde_apply(spec.lambda, plain_part(f));
      return {PowPoly::from_poly(f.base(), res)};
    }

    case OperatorFamily::BallPde: {
      require(spec.lambda.size() == 1, "apply_operator: weight count");
      require(2 * spec.lambda[0] + 1 > 0, "apply_operator: ball parameter");
      require(spec.p >= 1, "apply_operator: fiber dimension");
      const MultiPoly res = ball_pde_apply(spec.lambda[0], spec.p, plain_part(f));
      return {PowPoly::from_poly(f.base(), res)};
    }

    case OperatorFamily::StratBesselTensor:
      check_weights(0);
      require(spec.lambda.size() >= 2, "apply_operator: weight count");
      return {strat_bessel_tensor(spec.lambda, f)};

    case OperatorFamily::StratBesselLorentz:
      check_weights(1);
      require(spec.p >= 1 && spec.n - spec.p >= 2, "apply_operator: dimensions");
      return strat_bessel_lorentz(spec.lambda[0], spec.n, spec.p, f);
  }
  throw std::logic_error("apply_operator: unhandled family");
}

}  // namespace operators
