#include "operators/lie.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace operators {

using polyalg::rat;

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

int eps(int i, int l) { return (i == 0 || l == 0 || i == l) ? 1 : -1; }

MultiPolyC linear_form(const std::vector<Rational>& coeff) {
  const int n = static_cast<int>(coeff.size());
  MultiPolyC r(n);
  for (int k = 0; k < n; ++k)
    r += MultiPolyC::variable(n, k).scaled(GaussRational(coeff[k]));
  return r;
}

void check_arity(const jordan::Algebra& alg, const PhaseFn& F, const char* who) {
  if (static_cast<int>(F.w.size()) != alg.dim() || F.f.base().nvars() != alg.dim())
    throw std::invalid_argument(std::string(who) + ": arity");
}

}  // namespace

std::vector<Rational> trace_form_diagonal(const jordan::Algebra& alg) {
  std::vector<Rational> c;
  c.reserve(alg.dim());
  for (const auto& f : alg.factors()) {
    const Rational v(f.kind == jordan::Kind::Lorentz ? 2 : 1);
    for (int i = 0; i < f.dim; ++i) c.push_back(v);
  }
  return c;
}

PhaseFn phase_derivative(const jordan::Algebra& alg, const PhaseFn& F, int var) {
  check_arity(alg, F, "phase_derivative");
  require(var >= 0 && var < alg.dim(), "phase_derivative: variable index");
  const auto c = trace_form_diagonal(alg);
  PhaseFn out{F.w, F.f.derivative(var)};
  out.f += F.f.scaled(GaussRational::i() * GaussRational(c[var] * F.w[var]));
  return out;
}

std::complex<double> phase_eval(const jordan::Algebra& alg, const PhaseFn& F,
                                const Eigen::VectorXd& x) {
  check_arity(alg, F, "phase_eval");
  require(x.size() == alg.dim(), "phase_eval: point size");
  const int n = alg.dim();
  std::vector<std::complex<double>> pt(n);
  for (int k = 0; k < n; ++k) pt[k] = std::complex<double>(x[k], 0.0);
  const auto c = trace_form_diagonal(alg);
  double phase = 0;
  for (int k = 0; k < n; ++k) phase += polyalg::to_double(c[k] * F.w[k]) * x[k];
  return F.f.evaluate<std::complex<double>>(pt) * std::exp(std::complex<double>(0, phase));
}

PhaseFn lie_translation(const jordan::Algebra& alg, const std::vector<Rational>& u,
                        const PhaseFn& F) {
  check_arity(alg, F, "lie_translation");
  require(static_cast<int>(u.size()) == alg.dim(), "lie_translation: vector size");
  const auto c = trace_form_diagonal(alg);
  std::vector<Rational> cu(u.size());
  for (size_t k = 0; k < u.size(); ++k) cu[k] = c[k] * u[k];
  return {F.w, F.f.mul_poly(linear_form(cu)).scaled(GaussRational::i())};
}

PhaseFn lie_structure(const jordan::Algebra& alg, const Rational& lambda,
                      const std::vector<std::vector<Rational>>& T, const PhaseFn& F) {
  check_arity(alg, F, "lie_structure");
  const int n = alg.dim();
  require(static_cast<int>(T.size()) == n, "lie_structure: matrix size");
  for (const auto& row : T)
    require(static_cast<int>(row.size()) == n, "lie_structure: matrix size");
  const auto c = trace_form_diagonal(alg);

  // Trace-form adjoint: (T*)_{jk} = (c_k / c_j) T_{kj}.
  std::vector<std::vector<Rational>> adj(n, std::vector<Rational>(n));
  Rational tr(0);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) adj[j][k] = c[k] / c[j] * T[k][j];
    tr += adj[j][j];
  }

  PhaseFn out{F.w, F.f.scaled(GaussRational(lambda * tr / (2 * alg.m())))};
  for (int j = 0; j < n; ++j) {
    const MultiPolyC row = linear_form(adj[j]);
    if (row.is_zero()) continue;
    out.f += phase_derivative(alg, F, j).f.mul_poly(row);
  }
  return out;
}

PhaseFn lie_inversion(const jordan::Algebra& alg, const Rational& lambda,
                      const std::vector<Rational>& v, const PhaseFn& F) {
  check_arity(alg, F, "lie_inversion");
  const int n = alg.dim();
  require(static_cast<int>(v.size()) == n, "lie_inversion: vector size");

  const auto& factors = alg.factors();
  const bool lines =
      std::all_of(factors.begin(), factors.end(), [](const jordan::Factor& f) {
        return f.kind == jordan::Kind::Rank1Product;
      });
  const bool lorentz = factors.size() == 1 && factors[0].kind == jordan::Kind::Lorentz;
  require(lines || lorentz, "lie_inversion: unsupported algebra shape");

  std::vector<PhaseFn> d1;
  d1.reserve(n);
  for (int k = 0; k < n; ++k) d1.push_back(phase_derivative(alg, F, k));

  PowPolyC acc = PowPolyC::zero(F.f.base());
  if (lines) {
    // Component k of the vector operator only sees variable k:
    // x_k D_k^2 + lambda D_k, paired with weight 1.
    for (int k = 0; k < n; ++k) {
      if (v[k] == 0) continue;
      PowPolyC comp =
          phase_derivative(alg, d1[k], k).f.mul_poly(MultiPolyC::variable(n, k));
      comp += d1[k].f.scaled(GaussRational(lambda));
      acc += comp.scaled(GaussRational(v[k]));
    }
    return {F.w, acc.scaled(GaussRational::i())};
  }

  // Single Lorentz factor; the trace form doubles every slot in the pairing.
  std::vector<std::vector<PowPolyC>> d2(n);
  for (int i = 0; i < n; ++i) {
    d2[i].reserve(n);
    for (int j = 0; j < n; ++j) d2[i].push_back(phase_derivative(alg, d1[i], j).f);
  }
  for (int l = 0; l < n; ++l) {
    if (v[l] == 0) continue;
    PowPolyC diag = PowPolyC::zero(F.f.base());
    for (int i = 0; i < n; ++i) diag += d2[i][i].scaled(GaussRational(Rational(eps(i, l))));
    PowPolyC comp = diag.mul_poly(MultiPolyC::variable(n, l)).scaled(GaussRational(rat(1, 4)));

    PowPolyC mixed = PowPolyC::zero(F.f.base());
    for (int i = 0; i < n; ++i) {
      if (i == l) continue;
      mixed += d2[l][i].mul_poly(MultiPolyC::variable(n, i));
    }
    comp += mixed.scaled(GaussRational(rat(1, 2)));
    comp += d1[l].f.scaled(GaussRational(lambda / 2));

    acc += comp.scaled(GaussRational(2 * v[l]));
  }
  return {F.w, acc.scaled(GaussRational::i())};
}

}  // namespace operators
