#pragma once

// Sparse multivariate polynomials with exact coefficients.  Terms live in a
// std::map keyed by exponent vectors (lexicographic order), which gives a
// canonical, reproducible term order for printing, serialization and
// equality testing.  No zero coefficient is ever stored.

#include "polyalg/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polyalg {

template <class K>
class MultiPolyT {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, K>;

  explicit MultiPolyT(int nvars = 0) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("MultiPolyT: negative arity");
  }

  static MultiPolyT constant(int nvars, K c) {
    MultiPolyT p(nvars);
    p.add_term(Exponents(nvars, 0), std::move(c));
    return p;
  }

  static MultiPolyT variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("MultiPolyT: variable index");
    MultiPolyT p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.add_term(std::move(e), K(1));
    return p;
  }

  static MultiPolyT monomial(int nvars, Exponents exps, K c) {
    MultiPolyT p(nvars);
    p.add_term(std::move(exps), std::move(c));
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  // Total degree; -1 for the zero polynomial.
  int degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_)
      deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
  }

  int degree_in(int var) const {
    int deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[var]);
    return terms_.empty() ? -1 : deg;
  }

  K coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(Exponents e, K c) {
    if (static_cast<int>(e.size()) != nvars_)
      throw std::invalid_argument("MultiPolyT: exponent arity mismatch");
    if (coeff_is_zero(c)) return;
    // try_emplace leaves c untouched when the key already exists.
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiPolyT operator-() const {
    MultiPolyT r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  MultiPolyT& operator+=(const MultiPolyT& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPolyT& operator-=(const MultiPolyT& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend MultiPolyT operator+(MultiPolyT a, const MultiPolyT& b) { return a += b; }
  friend MultiPolyT operator-(MultiPolyT a, const MultiPolyT& b) { return a -= b; }

  friend MultiPolyT operator*(const MultiPolyT& a, const MultiPolyT& b) {
    a.check_arity(b);
    MultiPolyT r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        typename MultiPolyT::Exponents e(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    return r;
  }

  MultiPolyT& operator*=(const MultiPolyT& o) { return *this = *this * o; }

  MultiPolyT scaled(const K& c) const {
    MultiPolyT r(nvars_);
    if (coeff_is_zero(c)) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
  }

  MultiPolyT pow(int n) const {
    if (n < 0) throw std::invalid_argument("MultiPolyT::pow: negative exponent");
    MultiPolyT r = constant(nvars_, K(1));
    MultiPolyT base = *this;
    for (; n > 0; n >>= 1) {
      if (n & 1) r *= base;
      if (n > 1) base *= base;
    }
    return r;
  }

  friend bool operator==(const MultiPolyT& a, const MultiPolyT& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPolyT& a, const MultiPolyT& b) { return !(a == b); }

  MultiPolyT derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("derivative: variable index");
    MultiPolyT r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      --d[var];
      r.add_term(std::move(d), c * K(e[var]));
    }
    return r;
  }

  // Substitute subs[i] for variable i; the subs share a common (possibly
  // different) arity.  Powers of each substitution are cached per call.
  MultiPolyT compose(const std::vector<MultiPolyT>& subs) const {
    if (static_cast<int>(subs.size()) != nvars_)
      throw std::invalid_argument("compose: wrong number of substitutions");
    const int out_vars = nvars_ == 0 ? 0 : subs[0].nvars();
    for (const auto& s : subs)
      if (s.nvars() != out_vars) throw std::invalid_argument("compose: substitution arity");

    std::vector<std::vector<MultiPolyT>> pows(nvars_);
    auto power_of = [&](int var, int n) -> const MultiPolyT& {
      auto& cache = pows[var];
      if (cache.empty()) cache.push_back(constant(out_vars, K(1)));
      while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * subs[var]);
      return cache[n];
    };

    MultiPolyT r(out_vars);
    for (const auto& [e, c] : terms_) {
      MultiPolyT term = constant(out_vars, c);
      for (int i = 0; i < nvars_; ++i)
        if (e[i] > 0) term *= power_of(i, e[i]);
      r += term;
    }
    return r;
  }

  // Affine substitution x -> A x + b over the same variable space.
  MultiPolyT compose_affine(const std::vector<std::vector<K>>& A, const std::vector<K>& b) const {
    if (static_cast<int>(A.size()) != nvars_ || static_cast<int>(b.size()) != nvars_)
      throw std::invalid_argument("compose_affine: dimension mismatch");
    std::vector<MultiPolyT> subs;
    subs.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      if (static_cast<int>(A[i].size()) != nvars_)
        throw std::invalid_argument("compose_affine: row length");
      MultiPolyT s = constant(nvars_, b[i]);
      for (int j = 0; j < nvars_; ++j)
        if (!coeff_is_zero(A[i][j])) s += variable(nvars_, j).scaled(A[i][j]);
      subs.push_back(std::move(s));
    }
    return compose(subs);
  }

  // Horner-free direct evaluation; V may be double, complex, Rational, ...
  template <class V>
  V evaluate(const std::vector<V>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw std::invalid_argument("evaluate: point arity");
    V acc = V(0);
    for (const auto& [e, c] : terms_) {
      V t = ScalarCast<V>::from(c);
      for (int i = 0; i < nvars_; ++i) t *= ipow(point[i], e[i]);
      acc += t;
    }
    return acc;
  }

  // Keep only the terms whose exponent in `var` has the given parity; used
  // when splitting a polynomial into even/odd parts in one variable.
  MultiPolyT parity_part(int var, int parity) const {
    MultiPolyT r(nvars_);
    for (const auto& [e, c] : terms_)
      if (e[var] % 2 == parity) r.add_term(e, c);
    return r;
  }

  // Reinterpret this polynomial in a larger variable space: variable i
  // becomes variable map[i].
  MultiPolyT embed(int new_nvars, const std::vector<int>& map) const {
    if (static_cast<int>(map.size()) != nvars_) throw std::invalid_argument("embed: map size");
    MultiPolyT r(new_nvars);
    for (const auto& [e, c] : terms_) {
      Exponents ne(new_nvars, 0);
      for (int i = 0; i < nvars_; ++i) {
        if (map[i] < 0 || map[i] >= new_nvars) throw std::invalid_argument("embed: map range");
        ne[map[i]] += e[i];
      }
      r.add_term(std::move(ne), c);
    }
    return r;
  }

  template <class V>
  static V ipow(V base, int n) {
    V r = V(1);
    for (; n > 0; n >>= 1) {
      if (n & 1) r *= base;
      if (n > 1) base *= base;
    }
    return r;
  }

 private:
  void check_arity(const MultiPolyT& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPolyT: arity mismatch");
  }

  int nvars_;
  TermMap terms_;
};

using MultiPoly = MultiPolyT<Rational>;
using MultiPolyC = MultiPolyT<GaussRational>;

inline MultiPolyC complexify(const MultiPoly& p) {
  MultiPolyC r(p.nvars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, GaussRational(c));
  return r;
}

// Sum of second partials over `vars` (all variables when empty).
template <class K>
MultiPolyT<K> laplacian(const MultiPolyT<K>& p, std::vector<int> vars = {}) {
  if (vars.empty()) {
    vars.resize(p.nvars());
    std::iota(vars.begin(), vars.end(), 0);
  }
  MultiPolyT<K> r(p.nvars());
  for (int v : vars) r += p.derivative(v).derivative(v);
  return r;
}

// Sum of signed second partials: sum_i signs[i] * d^2/dx_i^2.
template <class K>
MultiPolyT<K> signature_laplacian(const MultiPolyT<K>& p, const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != p.nvars())
    throw std::invalid_argument("signature_laplacian: signs size");
  MultiPolyT<K> r(p.nvars());
  for (int v = 0; v < p.nvars(); ++v) {
    if (signs[v] == 0) continue;
    r += p.derivative(v).derivative(v).scaled(K(signs[v]));
  }
  return r;
}

// Canonical JSON form {nvars, terms:[{exps, num, den}]}; term order is the
// map's lexicographic exponent order, so output is reproducible.
inline nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"exps", e},
                     {"num", numerator(c).str()},
                     {"den", denominator(c).str()}});
  }
  return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

}  // namespace polyalg
