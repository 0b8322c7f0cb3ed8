#pragma once

// Finite sums  f(x) = sum_j base(x)^{mu_j} * p_j(x)  with rational exponents
// mu_j and a fixed nonconstant base polynomial (the cone determinant, or
// plain t in rank one).  This class is closed under partial derivatives and
// under multiplication by polynomials and by rational powers of the base,
// which is exactly what the differential operators downstream need.
//
// Representation is not unique (base^mu * p == base^{mu-1} * (base*p)), so
// zero tests first rewrite every exponent class mu mod 1 over its minimal
// exponent and then compare polynomials.  Powers of the base differing by a
// non-integer are linearly independent over polynomials as long as the base
// is not itself a proper power, which holds for every base used here.

#include "polyalg/multipoly.hpp"
#include "polyalg/rational.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polyalg {

template <class K>
class PowPolyT {
 public:
  using Poly = MultiPolyT<K>;

  explicit PowPolyT(Poly base) : base_(std::move(base)) {
    if (base_.degree() < 1)
      throw std::invalid_argument("PowPolyT: base must be nonconstant");
  }

  static PowPolyT zero(const Poly& base) { return PowPolyT(base); }

  static PowPolyT from_poly(const Poly& base, const Poly& p, Rational mu = Rational(0)) {
    PowPolyT f(base);
    f.add(mu, p);
    return f;
  }

  const Poly& base() const { return base_; }
  int nvars() const { return base_.nvars(); }
  const std::map<Rational, Poly>& terms() const { return terms_; }

  void add(const Rational& mu, const Poly& p) {
    if (p.nvars() != base_.nvars()) throw std::invalid_argument("PowPolyT::add: arity");
    if (p.is_zero()) return;
    auto it = terms_.find(mu);
    if (it == terms_.end()) {
      terms_.emplace(mu, p);
    } else {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PowPolyT& operator+=(const PowPolyT& o) {
    check_base(o);
    for (const auto& [mu, p] : o.terms_) add(mu, p);
    return *this;
  }
  PowPolyT& operator-=(const PowPolyT& o) {
    check_base(o);
    for (const auto& [mu, p] : o.terms_) add(mu, -p);
    return *this;
  }
  friend PowPolyT operator+(PowPolyT a, const PowPolyT& b) { return a += b; }
  friend PowPolyT operator-(PowPolyT a, const PowPolyT& b) { return a -= b; }

  PowPolyT scaled(const K& c) const {
    PowPolyT r(base_);
    if (coeff_is_zero(c)) return r;
    for (const auto& [mu, p] : terms_) r.terms_.emplace(mu, p.scaled(c));
    return r;
  }

  PowPolyT mul_poly(const Poly& q) const {
    PowPolyT r(base_);
    for (const auto& [mu, p] : terms_) r.add(mu, p * q);
    return r;
  }

  // Multiply by base^k (k may be any rational, including negative).
  PowPolyT mul_base_pow(const Rational& k) const {
    PowPolyT r(base_);
    for (const auto& [mu, p] : terms_) r.terms_.emplace(mu + k, p);
    return r;
  }

  // d/dx_var (base^mu p) = base^{mu-1} (mu dbase p) + base^mu dp.
  PowPolyT derivative(int var) const {
    const Poly dbase = base_.derivative(var);
    PowPolyT r(base_);
    for (const auto& [mu, p] : terms_) {
      if (mu != 0 && !dbase.is_zero()) r.add(mu - 1, dbase.scaled(coeff_from(mu)) * p);
      r.add(mu, p.derivative(var));
    }
    return r;
  }

  // Rewrite each exponent class (mu mod 1) over its minimal exponent.
  PowPolyT normalized() const {
    PowPolyT r(base_);
    std::map<Rational, Rational> floor_of_class;  // fractional part -> min mu
    for (const auto& [mu, p] : terms_) {
      Rational frac = mu - Rational(rational_floor(mu));
      auto it = floor_of_class.find(frac);
      if (it == floor_of_class.end() || mu < it->second) floor_of_class[frac] = mu;
    }
    for (const auto& [mu, p] : terms_) {
      Rational frac = mu - Rational(rational_floor(mu));
      Rational mmin = floor_of_class.at(frac);
      Rational shift = mu - mmin;  // non-negative integer
      int k = static_cast<int>(numerator(shift).convert_to<long long>());
      r.add(mmin, p * base_.pow(k));
    }
    return r;
  }

  bool is_zero() const {
    if (terms_.empty()) return true;
    return normalized().terms_.empty();
  }

  friend bool operator==(const PowPolyT& a, const PowPolyT& b) {
    PowPolyT d = a;
    d -= b;
    return d.is_zero();
  }

  template <class V>
  V evaluate(const std::vector<V>& point) const {
    V acc = V(0);
    const double b = base_value(point);
    for (const auto& [mu, p] : terms_) {
      acc += p.template evaluate<V>(point) * V(std::pow(b, to_double(mu)));
    }
    return acc;
  }

 private:
  static K coeff_from(const Rational& q) {
    if constexpr (std::is_same_v<K, Rational>) {
      return q;
    } else {
      return K(q);
    }
  }

  template <class V>
  double base_value(const std::vector<V>& point) const {
    if constexpr (std::is_same_v<V, double>) {
      return base_.template evaluate<double>(point);
    } else {
      std::vector<double> re(point.size());
      for (size_t i = 0; i < point.size(); ++i) re[i] = std::real(point[i]);
      return base_.template evaluate<double>(re);
    }
  }

  void check_base(const PowPolyT& o) const {
    if (!(base_ == o.base_)) throw std::invalid_argument("PowPolyT: base mismatch");
  }

  Poly base_;
  std::map<Rational, Poly> terms_;
};

using PowPoly = PowPolyT<Rational>;
using PowPolyC = PowPolyT<GaussRational>;

}  // namespace polyalg
