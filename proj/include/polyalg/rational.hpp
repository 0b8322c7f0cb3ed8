#pragma once

// Exact scalar types shared by all symbolic computations: arbitrary-precision
// rationals and Gaussian rationals a + b*i (the latter only where a factor of
// i enters an otherwise exact identity).

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <string>

namespace polyalg {

using BigInt = boost::multiprecision::cpp_int;
// Plain-value (non-expression-template) rationals: results of +,-,*,/ are
// again Rational, which keeps mixed expressions with Eigen well-typed.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Binomial coefficient with arbitrary rational top argument:
// binom(q, k) = q(q-1)...(q-k+1) / k!.  Zero for k < 0.
inline Rational binom(const Rational& q, int k) {
  if (k < 0) return Rational(0);
  Rational num = 1;
  for (int i = 0; i < k; ++i) num *= q - i;
  return num / Rational(factorial(k));
}

// Rising factorial (a)_n = a(a+1)...(a+n-1).
inline Rational pochhammer(const Rational& a, int n) {
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= a + i;
  return r;
}

// floor of a rational, exact.
inline BigInt rational_floor(const Rational& q) {
  BigInt n = numerator(q), d = denominator(q);  // d > 0 canonically
  BigInt quot = n / d;
  if (n < 0 && quot * d != n) --quot;
  return quot;
}

struct GaussRational {
  Rational re, im;

  GaussRational() : re(0), im(0) {}
  GaussRational(int v) : re(v), im(0) {}  // NOLINT: implicit, scalar promotion
  GaussRational(Rational r) : re(std::move(r)), im(0) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }

  GaussRational operator-() const { return {-re, -im}; }
  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    Rational n2 = o.re * o.re + o.im * o.im;
    if (n2 == 0) throw std::domain_error("GaussRational: division by zero");
    Rational r = (re * o.re + im * o.im) / n2;
    im = (im * o.re - re * o.im) / n2;
    re = std::move(r);
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

// Conversions from exact coefficients to the numeric type a caller evaluates in.
template <class V>
struct ScalarCast;

template <>
struct ScalarCast<double> {
  static double from(const Rational& q) { return to_double(q); }
  // Real evaluation of Gaussian-rational coefficients only makes sense when
  // the imaginary part vanishes (e.g. the base of a complexified power sum).
  static double from(const GaussRational& q) {
    if (!(q.im == 0)) throw std::domain_error("ScalarCast: complex coefficient");
    return to_double(q.re);
  }
};
template <>
struct ScalarCast<Rational> {
  static const Rational& from(const Rational& q) { return q; }
};
template <>
struct ScalarCast<std::complex<double>> {
  static std::complex<double> from(const Rational& q) { return {to_double(q), 0.0}; }
  static std::complex<double> from(const GaussRational& q) {
    return {to_double(q.re), to_double(q.im)};
  }
};
template <>
struct ScalarCast<GaussRational> {
  static GaussRational from(const Rational& q) { return GaussRational(q); }
  static const GaussRational& from(const GaussRational& q) { return q; }
};

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const GaussRational& c) { return c.is_zero(); }

inline std::string coeff_to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

}  // namespace polyalg
