#ifndef PINCHCERT_POLY_HPP
#define PINCHCERT_POLY_HPP

#include "pinchcert/interval.hpp"
#include "pinchcert/radical.hpp"
#include "pinchcert/rational.hpp"

#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace pinch {

/// Dense univariate polynomial; coefficient i multiplies x^i.
///
/// T is Rational or RadicalNumber. The representation is kept normalized:
/// the last stored coefficient is nonzero, and the zero polynomial has no
/// coefficients (degree -1).
template <class T>
class UniPoly {
 public:
  using coeff_type = T;

  UniPoly() = default;
  explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(T v) { return UniPoly(std::vector<T>{std::move(v)}); }
  static UniPoly x() { return UniPoly(std::vector<T>{T(0), T(1)}); }
  /// a*x + b
  static UniPoly linear(T a, T b) { return UniPoly(std::vector<T>{std::move(b), std::move(a)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)] : T(0); }
  const T& lead() const { return c_.back(); }

  /// Horner evaluation; Rational x Rational stays Rational, anything
  /// involving a RadicalNumber yields a RadicalNumber.
  template <class X>
  auto operator()(const X& x) const {
    using R = std::conditional_t<std::is_same_v<T, Rational> && std::is_same_v<X, Rational>, Rational, RadicalNumber>;
    R acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= R(x);
      acc += R(*it);
    }
    return acc;
  }

  UniPoly derivative() const {
    std::vector<T> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
    return UniPoly(std::move(d));
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
      c_.clear();
      return *this;
    }
    std::vector<T> out(c_.size() + o.c_.size() - 1, T(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    trim();
    return *this;
  }
  UniPoly& operator*=(const T& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const T& s) { return a *= s; }
  friend UniPoly operator*(const T& s, UniPoly a) { return a *= s; }
  friend UniPoly operator-(UniPoly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly pow(unsigned e) const {
    UniPoly r = constant(T(1)), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      b *= b;
      e >>= 1u;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<T> c_;
};

using RatPoly = UniPoly<Rational>;
using RadPoly = UniPoly<RadicalNumber>;

RadPoly to_radical(const RatPoly& p);

/// Quotient and remainder of a / b over the coefficient field.
template <class T>
std::pair<UniPoly<T>, UniPoly<T>> divmod(const UniPoly<T>& a, const UniPoly<T>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<T> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UniPoly<T>(), a};
  std::vector<T> quo(static_cast<size_t>(a.degree() - db + 1), T(0));
  T inv_lead = T(1) / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    T f = rem[static_cast<size_t>(i)] * inv_lead;
    if (f.is_zero()) continue;
    quo[static_cast<size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= f * b.coeffs()[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(db));
  return {UniPoly<T>(std::move(quo)), UniPoly<T>(std::move(rem))};
}

/// Monic gcd over Q.
RatPoly poly_gcd(RatPoly a, RatPoly b);

/// Positive rational multiple of p with coprime integer coefficients.
RatPoly primitive_part(const RatPoly& p);

/// Horner evaluation over an interval argument (sound, not necessarily tight).
Interval eval_interval(const RatPoly& p, const Interval& x);

std::string to_string(const RatPoly& p);
std::string to_string(const RadPoly& p);

}  // namespace pinch

#endif  // PINCHCERT_POLY_HPP
