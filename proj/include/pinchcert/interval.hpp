#ifndef PINCHCERT_INTERVAL_HPP
#define PINCHCERT_INTERVAL_HPP

#include "pinchcert/rational.hpp"

#include <optional>
#include <string>

namespace pinch {

/// Closed interval [lo, hi] with exact rational endpoints.
///
/// The four field operations are exact (the result is the exact image
/// set), so every enclosure stays sound; precision is controlled only by
/// the explicit outward-rounding helpers below, which never move an
/// endpoint inward.
class Interval {
 public:
  Interval() = default;
  Interval(Rational v) : lo_(v), hi_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Interval(long v) : Interval(Rational(v)) {}           // NOLINT
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / Rational(2); }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool overlaps(const Interval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }

  /// +1 / -1 when the interval lies strictly on one side of zero, 0 otherwise.
  int certain_sign() const { return lo_.sign() > 0 ? 1 : (hi_.sign() < 0 ? -1 : 0); }

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  /// Throws DomainError when the divisor contains zero.
  Interval& operator/=(const Interval& o);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
  friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }
  friend bool operator==(const Interval&, const Interval&) = default;

  std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

 private:
  Rational lo_, hi_;
};

Interval hull(const Interval& a, const Interval& b);
/// Tight enclosure of {x^2}; handles intervals straddling zero.
Interval square(const Interval& a);
Interval pow(const Interval& a, unsigned e);

/// Endpoints moved outward onto the grid 2^-bits.
Interval round_out(const Interval& a, long bits);

/// Enclosure of sqrt over I intersected with [0, inf); endpoints on the
/// grid 2^-bits. Throws DomainError when I.hi < 0.
Interval interval_sqrt(const Interval& a, long bits = 64);
/// Enclosure of the real cube root, endpoints on the grid 2^-bits.
Interval interval_cbrt(const Interval& a, long bits = 64);

/// Rational lower/upper bounds of sqrt(x) (x >= 0) within 2^-bits.
Rational sqrt_lower(const Rational& x, long bits);
Rational sqrt_upper(const Rational& x, long bits);

/// Smallest bits with 2^-bits <= w (w > 0).
long bits_for_width(const Rational& w);

}  // namespace pinch

#endif  // PINCHCERT_INTERVAL_HPP
