#ifndef PINCHCERT_RATIONAL_HPP
#define PINCHCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pinch {

/// Raised when an argument lies outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for malformed textual input (numbers, configs, certificates).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Decimal literals such as
/// "0.00868" are parsed exactly (868/100000 reduced); no floating point
/// value is ever consulted when constructing a Rational from text.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p", "p/q", decimals ("-0.433"), scientific ("1e-6") and
  /// binary powers ("2^-64").
  static Rational parse(std::string_view text);

  /// 2^e for any integer e.
  static Rational pow2(long e);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const { return Rational(::abs(q_)); }
  Rational inverse() const;
  mpz_class floor() const;
  mpz_class ceil() const;
  /// Integer power (negative exponents allowed for nonzero values).
  Rational pow(long e) const;

  /// floor(log2 |x|) for nonzero x.
  long ilog2() const;

  /// Serialized "p/q" form (always carries the denominator).
  std::string str() const;
  /// Fixed-point decimal rounded half away from zero to `digits` places.
  std::string decimal(int digits) const;
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Largest multiple of 2^-bits that is <= x.
Rational round_down(const Rational& x, long bits);
/// Smallest multiple of 2^-bits that is >= x.
Rational round_up(const Rational& x, long bits);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace pinch

#endif  // PINCHCERT_RATIONAL_HPP
