#ifndef PINCHCERT_RADICAL_HPP
#define PINCHCERT_RADICAL_HPP

#include "pinchcert/interval.hpp"
#include "pinchcert/rational.hpp"

#include <array>
#include <string>
#include <string_view>

namespace pinch {

/// Element of Q(sqrt6, sqrt11, sqrt17) stored on the basis of square-free
/// products {1, sqrt6, sqrt11, sqrt66, sqrt17, sqrt102, sqrt187, sqrt1122}.
///
/// Basis index bits select generators: bit0 = sqrt6, bit1 = sqrt11,
/// bit2 = sqrt17. The basis is linearly independent over Q, so an element
/// is zero exactly when every coefficient is zero.
class RadicalNumber {
 public:
  static constexpr int kBasisSize = 8;

  RadicalNumber() = default;
  RadicalNumber(Rational r) { c_[0] = std::move(r); }  // NOLINT(google-explicit-constructor)
  RadicalNumber(long v) : RadicalNumber(Rational(v)) {}  // NOLINT
  RadicalNumber(int v) : RadicalNumber(Rational(v)) {}   // NOLINT

  /// q * sqrt(radicand) for radicand in {1, 6, 11, 17, 66, 102, 187, 1122}.
  static RadicalNumber sqrt_of(long radicand, Rational q = Rational(1));
  static RadicalNumber basis(int index, Rational q = Rational(1));

  /// Radicand of basis element `index` (1, 6, 11, 66, 17, 102, 187, 1122).
  static long radicand(int index);
  /// Serialization key: "1", "sqrt6", ...
  static std::string basis_name(int index);
  static int basis_index(std::string_view name);

  const Rational& coeff(int index) const { return c_[static_cast<size_t>(index)]; }
  void set_coeff(int index, Rational v) { c_[static_cast<size_t>(index)] = std::move(v); }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; throws DomainError if irrational.
  const Rational& rational() const;

  /// Conjugate flipping the sign of the generator(s) in `generator_mask`.
  RadicalNumber conjugate(int generator_mask) const;
  RadicalNumber inverse() const;

  RadicalNumber& operator+=(const RadicalNumber& o);
  RadicalNumber& operator-=(const RadicalNumber& o);
  RadicalNumber& operator*=(const RadicalNumber& o);
  RadicalNumber& operator/=(const RadicalNumber& o);

  friend RadicalNumber operator+(RadicalNumber a, const RadicalNumber& b) { return a += b; }
  friend RadicalNumber operator-(RadicalNumber a, const RadicalNumber& b) { return a -= b; }
  friend RadicalNumber operator*(RadicalNumber a, const RadicalNumber& b) { return a *= b; }
  friend RadicalNumber operator/(RadicalNumber a, const RadicalNumber& b) { return a /= b; }
  friend RadicalNumber operator-(const RadicalNumber& a);
  friend bool operator==(const RadicalNumber& a, const RadicalNumber& b) { return a.c_ == b.c_; }

  std::string str() const;

 private:
  std::array<Rational, kBasisSize> c_{};
};

RadicalNumber rad_mul(const RadicalNumber& a, const RadicalNumber& b);
/// Throws DomainError when b == 0.
RadicalNumber rad_div(const RadicalNumber& a, const RadicalNumber& b);

/// Exact sign (-1, 0, +1) by adaptive enclosure refinement.
int rad_sign(const RadicalNumber& a);

/// Enclosure of `a` at grid precision 2^-bits per basis square root.
Interval rad_enclose_bits(const RadicalNumber& a, long bits);
/// Enclosure of `a` no wider than `width`.
Interval rad_enclose(const RadicalNumber& a, const Rational& width);

/// Enclosure of sqrt(d) for a positive integer d, endpoints on 2^-bits.
Interval sqrt_enclosure(long d, long bits);

}  // namespace pinch

#endif  // PINCHCERT_RADICAL_HPP
