#include "pinchcert/radical.hpp"

#include <bit>
#include <sstream>

namespace pinch {

namespace {

constexpr std::array<long, 3> kGenerators{6, 11, 17};

// sqrt(b_i) * sqrt(b_j) = factor * sqrt(b_{i ^ j}); factor is the product
// of the generators the two masks share.
long basis_product_factor(int i, int j) {
  long f = 1;
  int common = i & j;
  for (int g = 0; g < 3; ++g)
    if (common & (1 << g)) f *= kGenerators[static_cast<size_t>(g)];
  return f;
}

}  // namespace

long RadicalNumber::radicand(int index) {
  long r = 1;
  for (int g = 0; g < 3; ++g)
    if (index & (1 << g)) r *= kGenerators[static_cast<size_t>(g)];
  return r;
}

std::string RadicalNumber::basis_name(int index) {
  return index == 0 ? "1" : "sqrt" + std::to_string(radicand(index));
}

int RadicalNumber::basis_index(std::string_view name) {
  for (int i = 0; i < kBasisSize; ++i)
    if (basis_name(i) == name) return i;
  throw ParseError("unknown radical basis element '" + std::string(name) + "'");
}

RadicalNumber RadicalNumber::basis(int index, Rational q) {
  RadicalNumber r;
  r.c_[static_cast<size_t>(index)] = std::move(q);
  return r;
}

RadicalNumber RadicalNumber::sqrt_of(long radicand_value, Rational q) {
  for (int i = 0; i < kBasisSize; ++i)
    if (radicand(i) == radicand_value) return basis(i, std::move(q));
  throw DomainError("radicand " + std::to_string(radicand_value) + " is outside Q(sqrt6, sqrt11, sqrt17)");
}

bool RadicalNumber::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool RadicalNumber::is_rational() const {
  for (int i = 1; i < kBasisSize; ++i)
    if (!c_[static_cast<size_t>(i)].is_zero()) return false;
  return true;
}

const Rational& RadicalNumber::rational() const {
  if (!is_rational()) throw DomainError("radical number " + str() + " is not rational");
  return c_[0];
}

RadicalNumber RadicalNumber::conjugate(int generator_mask) const {
  RadicalNumber r = *this;
  for (int i = 0; i < kBasisSize; ++i)
    if (std::popcount(static_cast<unsigned>(i & generator_mask)) % 2 == 1)
      r.c_[static_cast<size_t>(i)] = -r.c_[static_cast<size_t>(i)];
  return r;
}

RadicalNumber RadicalNumber::inverse() const {
  if (is_zero()) throw DomainError("division by zero radical number");
  // Multiplying by the conjugate in each generator in turn eliminates that
  // generator; after three steps only the rational norm remains.
  RadicalNumber num(1), cur = *this;
  for (int g = 0; g < 3; ++g) {
    RadicalNumber conj = cur.conjugate(1 << g);
    num *= conj;
    cur *= conj;
  }
  Rational norm = cur.rational();
  for (auto& c : num.c_) c /= norm;
  return num;
}

RadicalNumber& RadicalNumber::operator+=(const RadicalNumber& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RadicalNumber& RadicalNumber::operator-=(const RadicalNumber& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RadicalNumber& RadicalNumber::operator*=(const RadicalNumber& o) {
  std::array<Rational, kBasisSize> out{};
  for (int i = 0; i < kBasisSize; ++i) {
    if (c_[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < kBasisSize; ++j) {
      if (o.c_[static_cast<size_t>(j)].is_zero()) continue;
      out[static_cast<size_t>(i ^ j)] +=
          c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)] * Rational(basis_product_factor(i, j));
    }
  }
  c_ = std::move(out);
  return *this;
}

RadicalNumber& RadicalNumber::operator/=(const RadicalNumber& o) {
  if (o.is_rational()) {
    const Rational& d = o.rational();
    if (d.is_zero()) throw DomainError("division by zero radical number");
    for (auto& c : c_) c /= d;
    return *this;
  }
  return *this *= o.inverse();
}

RadicalNumber operator-(const RadicalNumber& a) {
  RadicalNumber r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string RadicalNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kBasisSize; ++i) {
    const Rational& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (i != 0) os << "*" << basis_name(i);
  }
  return first ? "0" : os.str();
}

RadicalNumber rad_mul(const RadicalNumber& a, const RadicalNumber& b) { return a * b; }

RadicalNumber rad_div(const RadicalNumber& a, const RadicalNumber& b) { return a / b; }

Interval sqrt_enclosure(long d, long bits) {
  Rational v(d);
  return Interval(sqrt_lower(v, bits), sqrt_upper(v, bits));
}

Interval rad_enclose_bits(const RadicalNumber& a, long bits) {
  Interval acc(a.coeff(0));
  for (int i = 1; i < RadicalNumber::kBasisSize; ++i) {
    const Rational& c = a.coeff(i);
    if (c.is_zero()) continue;
    acc += Interval(c) * sqrt_enclosure(RadicalNumber::radicand(i), bits);
  }
  return acc;
}

Interval rad_enclose(const RadicalNumber& a, const Rational& width) {
  if (width.sign() <= 0) throw DomainError("enclosure width must be positive");
  long bits = bits_for_width(width) + 4;
  for (;;) {
    Interval e = rad_enclose_bits(a, bits);
    if (e.width() <= width) return e;
    bits += 16;
  }
}

int rad_sign(const RadicalNumber& a) {
  if (a.is_zero()) return 0;
  if (a.is_rational()) return a.rational().sign();
  for (long bits = 32;; bits *= 2) {
    int s = rad_enclose_bits(a, bits).certain_sign();
    if (s != 0) return s;
  }
}

}  // namespace pinch
