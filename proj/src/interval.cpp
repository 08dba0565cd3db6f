#include "pinchcert/interval.hpp"

#include <array>

namespace pinch {

namespace {

mpz_class scaled_floor(const Rational& x, unsigned long shift) {
  mpz_class n = x.num();
  mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), shift);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), x.den().get_mpz_t());
  return q;
}

mpz_class scaled_ceil(const Rational& x, unsigned long shift) {
  mpz_class n = x.num();
  mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), shift);
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), x.den().get_mpz_t());
  return q;
}

Rational over_pow2(const mpz_class& n, unsigned long bits) {
  mpz_class d = 1;
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), bits);
  return Rational(n, d);
}

// floor(cbrt(x)) bounds for x >= 0 on the grid 2^-bits.
Rational cbrt_lower_nonneg(const Rational& x, long bits) {
  mpz_class m = scaled_floor(x, static_cast<unsigned long>(3 * bits));
  mpz_class r;
  mpz_root(r.get_mpz_t(), m.get_mpz_t(), 3);
  return over_pow2(r, static_cast<unsigned long>(bits));
}

Rational cbrt_upper_nonneg(const Rational& x, long bits) {
  mpz_class m = scaled_ceil(x, static_cast<unsigned long>(3 * bits));
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), 3) == 0) r += 1;
  return over_pow2(r, static_cast<unsigned long>(bits));
}

}  // namespace

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw DomainError("interval with lo > hi: " + lo_.str() + " > " + hi_.str());
}

Interval& Interval::operator+=(const Interval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  lo_ -= o.hi_;
  hi_ -= o.lo_;
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  if (lo_.sign() >= 0 && o.lo_.sign() >= 0) {
    lo_ *= o.lo_;
    hi_ *= o.hi_;
    return *this;
  }
  std::array<Rational, 4> p{lo_ * o.lo_, lo_ * o.hi_, hi_ * o.lo_, hi_ * o.hi_};
  Rational a = p[0], b = p[0];
  for (const auto& v : p) {
    a = min(a, v);
    b = max(b, v);
  }
  lo_ = a;
  hi_ = b;
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.contains_zero()) throw DomainError("interval division by an interval containing zero " + o.str());
  return *this *= Interval(o.hi_.inverse(), o.lo_.inverse());
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(min(a.lo(), b.lo()), max(a.hi(), b.hi()));
}

Interval square(const Interval& a) {
  Rational l2 = a.lo() * a.lo(), h2 = a.hi() * a.hi();
  if (a.contains_zero()) return Interval(Rational(0), max(l2, h2));
  return Interval(min(l2, h2), max(l2, h2));
}

Interval pow(const Interval& a, unsigned e) {
  if (e == 0) return Interval(1);
  if (e % 2 == 0) return pow(square(a), e / 2);
  return a * pow(a, e - 1);
}

Interval round_out(const Interval& a, long bits) {
  return Interval(round_down(a.lo(), bits), round_up(a.hi(), bits));
}

Rational sqrt_lower(const Rational& x, long bits) {
  if (x.sign() <= 0) return Rational(0);
  mpz_class m = scaled_floor(x, static_cast<unsigned long>(2 * bits));
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  return over_pow2(r, static_cast<unsigned long>(bits));
}

Rational sqrt_upper(const Rational& x, long bits) {
  if (x.sign() <= 0) return Rational(0);
  mpz_class m = scaled_ceil(x, static_cast<unsigned long>(2 * bits));
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  if (r * r < m) r += 1;
  return over_pow2(r, static_cast<unsigned long>(bits));
}

Interval interval_sqrt(const Interval& a, long bits) {
  if (a.hi().sign() < 0) throw DomainError("square root of negative interval " + a.str());
  return Interval(sqrt_lower(a.lo(), bits), sqrt_upper(a.hi(), bits));
}

Interval interval_cbrt(const Interval& a, long bits) {
  auto lower = [bits](const Rational& x) {
    return x.sign() >= 0 ? cbrt_lower_nonneg(x, bits) : -cbrt_upper_nonneg(-x, bits);
  };
  auto upper = [bits](const Rational& x) {
    return x.sign() >= 0 ? cbrt_upper_nonneg(x, bits) : -cbrt_lower_nonneg(-x, bits);
  };
  return Interval(lower(a.lo()), upper(a.hi()));
}

long bits_for_width(const Rational& w) {
  if (w.sign() <= 0) throw DomainError("width must be positive");
  long b = -w.ilog2();
  while (Rational::pow2(-b) > w) ++b;
  return b < 1 ? 1 : b;
}

}  // namespace pinch
