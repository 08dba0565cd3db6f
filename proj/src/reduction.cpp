#include "pinchcert/reduction.hpp"

#include <type_traits>

namespace pinch {

namespace {

Rational dec(const char* s) { return Rational::parse(s); }

}  // namespace

void MinimalParams::validate() const {
  if (!(theta.sign() > 0 && theta < Rational(1))) throw DomainError("theta must lie in (0, 1), got " + theta.str());
  if (!(theta1.sign() > 0 && theta1 <= Rational(1)))
    throw DomainError("theta1 must lie in (0, 1], got " + theta1.str());
  if (k.sign() <= 0) throw DomainError("k must be positive, got " + k.str());
}

std::map<std::string, Rational> MinimalParams::as_map() const {
  return {{"theta", theta}, {"theta1", theta1}, {"k", k}};
}

void ShrinkerParams::validate() const {
  if (delta.sign() <= 0) throw DomainError("delta must be positive, got " + delta.str());
  if (!(theta.sign() > 0 && theta < Rational(1))) throw DomainError("theta must lie in (0, 1), got " + theta.str());
  if (!(theta1.sign() > 0 && theta1 <= Rational(1)))
    throw DomainError("theta1 must lie in (0, 1], got " + theta1.str());
}

std::map<std::string, Rational> ShrinkerParams::as_map() const {
  return {{"delta", delta}, {"theta", theta}, {"theta1", theta1}};
}

MinimalParams paper_minimal_params() { return {dec("0.866"), dec("0.83"), Rational(22)}; }

ShrinkerParams paper_shrinker_params() { return {Rational(1) / Rational(21), dec("0.836"), dec("0.81")}; }

RadicalNumber sigma() { return (RadicalNumber::sqrt_of(17) + RadicalNumber(1)) / RadicalNumber(2); }

Rational eta(int n) {
  if (n == 4) return dec("2.16");
  if (n == 5) return dec("2.23");
  throw DomainError("eta is only defined for n = 4, 5");
}

// ---------------------------------------------------------------------------
// Constants by interval evaluation

namespace {

Interval refine_to_width(const std::function<Interval(long)>& f, const Rational& width) {
  if (width.sign() <= 0) throw DomainError("enclosure width must be positive");
  long bits = bits_for_width(width) + 8;
  for (;;) {
    Interval e = f(bits);
    if (e.width() <= width) return e;
    bits += bits / 2;
  }
}

// (3 - sqrt6 - 4p) / (sqrt6 - 1 + 13p) * (6 - sqrt6 - 13p)^2 = C1^3.
Interval c1_cubed(const Rational& n, long bits) {
  if (n <= Rational(2)) throw DomainError("C1 needs n > 2 (p = 1/(13(n-2))), got n = " + n.str());
  Rational p = Rational(1) / (Rational(13) * (n - Rational(2)));
  Interval s6 = sqrt_enclosure(6, bits);
  Interval num = Interval(Rational(3) - Rational(4) * p) - s6;
  if (num.hi().sign() <= 0) throw DomainError("C1 radicand is nonpositive at n = " + n.str());
  Interval den = s6 + Interval(Rational(13) * p - Rational(1));
  return round_out(num / den * square(Interval(Rational(6) - Rational(13) * p) - s6), bits);
}

Interval theta_factor(const Rational& theta, long bits) {
  if (!(theta.sign() > 0 && theta < Rational(1))) throw DomainError("theta must lie in (0, 1), got " + theta.str());
  Rational half = Rational(1) - theta / Rational(2);
  Interval h32 = Interval(half) * interval_sqrt(Interval(half), bits);
  return Interval(Rational(4) / Rational(9)) * h32 / interval_sqrt(Interval(Rational(1) - theta), bits);
}

}  // namespace

Interval C1_bits(const Rational& n, long bits) { return interval_cbrt(c1_cubed(n, bits), bits); }

Interval C2_bits(long bits) {
  Interval s6 = sqrt_enclosure(6, bits);
  Interval num = Interval(Rational(2)) * s6 + Interval(Rational(3));
  Interval den = interval_cbrt(Interval(Rational(21)) * s6 + Interval(Rational(103) / Rational(2)), bits);
  return round_out(num / den, bits);
}

Interval C3_bits(const Rational& n, const Rational& theta, long bits) {
  // C1^(3/2) = sqrt(C1^3).
  return round_out(theta_factor(theta, bits) * interval_sqrt(c1_cubed(n, bits), bits), bits);
}

Interval C4_bits(const Rational& theta, long bits) {
  Interval c2 = C2_bits(bits);
  return round_out(theta_factor(theta, bits) * c2 * interval_sqrt(c2, bits), bits);
}

Interval C1_of(const Rational& n, const Rational& width) {
  return refine_to_width([&](long b) { return C1_bits(n, b); }, width);
}
Interval C2_enclosure(const Rational& width) {
  return refine_to_width([](long b) { return C2_bits(b); }, width);
}
Interval C3_of(const Rational& n, const Rational& theta, const Rational& width) {
  return refine_to_width([&](long b) { return C3_bits(n, theta, b); }, width);
}
Interval C4_of(const Rational& theta, const Rational& width) {
  return refine_to_width([&](long b) { return C4_bits(theta, b); }, width);
}

// ---------------------------------------------------------------------------
// Polynomials

RatPoly build_Q1() {
  return RatPoly({dec("40"), dec("-69.56"), dec("30.434"), dec("2.331"), dec("-3.126"), dec("0.207"), dec("0.0575"),
                  dec("-0.00868")});
}

RatPoly build_Q2() {
  return RatPoly({dec("-3.2064"), dec("11.598"), dec("-17.435"), dec("13.4534"), dec("-5.1552"), dec("0.7633")});
}

namespace {

// The printed forms are written once, generic over the value type, so the
// same text yields both the expanded polynomial (V = RadPoly) and direct
// field evaluation at a point (V = RadicalNumber).
template <class V>
V lift(const RadicalNumber& c) {
  if constexpr (std::is_same_v<V, RadPoly>)
    return RadPoly::constant(c);
  else
    return c;
}

RadicalNumber rq(const char* s) { return RadicalNumber(dec(s)); }
RadicalNumber s6() { return RadicalNumber::sqrt_of(6); }
RadicalNumber s11() { return RadicalNumber::sqrt_of(11); }
RadicalNumber s17() { return RadicalNumber::sqrt_of(17); }

template <class V>
V z_form(const V& x) {
  auto c = [](const RadicalNumber& v) { return lift<V>(v); };
  RadicalNumber k = rq("0.567") * rq("0.567") * rq("0.567") * rq("16") / (rq("0.134") * rq("81") * rq("44"));
  V f1 = c(rq("6") - s6()) * (x - c(2)) - c(1);
  V f2 = c(rq("3") - s6()) * (x - c(2)) - c(RadicalNumber(Rational(4) / Rational(13)));
  V f3 = c((rq("11") * s17() + rq("38") - rq("0.34") * rq("23")) / rq("22")) * x - c(3);
  V x4 = x + c(4);
  return c(k) * f1 * f1 * f2 * f3 * x4 * x4 * x;
}

template <class V>
V w_form(const V& x) {
  auto c = [](const RadicalNumber& v) { return lift<V>(v); };
  V x4 = x + c(4);
  V inner = c(rq("0.433")) * x * x4 - c(rq("2.3505") / rq("22")) * x * x4 + c(rq("3") / rq("44")) * x -
            c(rq("0.567")) * x4;
  V p = c(s6() - rq("1")) * (x - c(2)) + c(1);
  V x2 = x - c(2);
  return inner * inner * p * x2 * x2;
}

// `root_shift` is 1 for the printed numerator, 3 for the one matching the
// general inequality.
template <class V>
V r_form(const V& x, long root_shift) {
  auto c = [](const RadicalNumber& v) { return lift<V>(v); };
  RadicalNumber shifted = s17() - RadicalNumber(root_shift);
  V x2 = x - c(2);
  V f1 = c(rq("6") - s6()) * x2 - c(1);
  V f2 = c(rq("3") - s6()) * x2 - c(RadicalNumber(Rational(4) / Rational(13)));
  V p = c(s6() - rq("1")) * x2 + c(1);
  V L = c(rq("11") * s17() + rq("30.18")) * x - c(66);
  V a1 = c((rq("35") - rq("9") * s6()) / rq("26")) * f1 * x2 + f2 * p;
  V a2 = c(rq("17") * s11() / rq("166")) * L * L * x + c(shifted * s11() / rq("4")) * L * x * x;
  V a3 = c(66) * f2 * p * (c(shifted * s11() / rq("8")) * x - c(rq("17") * s11() / rq("332")) * L) * f1 * x2;
  return a1 * a2 - a3;
}

}  // namespace

RadPoly build_Z() { return z_form(RadPoly::x()); }
RadPoly build_W() { return w_form(RadPoly::x()); }
RadPoly build_Rx() { return r_form(RadPoly::x(), 1); }
RadPoly build_g2_slope_numerator() { return r_form(RadPoly::x(), 3); }

RadicalNumber Z_factored(const RadicalNumber& x) { return z_form(x); }
RadicalNumber W_factored(const RadicalNumber& x) { return w_form(x); }
RadicalNumber Rx_factored(const RadicalNumber& x) { return r_form(x, 1); }

RatPoly case1_prefactor_poly() {
  RatPoly x = RatPoly::x();
  RatPoly x4 = x + RatPoly::constant(Rational(4));
  RatPoly lin = x * (dec("0.433") - dec("2.3505") / Rational(22)) - RatPoly::constant(dec("0.567"));
  return RatPoly::constant(Rational(44)) * x4 * lin + x * Rational(3);
}

RadPoly shifted_sqrt6_factor() {
  RadicalNumber a = s6() - RadicalNumber(1);
  return RadPoly::linear(a, RadicalNumber(1) - RadicalNumber(2) * a);
}

RadPoly case2_linear_factor() { return RadPoly::linear(rq("11") * s17() + rq("30.18"), RadicalNumber(-66)); }

RadPoly case2_u1_numerator() {
  RadicalNumber a = rq("3") - s6();
  return RadPoly::linear(a, -RadicalNumber(2) * a - RadicalNumber(Rational(4) / Rational(13)));
}

// ---------------------------------------------------------------------------
// Small dimensions

RadicalNumber smalln_coefficient_exact(int n, const Rational& k, const Rational& S) {
  if (n < 2 || n > 5) throw DomainError("small-dimension coefficient needs n in {2,3,4,5}");
  if (k.sign() <= 0) throw DomainError("k must be positive");
  Rational N(n);
  if (S < N || S > N + N / k) throw DomainError("S must lie in [n, n + n/k]");
  const RadicalNumber half3(Rational(3) / Rational(2));
  if (n <= 3) {
    RadicalNumber lead((k + Rational(9)) / (Rational(4) * k) * N);
    RadicalNumber sc = (s17() - RadicalNumber(4)) / RadicalNumber(4);
    return lead + sc * RadicalNumber(S) - half3;
  }
  Rational lead = (Rational(1) + Rational(9) / k) / Rational(4) * N;
  Rational sc = (Rational(5) - Rational(2) * eta(n)) / Rational(4);
  return RadicalNumber(lead - sc * S) - half3;
}

Interval smalln_coefficient(int n, const Rational& k, const Rational& S) {
  return rad_enclose_bits(smalln_coefficient_exact(n, k, S), kDefaultBits);
}

}  // namespace pinch
