#include "pinchcert/reduction.hpp"

namespace pinch {

namespace {

Rational dec(const char* s) { return Rational::parse(s); }

Interval iv(const char* s) { return Interval(dec(s)); }

Interval sigma_bits(long bits) { return (sqrt_enclosure(17, bits) + Interval(1)) / Interval(2); }

Interval refine_to_width(const std::function<Interval(long)>& f, const Rational& width) {
  if (width.sign() <= 0) throw DomainError("enclosure width must be positive");
  long bits = bits_for_width(width) + 8;
  for (;;) {
    Interval e = f(bits);
    if (e.width() <= width) return e;
    bits += bits / 2;
  }
}

// sqrt((3 - sqrt6 - 4q/13) / (sqrt6 - 1 + q)) * (6 - sqrt6 - q) at a point q.
// With q = 1/(x-2) this is U1 U2 = C1^(3/2).
Interval u12_point(const Rational& q, long bits) {
  Interval s6 = sqrt_enclosure(6, bits);
  Interval num = Interval(Rational(3) - Rational(4) * q / Rational(13)) - s6;
  if (num.hi().sign() <= 0) throw DomainError("U1 radicand is nonpositive at q = " + q.str());
  Interval den = s6 + Interval(q - Rational(1));
  Interval tail = Interval(Rational(6) - q) - s6;
  return interval_sqrt(round_out(num / den, bits), bits) * tail;
}

// U1 U2 is decreasing in q on its domain.
Interval u12(const Interval& r, long bits) {
  if (!(r.hi() * Rational(2) < Rational(1)) || r.lo().sign() < 0)
    throw DomainError("x must exceed 2, got 1/x range " + r.str());
  Rational q_lo = r.lo() / (Rational(1) - Rational(2) * r.lo());
  Rational q_hi = r.hi() / (Rational(1) - Rational(2) * r.hi());
  if (q_lo == q_hi) return u12_point(q_lo, bits);
  return Interval(u12_point(q_hi, bits).lo(), u12_point(q_lo, bits).hi());
}

// r / (1 + 4r), increasing for r >= 0.
Interval r_over_1p4r(const Interval& r) {
  auto f = [](const Rational& v) { return v / (Rational(1) + Rational(4) * v); };
  return Interval(f(r.lo()), f(r.hi()));
}

Interval theta_part(const Rational& theta, long bits) {
  if (!(theta.sign() > 0 && theta < Rational(1))) throw DomainError("theta must lie in (0, 1), got " + theta.str());
  Rational half = Rational(1) - theta / Rational(2);
  Interval h32 = Interval(half) * interval_sqrt(Interval(half), bits);
  return Interval(Rational(4) / Rational(9)) * h32 / interval_sqrt(Interval(Rational(1) - theta), bits);
}

// sqrt(16 * 0.567^3 / (81 * 0.134))
Interval c_prime(long bits) {
  return interval_sqrt(Interval(Rational(16) * dec("0.567").pow(3) / (Rational(81) * dec("0.134"))), bits);
}

// K(x) / x for the printed g1, g2.
Interval printed_k_over_x(const Interval& r, long bits) {
  Interval s17 = sqrt_enclosure(17, bits);
  return (s17 + Interval(3)) / Interval(2) - Interval(3) * r + Interval(Rational(5) / Rational(22)) -
         Interval(dec("0.34") * Rational(23) / Rational(22));
}

Interval g1_scaled(const Interval& r, long bits) {
  Interval kx = printed_k_over_x(r, bits);
  Interval v = -iv("0.433") + c_prime(bits) * u12(r, bits) * interval_sqrt(kx / Interval(44), bits) +
               Interval(dec("2.3505") / Rational(22)) - Interval(Rational(3) / Rational(44)) * r_over_1p4r(r) +
               iv("0.567") * r;
  return round_out(v, bits);
}

Interval g2_scaled(const Interval& r, long bits) {
  Interval kx = printed_k_over_x(r, bits);
  if (kx.lo().sign() <= 0) throw DomainError("g2 radicand is nonpositive");
  Interval eps = interval_sqrt(Interval(1) / (Interval(176) * kx), bits);
  Interval bracket = (Interval(2) - sigma_bits(bits)) * eps - iv("0.17") / (iv("6.64") * eps);
  return round_out(-iv("0.7835") - c_prime(bits) * u12(r, bits) * bracket, bits);
}

// kappa(r) = sigma + 1 + 5/k + 2(1 + 1/k)(theta1 - 1) - 3r, the epsilon
// radicand divided by 8x.
Interval kappa(const MinimalParams& p, const Interval& r, long bits) {
  Interval v = sigma_bits(bits) + Interval(Rational(1) + Rational(5) / p.k +
                                           Rational(2) * (Rational(1) + Rational(1) / p.k) * (p.theta1 - Rational(1))) -
               Interval(3) * r;
  if (v.hi().sign() <= 0) throw DomainError("epsilon radicand is nonpositive");
  if (v.lo().sign() <= 0) throw DomainError("epsilon radicand is not certainly positive");
  return v;
}

Interval gradA_over_x(const MinimalParams& p, const Interval& r, long bits) {
  const Rational& th = p.theta;
  Interval c3 = theta_part(th, bits) * u12(r, bits);
  Interval ka = kappa(p, r, bits);
  Interval v = r * Interval(Rational(1) - th / Rational(2)) - Interval(th / Rational(2)) +
               Interval(2) * c3 * interval_sqrt(ka / Interval(Rational(8) * p.k), bits) +
               Interval((Rational(3) - Rational(3) * th / Rational(4)) / p.k) -
               Interval(Rational(3) / (Rational(2) * p.k)) * r_over_1p4r(r);
  return round_out(v, bits);
}

Interval excess_scaled(const MinimalParams& p, const Interval& r, long bits) {
  const Rational& th = p.theta;
  Interval c3 = theta_part(th, bits) * u12(r, bits);
  Interval ka = kappa(p, r, bits);
  Interval inv8eps = interval_sqrt(Interval(p.k) * ka / Interval(8), bits);
  Interval eps = Interval(1) / interval_sqrt(Interval(Rational(8) * p.k) * ka, bits);
  Interval v = Interval(th / Rational(4) - Rational(1)) +
               c3 * (Interval(Rational(1) / p.theta1 - Rational(1)) * inv8eps + (sigma_bits(bits) - Interval(2)) * eps);
  return round_out(v, bits);
}

Interval point_r(const Rational& x) {
  if (x <= Rational(2)) throw DomainError("x must exceed 2, got " + x.str());
  return Interval(x.inverse());
}

}  // namespace

// ---------------------------------------------------------------------------
// Printed functionals

Interval g1_point(const Rational& x, const Rational& width) {
  Interval r = point_r(x);
  return refine_to_width([&](long b) { return Interval(x) * g1_scaled(r, b); }, width);
}

Interval g2_point(const Rational& x, const Rational& width) {
  Interval r = point_r(x);
  return refine_to_width([&](long b) { return g2_scaled(r, b); }, width);
}

Interval g2_limit(const Rational& width) {
  return refine_to_width([](long b) { return g2_scaled(Interval(0), b); }, width);
}

// ---------------------------------------------------------------------------
// General coefficients, evaluated term by term at n

CoefficientPair minimal_coeff_pair_bits(const MinimalParams& params, const Rational& n, long bits) {
  params.validate();
  if (n <= Rational(2)) throw DomainError("n must exceed 2, got " + n.str());
  const Rational& th = params.theta;
  const Rational& th1 = params.theta1;
  Rational delta = params.delta(n);
  Interval sig = sigma_bits(bits);
  Interval K = sig * Interval(n) + Interval(n - Rational(3) + Rational(5) * delta +
                                            Rational(2) * (n + delta) * (th1 - Rational(1)));
  if (K.hi().sign() <= 0) throw DomainError("epsilon radicand is nonpositive at n = " + n.str());
  if (K.lo().sign() <= 0) throw DomainError("epsilon radicand is not certainly positive at n = " + n.str());
  Interval eps = interval_sqrt(round_out(Interval(delta) / (Interval(8) * K), bits), bits);
  Interval eps1 = Interval(th1) * eps;
  Interval c3 = C3_bits(n, th, bits);

  Interval a = Interval(Rational(1) - th / Rational(2) * (n + Rational(1))) +
               eps * c3 * (Interval(n) * sig + Interval(n - Rational(3) + Rational(5) * delta)) +
               c3 * Interval(delta) / (Interval(8) * eps) +
               Interval(delta * (Rational(3) - Rational(3) * th / Rational(4) -
                                 Rational(3) / (Rational(2) * (n + Rational(4))))) +
               Interval(2) * eps * Interval(th1 - Rational(1)) * c3 * Interval(n + delta);
  Interval b = -(Interval(Rational(1) - th / Rational(4)) + c3 / (Interval(8) * eps) - c3 / (Interval(8) * eps1) +
                 eps * c3 * (Interval(2) - sig));
  return {round_out(a, bits), round_out(b, bits)};
}

CoefficientPair minimal_coeff_pair(const MinimalParams& params, const Rational& n, const Rational& width) {
  if (width.sign() <= 0) throw DomainError("enclosure width must be positive");
  long bits = bits_for_width(width) + 8;
  for (;;) {
    CoefficientPair c = minimal_coeff_pair_bits(params, n, bits);
    if (c.coeff_gradA.width() <= width && c.coeff_excess.width() <= width) return c;
    bits += bits / 2;
  }
}

namespace {

Interval shrinker_radicand(const ShrinkerParams& p, long bits) {
  Interval s17 = sqrt_enclosure(17, bits);
  Interval v = Interval(4) * (s17 + Interval(3)) +
               Interval(Rational(16) * (Rational(1) + p.delta) * (p.theta1 - Rational(1)) + Rational(40) * p.delta);
  if (v.hi().sign() <= 0) throw DomainError("epsilon radicand is nonpositive");
  if (v.lo().sign() <= 0) throw DomainError("epsilon radicand is not certainly positive");
  return v;
}

}  // namespace

CoefficientPair shrinker_coeff_pair_bits(const ShrinkerParams& params, long bits) {
  params.validate();
  const Rational& d = params.delta;
  const Rational& th = params.theta;
  Interval s17 = sqrt_enclosure(17, bits);
  Interval eps = interval_sqrt(round_out(Interval(d) / shrinker_radicand(params, bits), bits), bits);
  Interval eps1 = Interval(params.theta1) * eps;
  Interval c4 = C4_bits(th, bits);

  Interval a = Interval(-th / Rational(2)) + (s17 + Interval(3)) / Interval(2) * c4 * eps +
               (Interval(5) * eps + Interval(1) / (Interval(8) * eps)) * Interval(d) * c4 +
               Interval((Rational(3) - Rational(3) * th / Rational(4)) * d) +
               Interval(2) * c4 * Interval(Rational(1) + d) * (eps1 - eps);
  Interval b = -(Interval(Rational(1) - th / Rational(4)) - (s17 - Interval(3)) / Interval(2) * c4 * eps +
                 c4 / (Interval(8) * eps) - c4 / (Interval(8) * eps1));
  return {round_out(a, bits), round_out(b, bits)};
}

CoefficientPair shrinker_coeff_pair(const ShrinkerParams& params, const Rational& width) {
  if (width.sign() <= 0) throw DomainError("enclosure width must be positive");
  long bits = bits_for_width(width) + 8;
  for (;;) {
    CoefficientPair c = shrinker_coeff_pair_bits(params, bits);
    if (c.coeff_gradA.width() <= width && c.coeff_excess.width() <= width) return c;
    bits += bits / 2;
  }
}

Interval shrinker_gradA_bits(const ShrinkerParams& params, long bits) {
  if (params.delta.sign() < 0) throw DomainError("delta must be nonnegative, got " + params.delta.str());
  ShrinkerParams checked = params;
  if (checked.delta.is_zero()) checked.delta = Rational(1);
  checked.validate();
  const Rational& d = params.delta;
  const Rational& th = params.theta;
  Interval a = Interval(-th / Rational(2) + (Rational(3) - Rational(3) * th / Rational(4)) * d);
  if (d.is_zero()) return a;
  Interval root = interval_sqrt(round_out(Interval(d) * shrinker_radicand(params, bits), bits), bits);
  return round_out(a + C4_bits(th, bits) * root / Interval(4), bits);
}

CoefficientPair shrinker_coeff_pair_printed(const Rational& delta, long bits) {
  if (delta.sign() <= 0) throw DomainError("delta must be positive, got " + delta.str());
  Interval s17 = sqrt_enclosure(17, bits);
  Interval c4 = C4_bits(dec("0.836"), bits);
  Interval d(delta);
  Interval rad = Interval(40) * d * d - iv("3.04") * (Interval(1) + d) * d + Interval(4) * (s17 + Interval(3)) * d;
  Interval a = c4 / Interval(4) * interval_sqrt(round_out(rad, bits), bits) - iv("0.418") + iv("2.373") * d;
  ShrinkerParams p{delta, dec("0.836"), dec("0.81")};
  Interval eps = interval_sqrt(round_out(d / shrinker_radicand(p, bits), bits), bits);
  Interval b = c4 / Interval(8) *
                   (Interval(4) * s17 * eps - Interval(12) * eps - Interval(1) / eps +
                    Interval(1) / (iv("0.81") * eps)) -
               iv("0.791");
  return {round_out(a, bits), round_out(b, bits)};
}

// ---------------------------------------------------------------------------
// Scaled expressions

Interval eval_on(const ScaledExpr& e, const Interval& x, long bits) {
  if (x.lo().sign() <= 0) throw DomainError("x must be positive, got " + x.str());
  Interval r(x.hi().inverse(), x.lo().inverse());
  Interval f = e.scaled(r, bits);
  if (e.power == 0) return f;
  return pow(x, static_cast<unsigned>(e.power)) * f;
}

ScaledExpr g1_expr() { return {"g1", {}, 1, g1_scaled}; }

ScaledExpr g2_expr() { return {"g2", {}, 0, g2_scaled}; }

ScaledExpr minimal_gradA_expr(const MinimalParams& p) {
  p.validate();
  return {"minimal-gradA", p.as_map(), 1, [p](const Interval& r, long bits) { return gradA_over_x(p, r, bits); }};
}

ScaledExpr minimal_excess_expr(const MinimalParams& p) {
  p.validate();
  return {"minimal-excess", p.as_map(), 0, [p](const Interval& r, long bits) { return excess_scaled(p, r, bits); }};
}

ScaledExpr minimal_endpoint_expr(const MinimalParams& p) {
  p.validate();
  return {"minimal-endpoint", p.as_map(), 1, [p](const Interval& r, long bits) {
            return round_out(gradA_over_x(p, r, bits) + excess_scaled(p, r, bits) / Interval(p.k), bits);
          }};
}

ScaledExpr poly_expr(const std::string& id, const RatPoly& p) {
  int d = std::max(p.degree(), 0);
  return {id, {}, d, [p](const Interval& r, long) {
            // x^d P(1/x) = c_d + c_{d-1} r + ... + c_0 r^d
            Interval acc(0);
            for (const auto& c : p.coeffs()) acc = acc * r + Interval(c);
            return acc;
          }};
}

ScaledExpr constant_expr(const Rational& c) {
  return {"constant", {{"value", c}}, 0, [c](const Interval&, long) { return Interval(c); }};
}

namespace {

const Rational& need(const std::map<std::string, Rational>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw DomainError("expression parameter '" + key + "' missing");
  return it->second;
}

MinimalParams minimal_from(const std::map<std::string, Rational>& params) {
  return {need(params, "theta"), need(params, "theta1"), need(params, "k")};
}

}  // namespace

ScaledExpr expr_by_id(const std::string& id, const std::map<std::string, Rational>& params) {
  if (id == "g1") return g1_expr();
  if (id == "g2") return g2_expr();
  if (id == "Q1") return poly_expr("Q1", build_Q1());
  if (id == "Q2") return poly_expr("Q2", build_Q2());
  if (id == "minimal-gradA") return minimal_gradA_expr(minimal_from(params));
  if (id == "minimal-excess") return minimal_excess_expr(minimal_from(params));
  if (id == "minimal-endpoint") return minimal_endpoint_expr(minimal_from(params));
  if (id == "constant") return constant_expr(need(params, "value"));
  throw DomainError("unknown expression id '" + id + "'");
}

}  // namespace pinch
