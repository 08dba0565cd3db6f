#include "doctest.h"
#include "support.hpp"

#include "pinchcert/reduction.hpp"
#include "pinchcert/roots.hpp"

#include <cmath>

using namespace pinch;
using testing_support::Rng;

namespace {

const double s6 = std::sqrt(6.0), s11 = std::sqrt(11.0), s17 = std::sqrt(17.0);

// Double-precision transcriptions of the printed formulas, used as oracles.
double printed_poly(const std::vector<double>& desc, double x) {
  double acc = 0;
  for (double c : desc) acc = acc * x + c;
  return acc;
}
double q1d(double x) { return printed_poly({-0.00868, 0.0575, 0.207, -3.126, 2.331, 30.434, -69.56, 40}, x); }
double q2d(double x) { return printed_poly({0.7633, -5.1552, 13.4534, -17.435, 11.598, -3.2064}, x); }

double c_prime() { return std::sqrt(16 * std::pow(0.567, 3) / (81 * 0.134)); }
double u1(double x) { return std::sqrt((3 - s6 - 4 / (13 * (x - 2))) / (s6 - 1 + 1 / (x - 2))); }
double u2(double x) { return 6 - s6 - 1 / (x - 2); }
double kx(double x) { return (s17 + 3) / 2 * x - 3 + 5 * x / 22 - 0.34 * 23 * x / 22; }

double g1d(double x) {
  return -0.433 * x + c_prime() * u1(x) * u2(x) * std::sqrt(x / 44 * kx(x)) + 2.3505 * x / 22 -
         3 * x / (44 * (x + 4)) + 0.567;
}
// Second coefficient with epsilon = sqrt(delta / (8K)), delta = x/22.
double g2d(double x) {
  double eps = std::sqrt(x / (176 * kx(x)));
  double sigma = (s17 + 1) / 2;
  return -0.7835 - c_prime() * u1(x) * u2(x) * ((2 - sigma) * eps - 0.17 / (6.64 * eps));
}

double zd(double x) {
  return 0.567 * 0.567 * 0.567 * 16 / (0.134 * 81 * 44) * std::pow((6 - s6) * (x - 2) - 1, 2) *
         ((3 - s6) * (x - 2) - 4.0 / 13) * ((11 * s17 + 38 - 0.34 * 23) * x / 22 - 3) * (x + 4) * (x + 4) * x;
}
double wd(double x) {
  double b = 0.433 * x * (x + 4) - 2.3505 * x * (x + 4) / 22 + 3 * x / 44 - 0.567 * (x + 4);
  return b * b * ((s6 - 1) * (x - 2) + 1) * (x - 2) * (x - 2);
}
double rd(double x) {
  double L = (11 * s17 + 30.18) * x - 66;
  double A = (3 - s6) * (x - 2) - 4.0 / 13, B = (s6 - 1) * (x - 2) + 1, D = (6 - s6) * (x - 2) - 1;
  double first = ((35 - 9 * s6) * D * (x - 2) / 26 + A * B) *
                 (17 * s11 / 166 * L * L * x + (s17 - 1) * s11 / 4 * L * x * x);
  double second = 66 * A * B * ((s17 - 1) * s11 * x / 8 - 17 * s11 / 332 * L) * D * (x - 2);
  return first - second;
}

double c1d(double n) {
  double p = 1 / (13 * (n - 2));
  return std::cbrt((3 - s6 - 4 * p) / (s6 - 1 + 13 * p) * std::pow(6 - s6 - 13 * p, 2));
}
double c2d() { return (2 * s6 + 3) / std::cbrt(21 * s6 + 103.0 / 2); }
double c4d(double th) { return 4.0 / 9 * std::pow(c2d(), 1.5) * std::pow(1 - th / 2, 1.5) / std::sqrt(1 - th); }

double approx(const RadicalNumber& a) { return rad_enclose_bits(a, 80).mid().to_double(); }

Rational R(const char* s) { return Rational::parse(s); }
Rational dq(double x) { return Rational(mpq_class(x)); }

}  // namespace

TEST_SUITE("reduction") {
  TEST_CASE("Q1 and Q2 are the printed polynomials") {
    for (double x : {-6.0, -2.5, 0.0, 1.5, 3.0, 7.25}) {
      CHECK(build_Q1()(dq(x)).to_double() == doctest::Approx(q1d(x)).epsilon(1e-12));
      CHECK(build_Q2()(dq(x)).to_double() == doctest::Approx(q2d(x)).epsilon(1e-12));
    }
    CHECK(build_Q1().degree() == 7);
    CHECK(build_Q2().degree() == 5);
  }

  TEST_CASE("reference point values of Q1 and Q2") {
    RatPoly q1 = build_Q1(), q2 = build_Q2();
    struct Pt {
      const char* x;
      const char* v;
      bool exact;
    };
    for (auto p : {Pt{"-6", "501.124", false}, Pt{"-5", "-166.787", false}, Pt{"0", "40", true},
                   Pt{"1.5", "-1.74319", false}, Pt{"2", "0.44096", true}, Pt{"3", "-11.8077", false}}) {
      Rational got = q1(R(p.x)), want = R(p.v);
      INFO("Q1(" << p.x << ") = " << got.decimal(8));
      CHECK((got - want).abs() <= R("5e-4"));
      if (p.exact) CHECK(got == want);
    }
    for (auto p : {Pt{"0", "-3.2064", true}, Pt{"1", "0.0181", true}, Pt{"2", "-0.1808", true},
                   Pt{"3", "5.8251", true}}) {
      INFO("Q2(" << p.x << ")");
      CHECK(q2(R(p.x)) == R(p.v));
    }
  }

  TEST_CASE("resultants and root counts") {
    RatPoly q1 = build_Q1(), q2 = build_Q2();
    Rational r1 = sylvester_resultant(q1, q1.derivative());
    Rational r2 = sylvester_resultant(q2, q2.derivative());
    CHECK((r1 - R("-32.12")).abs() <= R("0.05"));
    CHECK((r2 - R("-0.145")).abs() <= R("0.002"));
    // disc = (-1)^{n(n-1)/2} Res(p, p') / lead.
    CHECK(discriminant(q1) == -r1 / q1.lead());
    CHECK(discriminant(q1).sign() < 0);
    CHECK(discriminant(q2).sign() < 0);
    CHECK(count_real_roots(q1, RealRange::open(Rational(-6), Rational(3))).count == 5);
    CHECK(count_real_roots(q1, RealRange::ray_from(Rational(3))).count == 0);
    CHECK(count_real_roots(q1, RealRange::whole_line()).count == 5);
    CHECK(count_real_roots(q2, RealRange::whole_line()).count == 3);
    CHECK(count_real_roots(q2, RealRange::open(Rational(0), Rational(3))).count == 3);
    CHECK(count_real_roots(q2, RealRange::ray_from(Rational(3))).count == 0);
  }

  TEST_CASE("expanded Z, W and R equal the printed factor forms") {
    CHECK(build_Z().degree() == 7);
    CHECK(build_W().degree() == 7);
    CHECK(build_Rx().degree() == 5);
    CHECK(build_g2_slope_numerator().degree() == 5);
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
      Rational x = rng.rational(200, 17);
      RadicalNumber X(x);
      CHECK(build_Z()(X) == Z_factored(X));
      CHECK(build_W()(X) == W_factored(X));
      CHECK(build_Rx()(X) == Rx_factored(X));
      double xd = x.to_double();
      double scale = 1 + std::fabs(zd(xd)) + std::fabs(wd(xd));
      CHECK(approx(build_Z()(X)) / scale == doctest::Approx(zd(xd) / scale).epsilon(1e-9));
      CHECK(approx(build_W()(X)) / scale == doctest::Approx(wd(xd) / scale).epsilon(1e-9));
      CHECK(approx(build_Rx()(X)) / (1 + std::fabs(rd(xd))) ==
            doctest::Approx(rd(xd) / (1 + std::fabs(rd(xd)))).epsilon(1e-9));
    }
  }

  TEST_CASE("majorants hold at sample points") {
    for (int i = 0; i <= 60; ++i) {
      double x = i * 0.5;
      RadicalNumber X(Rational(i) / Rational(2));
      CHECK(rad_sign(to_radical(build_Q1())(X) - (build_Z()(X) - build_W()(X))) >= 0);
      CHECK(rad_sign(build_Rx()(X) - RadicalNumber(10000) * to_radical(build_Q2())(X)) >= 0);
      CHECK(q1d(x) - (zd(x) - wd(x)) >= -1e-6 * (1 + std::fabs(zd(x))));
    }
  }

  TEST_CASE("constants against direct evaluation") {
    Rational w = Rational::pow2(-60);
    CHECK(C2_enclosure(w).mid().to_double() == doctest::Approx(c2d()).epsilon(1e-14));
    CHECK(C4_of(R("0.836"), w).mid().to_double() == doctest::Approx(c4d(0.836)).epsilon(1e-14));
    CHECK(C4_of(R("0.836"), w).hi() <= R("1.066218") + R("1e-6"));
    for (int n = 6; n <= 50; n += 4) {
      CHECK(C1_of(Rational(n), w).mid().to_double() == doctest::Approx(c1d(n)).epsilon(1e-13));
      double c3 = 4.0 / 9 * std::pow(c1d(n), 1.5) * std::pow(1 - 0.433, 1.5) / std::sqrt(1 - 0.866);
      CHECK(C3_of(Rational(n), R("0.866"), w).mid().to_double() == doctest::Approx(c3).epsilon(1e-13));
      CHECK(c3 == doctest::Approx(c_prime() * u1(n) * u2(n)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(C1_of(Rational(2), w), DomainError);
    CHECK_THROWS_AS(C4_of(Rational(1), w), DomainError);
  }

  TEST_CASE("g1 and g2 against the printed formulas") {
    Rational w = R("1e-12");
    for (double x : {6.0, 7.0, 10.0, 25.5, 1000.0}) {
      Rational X = dq(x);
      CHECK(g1_point(X, w).mid().to_double() == doctest::Approx(g1d(x)).epsilon(1e-10));
      CHECK(g2_point(X, w).mid().to_double() == doctest::Approx(g2d(x)).epsilon(1e-10));
      CHECK(g1_point(X, w).width() <= w);
    }
    Interval lim = g2_limit(R("1e-9"));
    CHECK(lim.lo() > R("-0.05"));
    CHECK(lim.hi() < R("-0.04"));
    CHECK(lim.mid().to_double() == doctest::Approx(g2d(1e9)).epsilon(1e-6));
  }

  TEST_CASE("general coefficients specialize to g1 and g2 for n = 6..50") {
    MinimalParams p = paper_minimal_params();
    for (int n = 6; n <= 50; ++n) {
      CoefficientPair c = minimal_coeff_pair_bits(p, Rational(n), 96);
      CHECK(c.coeff_gradA.overlaps(g1_point(Rational(n), Rational::pow2(-80))));
      CHECK(c.coeff_excess.overlaps(g2_point(Rational(n), Rational::pow2(-80))));
      CHECK(c.coeff_gradA.hi().sign() < 0);
      CHECK(c.coeff_excess.hi().sign() < 0);
      Interval e = eval_on(minimal_gradA_expr(p), Interval(Rational(n)), 96);
      CHECK(e.overlaps(c.coeff_gradA));
      Interval e2 = eval_on(minimal_excess_expr(p), Interval(Rational(n)), 96);
      CHECK(e2.overlaps(c.coeff_excess));
    }
  }

  TEST_CASE("expression enclosures cover their point values") {
    MinimalParams p{R("0.85"), R("0.78"), R("22")};
    ScaledExpr e = minimal_endpoint_expr(p);
    Rng rng(32);
    for (int t = 0; t < 30; ++t) {
      Rational a = Rational(6) + rng.positive(400, 7);
      Rational b = a + rng.positive(20, 9);
      Interval whole = eval_on(e, Interval(a, b), 64);
      for (int s = 0; s <= 4; ++s) {
        Rational x = a + (b - a) * Rational(s) / Rational(4);
        CHECK(whole.overlaps(eval_on(e, Interval(x), 128)));
        CoefficientPair c = minimal_coeff_pair_bits(p, x, 128);
        Interval direct = c.coeff_gradA + Interval(x / p.k) * c.coeff_excess;
        CHECK(whole.overlaps(direct));
      }
    }
    CHECK(expr_by_id("minimal-endpoint", p.as_map()).id == "minimal-endpoint");
    CHECK_THROWS_AS(expr_by_id("nope", {}), DomainError);
  }

  TEST_CASE("self-shrinker coefficients") {
    ShrinkerParams sp = paper_shrinker_params();
    CoefficientPair c = shrinker_coeff_pair_bits(sp, 96);
    double d = 1.0 / 21, C4 = c4d(0.836);
    double eps = std::sqrt(d / (4 * (s17 + 3) + 16 * (1 + d) * (0.81 - 1) + 40 * d));
    double a = C4 / 4 * std::sqrt(40 * d * d - 3.04 * (1 + d) * d + 4 * (s17 + 3) * d) - 0.418 + 2.373 * d;
    double b = C4 / 8 * (4 * s17 * eps - 12 * eps - 1 / eps + 1 / (0.81 * eps)) - 0.791;
    CHECK(c.coeff_gradA.mid().to_double() == doctest::Approx(a).epsilon(1e-12));
    CHECK(c.coeff_excess.mid().to_double() == doctest::Approx(b).epsilon(1e-12));
    CHECK(c.coeff_gradA.lo() > R("-0.01"));
    CHECK(c.coeff_gradA.hi().sign() < 0);
    CoefficientPair pr = shrinker_coeff_pair_printed(sp.delta, 96);
    CHECK(pr.coeff_gradA.overlaps(c.coeff_gradA));
    CHECK(pr.coeff_excess.overlaps(c.coeff_excess));
    CHECK(shrinker_gradA_bits(sp, 96).overlaps(c.coeff_gradA));
    ShrinkerParams zero = sp;
    zero.delta = Rational(0);
    CHECK(shrinker_gradA_bits(zero, 64) == Interval(-sp.theta / Rational(2)));
    CHECK_THROWS_AS(shrinker_coeff_pair_bits(zero, 64), DomainError);
  }

  TEST_CASE("small-dimension coefficients") {
    for (int n = 2; n <= 5; ++n)
      for (double kk : {1.0, 10.0, 22.0, 40.0}) {
        Rational k(static_cast<long>(kk)), N(n);
        for (const Rational& S : {N, N + N / k}) {
          double s = S.to_double(), nd = n, expect;
          if (n <= 3)
            expect = (kk + 9) / (4 * kk) * nd + (s17 - 4) / 4 * s - 1.5;
          else
            expect = (1 + 9 / kk) / 4 * nd - (5 - 2 * (n == 4 ? 2.16 : 2.23)) / 4 * s - 1.5;
          CHECK(approx(smalln_coefficient_exact(n, k, S)) == doctest::Approx(expect).epsilon(1e-12));
          CHECK(smalln_coefficient(n, k, S).contains(rad_enclose_bits(smalln_coefficient_exact(n, k, S), 64).mid()));
        }
      }
    CHECK(eta(4) == R("2.16"));
    CHECK(eta(5) == R("2.23"));
    CHECK_THROWS_AS(eta(6), DomainError);
    CHECK_THROWS_AS(smalln_coefficient_exact(6, Rational(22), Rational(6)), DomainError);
    CHECK_THROWS_AS(smalln_coefficient_exact(2, Rational(22), Rational(3)), DomainError);
  }

  TEST_CASE("sigma identities") {
    RadicalNumber s = sigma();
    CHECK(s * s == s + RadicalNumber(4));
    CHECK(RadicalNumber(2) * s - RadicalNumber(1) == RadicalNumber::sqrt_of(17));
  }

  TEST_CASE("g2 slope sign follows the derivative numerator") {
    Rng rng(33);
    RadPoly num = build_g2_slope_numerator();
    for (int t = 0; t < 10; ++t) {
      Rational x = Rational(3) + rng.positive(400, 7);
      int s = rad_sign(num(RadicalNumber(x)));
      REQUIRE(s != 0);
      // Shrink the step until the difference quotient is decided.
      int fd = 0;
      for (long e = 8; e <= 40 && fd == 0; e += 8) {
        Rational h = Rational::pow2(-e);
        Interval d = g2_point(x + h, h * h * h) - g2_point(x - h, h * h * h);
        if (d.lo().sign() > 0) fd = 1;
        if (d.hi().sign() < 0) fd = -1;
      }
      CHECK(fd == s);
      CHECK(rad_sign(build_Rx()(RadicalNumber(x))) > 0);
    }
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((MinimalParams{Rational(1), R("0.8"), Rational(22)}.validate()), DomainError);
    CHECK_THROWS_AS((MinimalParams{R("0.8"), Rational(0), Rational(22)}.validate()), DomainError);
    CHECK_THROWS_AS((MinimalParams{R("0.8"), R("0.8"), Rational(0)}.validate()), DomainError);
    CHECK_THROWS_AS((ShrinkerParams{Rational(-1), R("0.8"), R("0.8")}.validate()), DomainError);
    CHECK_NOTHROW(paper_minimal_params().validate());
    CHECK_NOTHROW(paper_shrinker_params().validate());
  }
}
