#include "doctest.h"
#include "support.hpp"

#include "pinchcert/roots.hpp"

#include <algorithm>

using namespace pinch;
using testing_support::Rng;

namespace {

RatPoly X() { return RatPoly::x(); }
RatPoly C(const Rational& c) { return RatPoly::constant(c); }

// Random polynomial with known real roots: lead * prod (x - r_i)^{m_i} * prod (x^2 + c_j), c_j > 0.
struct KnownRoots {
  RatPoly p;
  std::vector<Rational> roots;  // distinct
  Rational lead;
};

KnownRoots known_roots_poly(Rng& rng) {
  KnownRoots k;
  k.lead = rng.nonzero(9, 4);
  k.p = C(k.lead);
  int n = static_cast<int>(rng.integer(0, 5));
  while (static_cast<int>(k.roots.size()) < n) {
    Rational r = rng.rational(30, 6);
    if (std::find(k.roots.begin(), k.roots.end(), r) != k.roots.end()) continue;
    k.roots.push_back(r);
    int mult = rng.integer(0, 3) == 0 ? 2 : 1;
    for (int m = 0; m < mult; ++m) k.p *= X() - C(r);
  }
  int quads = static_cast<int>(rng.integer(0, 2));
  for (int q = 0; q < quads; ++q) k.p *= X() * X() - C(Rational(2) * rng.rational(5, 3)) * X() + C(rng.positive(40, 3) + Rational(30));
  if (k.p.is_constant()) k.p *= X() * X() + C(Rational(1));
  std::sort(k.roots.begin(), k.roots.end());
  return k;
}

RealRange random_range(Rng& rng, const std::vector<Rational>& roots) {
  auto end = [&]() -> Rational {
    if (!roots.empty() && rng.integer(0, 2) == 0) return roots[static_cast<size_t>(rng.integer(0, long(roots.size()) - 1))];
    return rng.rational(30, 6);
  };
  RealRange r;
  int shape = static_cast<int>(rng.integer(0, 3));
  if (shape != 1) r.lo = end();
  if (shape != 2) r.hi = end();
  if (r.lo && r.hi && *r.hi < *r.lo) std::swap(r.lo, r.hi);
  r.lo_closed = rng.integer(0, 1) == 1;
  r.hi_closed = rng.integer(0, 1) == 1;
  return r;
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("Horner evaluation matches the expanded sum") {
    Rng rng(21);
    for (int t = 0; t < 100; ++t) {
      std::vector<Rational> c;
      for (int i = 0; i < rng.integer(1, 9); ++i) c.push_back(rng.rational());
      RatPoly p(c);
      Rational x = rng.rational(), sum(0);
      for (size_t i = 0; i < c.size(); ++i) sum += c[i] * x.pow(static_cast<long>(i));
      CHECK(p(x) == sum);
    }
  }

  TEST_CASE("division identity and gcd") {
    Rng rng(22);
    for (int t = 0; t < 100; ++t) {
      std::vector<Rational> a, b;
      for (int i = 0; i < rng.integer(1, 8); ++i) a.push_back(rng.rational());
      for (int i = 0; i < rng.integer(1, 5); ++i) b.push_back(rng.rational());
      b.push_back(rng.nonzero());
      RatPoly A(a), B(b);
      auto [q, r] = divmod(A, B);
      CHECK(q * B + r == A);
      CHECK(r.degree() < B.degree());
    }
    RatPoly g = poly_gcd((X() - C(1)) * (X() - C(2)), (X() - C(2)) * (X() - C(3)));
    CHECK(g.degree() == 1);
    CHECK(g(Rational(2)).is_zero());
    CHECK_THROWS_AS(divmod(X(), RatPoly()), DomainError);
  }

  TEST_CASE("Sturm counts agree with known roots on 200 random polynomials") {
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
      KnownRoots k = known_roots_poly(rng);
      RealRange range = random_range(rng, k.roots);
      int expect = 0;
      for (const auto& r : k.roots) expect += range.contains(r) ? 1 : 0;
      INFO("p = " << to_string(k.p) << " range " << range.str());
      CHECK(count_real_roots(k.p, range).count == expect);
      CHECK(count_real_roots(k.p, RealRange::whole_line()).count == static_cast<int>(k.roots.size()));
    }
  }

  TEST_CASE("isolating intervals hold exactly the known roots") {
    Rng rng(24);
    for (int t = 0; t < 80; ++t) {
      KnownRoots k = known_roots_poly(rng);
      auto ivs = isolate_real_roots(k.p);
      REQUIRE(ivs.size() == k.roots.size());
      for (size_t i = 0; i < ivs.size(); ++i) {
        if (ivs[i].exact()) {
          CHECK(ivs[i].lo == k.roots[i]);
        } else {
          CHECK(ivs[i].lo < k.roots[i]);
          CHECK(k.roots[i] < ivs[i].hi);
        }
        auto fine = refine_root(k.p, ivs[i], Rational(1) / Rational(1000));
        CHECK((fine.exact() ? fine.lo == k.roots[i] : (fine.lo < k.roots[i] && k.roots[i] < fine.hi)));
        CHECK(fine.hi - fine.lo <= Rational(1) / Rational(1000));
      }
    }
  }

  TEST_CASE("endpoint roots are resolved exactly") {
    RatPoly p = (X() - C(3)) * (X() + C(6));
    CHECK(count_real_roots(p, RealRange::open(Rational(-6), Rational(3))).count == 0);
    CHECK(count_real_roots(p, RealRange::closed(Rational(-6), Rational(3))).count == 2);
    CHECK(count_real_roots(p, RealRange::ray_from(Rational(3), true)).count == 1);
    CHECK(count_real_roots(p, RealRange::ray_from(Rational(3), false)).count == 0);
    CHECK(count_real_roots(p, RealRange::parse("[-6:3)")).count == 1);
  }

  TEST_CASE("resultant product formula") {
    Rng rng(25);
    for (int t = 0; t < 60; ++t) {
      Rational a = rng.nonzero(5, 3), b = rng.nonzero(5, 3);
      RatPoly p = C(a), q = C(b);
      std::vector<Rational> al, be;
      for (int i = 0; i < rng.integer(1, 4); ++i) {
        al.push_back(rng.rational(10, 4));
        p *= X() - C(al.back());
      }
      for (int j = 0; j < rng.integer(1, 4); ++j) {
        be.push_back(rng.rational(10, 4));
        q *= X() - C(be.back());
      }
      Rational expect = a.pow(q.degree()) * b.pow(p.degree());
      for (const auto& x : al)
        for (const auto& y : be) expect *= x - y;
      CHECK(sylvester_resultant(p, q) == expect);
      CHECK(sylvester_resultant(to_radical(p), to_radical(q)) == RadicalNumber(expect));
    }
  }

  TEST_CASE("discriminants of quadratics and cubics") {
    Rng rng(26);
    for (int t = 0; t < 60; ++t) {
      Rational a = rng.nonzero(), b = rng.rational(), c = rng.rational(), d = rng.rational();
      CHECK(discriminant(RatPoly{c, b, a}) == b * b - Rational(4) * a * c);
      Rational cubic = b * b * c * c - Rational(4) * a * c * c * c - Rational(4) * b * b * b * d -
                       Rational(27) * a * a * d * d + Rational(18) * a * b * c * d;
      CHECK(discriminant(RatPoly{d, c, b, a}) == cubic);
    }
  }

  TEST_CASE("coefficient bounds sandwich the radical polynomial") {
    Rng rng(27);
    for (int t = 0; t < 60; ++t) {
      std::vector<RadicalNumber> c;
      for (int i = 0; i < rng.integer(1, 7); ++i) {
        RadicalNumber v(rng.rational(20, 5));
        v += RadicalNumber::sqrt_of(6, rng.rational(20, 5));
        v += RadicalNumber::sqrt_of(17, rng.rational(20, 5));
        c.push_back(v);
      }
      RadPoly p(c);
      if (p.is_zero()) continue;
      Rational width = Rational::pow2(-rng.integer(4, 40));
      RatPoly lo = coeff_bound_poly(p, BoundDirection::lower, width);
      RatPoly hi = coeff_bound_poly(p, BoundDirection::upper, width);
      for (int i = 0; i <= p.degree(); ++i) {
        CHECK(rad_sign(p.coeff(i) - RadicalNumber(lo.coeff(i))) >= 0);
        CHECK(rad_sign(RadicalNumber(hi.coeff(i)) - p.coeff(i)) >= 0);
        CHECK(hi.coeff(i) - lo.coeff(i) <= Rational(2) * width);
      }
      for (int s = 0; s < 5; ++s) {
        Rational x = rng.rational(40, 7).abs();
        RadicalNumber v = p(RadicalNumber(x));
        CHECK(rad_sign(v - RadicalNumber(lo(x))) >= 0);
        CHECK(rad_sign(RadicalNumber(hi(x)) - v) >= 0);
      }
    }
  }

  TEST_CASE("parity factorization reconstructs the polynomial") {
    Rng rng(28);
    for (int t = 0; t < 60; ++t) {
      KnownRoots k = known_roots_poly(rng);
      ParityFactorization f = parity_factorization(k.p);
      CHECK(f.scale.sign() > 0);
      CHECK(f.core * f.square * f.square * f.scale == k.p);
      CHECK(poly_gcd(f.core, f.core.derivative()).degree() <= 0);
    }
  }

  TEST_CASE("Sturm sequence shape") {
    RatPoly p = X() * X() * X() - C(2) * X();
    auto chain = sturm_sequence(p);
    REQUIRE(chain.size() >= 2);
    CHECK(chain[0] == p);
    CHECK(chain[1] == p.derivative());
    CHECK(chain.back().is_constant());
    CHECK(sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true) == 3);
    CHECK(cauchy_root_bound(p) > Rational::parse("1.4143"));
  }

  TEST_CASE("resultant vanishes exactly on a common factor") {
    Rng rng(29);
    for (int t = 0; t < 80; ++t) {
      RatPoly p = C(rng.nonzero()), q = C(rng.nonzero());
      for (int i = 0; i < rng.integer(1, 3); ++i) p *= X() - C(rng.rational(10, 4));
      for (int j = 0; j < rng.integer(1, 3); ++j) q *= X() * X() - C(rng.rational(10, 4)) * X() + C(rng.rational(10, 4));
      if (t % 2 == 0) {
        RatPoly common = X() - C(rng.rational(10, 4));
        p *= common;
        q *= common;
      }
      bool shared = poly_gcd(p, q).degree() > 0;
      CHECK(sylvester_resultant(p, q).is_zero() == shared);
      if (t % 2 == 0) CHECK(shared);
    }
  }

  TEST_CASE("odd-degree discriminant sign counts complex pairs") {
    Rng rng(30);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 60; ++t) {
      RatPoly p = C(rng.nonzero(9, 4));
      int deg = 0;
      for (int i = 0; i < rng.integer(1, 3); ++i, ++deg) p *= X() - C(rng.rational(30, 6));
      for (int j = 0; j < rng.integer(0, 2); ++j, deg += 2)
        p *= X() * X() - C(rng.rational(6, 2)) * X() + C(rng.positive(40, 3) + Rational(10));
      if (deg % 2 == 0 || deg < 3 || poly_gcd(p, p.derivative()).degree() > 0) continue;
      int real = count_real_roots(p, RealRange::whole_line()).count;
      int pairs = (p.degree() - real) / 2;
      CHECK((discriminant(p).sign() < 0) == (pairs % 2 == 1));
      ++checked;
    }
    CHECK(checked >= 30);
  }

  TEST_CASE("range parsing") {
    RealRange r = RealRange::parse("[3:inf)");
    CHECK(r.lo == Rational(3));
    CHECK(r.lo_closed);
    CHECK(!r.hi);
    CHECK(r.str() == "[3, inf)");
    CHECK(RealRange::parse(r.str()).str() == r.str());
    CHECK(RealRange::parse("(-6:3)").contains(Rational(0)));
    CHECK(!RealRange::parse("(-6:3)").contains(Rational(3)));
    CHECK_THROWS_AS(RealRange::parse("3"), ParseError);
    CHECK_THROWS_AS(RealRange::parse("[4:3]"), ParseError);
  }
}
