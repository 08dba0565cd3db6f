#ifndef PINCHCERT_REDUCTION_HPP
#define PINCHCERT_REDUCTION_HPP

#include "pinchcert/interval.hpp"
#include "pinchcert/poly.hpp"
#include "pinchcert/radical.hpp"

#include <functional>
#include <map>
#include <string>

namespace pinch {

/// Default working precision (grid 2^-64) and refinement cap (2^-512).
inline constexpr long kDefaultBits = 64;
inline constexpr long kMaxBits = 512;

// ---------------------------------------------------------------------------
// Parameters

/// Proof parameters for minimal hypersurfaces in the sphere. The pinching
/// interval for S = |A|^2 is [n, n + n/k], so delta(n) = n/k.
struct MinimalParams {
  Rational theta, theta1, k;

  void validate() const;
  Rational delta(const Rational& n) const { return n / k; }
  std::map<std::string, Rational> as_map() const;
};

/// Proof parameters for self-shrinkers; pinching interval [1, 1 + delta].
struct ShrinkerParams {
  Rational delta, theta, theta1;

  void validate() const;
  std::map<std::string, Rational> as_map() const;
};

/// theta = 0.866, theta1 = 0.83, k = 22.
MinimalParams paper_minimal_params();
/// delta = 1/21, theta = 0.836, theta1 = 0.81.
ShrinkerParams paper_shrinker_params();

// ---------------------------------------------------------------------------
// Constants

/// (sqrt17 + 1) / 2, exact.
RadicalNumber sigma();
/// eta_4 = 2.16, eta_5 = 2.23; DomainError for other n.
Rational eta(int n);

Interval C1_of(const Rational& n, const Rational& width);
Interval C2_enclosure(const Rational& width);
Interval C3_of(const Rational& n, const Rational& theta, const Rational& width);
Interval C4_of(const Rational& theta, const Rational& width);

Interval C1_bits(const Rational& n, long bits);
Interval C2_bits(long bits);
Interval C3_bits(const Rational& n, const Rational& theta, long bits);
Interval C4_bits(const Rational& theta, long bits);

// ---------------------------------------------------------------------------
// Polynomials of the two case analyses

RatPoly build_Q1();
RatPoly build_Q2();
/// Expanded products as printed; coefficients in Q(sqrt6, sqrt17).
RadPoly build_Z();
RadPoly build_W();
/// Numerator of the printed derivative factorization (degree 5).
RadPoly build_Rx();
/// Derivative numerator of the coefficient functional g2 as obtained from
/// the general inequality: the printed numerator with (sqrt17 - 1)
/// replaced by (sqrt17 - 3). See README, "Case II".
RadPoly build_g2_slope_numerator();

/// 44 (x + 4) (0.433 x - 2.3505 x / 22 - 0.567) + 3x, the denominator-cleared
/// Case I prefactor.
RatPoly case1_prefactor_poly();
/// (sqrt6 - 1)(x - 2) + 1
RadPoly shifted_sqrt6_factor();
/// (11 sqrt17 + 30.18) x - 66
RadPoly case2_linear_factor();
/// (3 - sqrt6)(x - 2) - 4/13
RadPoly case2_u1_numerator();

/// Direct evaluation of the printed factor forms (no expansion).
RadicalNumber Z_factored(const RadicalNumber& x);
RadicalNumber W_factored(const RadicalNumber& x);
RadicalNumber Rx_factored(const RadicalNumber& x);

// ---------------------------------------------------------------------------
// Coefficient functionals

/// Coefficients of the integrals of |grad A|^2 and (S - n)|grad A|^2 (resp.
/// (|A|^2 - 1)|grad A|^2) in the final integral inequality.
struct CoefficientPair {
  Interval coeff_gradA;
  Interval coeff_excess;
};

/// Exact small-dimension coefficient for n in {2, 3, 4, 5} at S.
RadicalNumber smalln_coefficient_exact(int n, const Rational& k, const Rational& S);
Interval smalln_coefficient(int n, const Rational& k, const Rational& S);

/// Printed g1 / g2 (x > 2). g2 uses the form consistent with the general
/// inequality, whose limit is about -0.044.
Interval g1_point(const Rational& x, const Rational& width);
Interval g2_point(const Rational& x, const Rational& width);
Interval g2_limit(const Rational& width);

/// Literal evaluation of the general coefficients at dimension n.
CoefficientPair minimal_coeff_pair(const MinimalParams& params, const Rational& n, const Rational& width);
CoefficientPair minimal_coeff_pair_bits(const MinimalParams& params, const Rational& n, long bits);

/// Literal evaluation of the general self-shrinker coefficients (delta > 0).
CoefficientPair shrinker_coeff_pair(const ShrinkerParams& params, const Rational& width);
CoefficientPair shrinker_coeff_pair_bits(const ShrinkerParams& params, long bits);
/// First coefficient only, in closed form; also defined at delta = 0.
Interval shrinker_gradA_bits(const ShrinkerParams& params, long bits);
/// The two coefficients exactly as printed for theta = 0.836, theta1 = 0.81.
CoefficientPair shrinker_coeff_pair_printed(const Rational& delta, long bits);

// ---------------------------------------------------------------------------
// Expressions on rays, in the variable r = 1/x

/// f(x) = x^power * F(1/x) for x > 0. Evaluating F over an interval of r
/// covers a whole x-interval at once, and r in [0, 1/X0] covers the tail
/// [X0, inf).
struct ScaledExpr {
  std::string id;
  std::map<std::string, Rational> params;
  int power = 0;
  std::function<Interval(const Interval& r, long bits)> scaled;
};

/// Enclosure of f over the x-interval (x.lo > 0).
Interval eval_on(const ScaledExpr& e, const Interval& x, long bits);

ScaledExpr g1_expr();
ScaledExpr g2_expr();
/// First general coefficient a(x).
ScaledExpr minimal_gradA_expr(const MinimalParams& p);
/// Second general coefficient b(x).
ScaledExpr minimal_excess_expr(const MinimalParams& p);
/// a(x) + delta(x) b(x): the integrand coefficient at the top of the pinching
/// interval.
ScaledExpr minimal_endpoint_expr(const MinimalParams& p);
ScaledExpr poly_expr(const std::string& id, const RatPoly& p);
ScaledExpr constant_expr(const Rational& c);

/// Rebuilds a registered expression from its id and parameters; throws
/// DomainError for unknown ids.
ScaledExpr expr_by_id(const std::string& id, const std::map<std::string, Rational>& params);

}  // namespace pinch

#endif  // PINCHCERT_REDUCTION_HPP
