#ifndef PINCHCERT_CERTIFY_HPP
#define PINCHCERT_CERTIFY_HPP

#include "pinchcert/certificate.hpp"
#include "pinchcert/reduction.hpp"

#include <functional>
#include <optional>
#include <string>

namespace pinch {

struct CertifyOptions {
  /// Enclosure grid 2^-bits: starting point and refinement cap.
  long start_bits = kDefaultBits;
  long max_bits = kMaxBits;
  /// Bisection depth cap for the subdivision route.
  int depth_cap = 60;
  /// Cutoff between subdivision and tail.
  Rational x0 = Rational(10000);
};

// ---------------------------------------------------------------------------
// Producers. None of them throws on a false claim: the returned certificate
// carries status falsified (with a witness) or inconclusive instead.

/// Sturm route on any real range ("sturm-ray" / "sturm-interval").
SignCertificate certify_poly_sign(const RatPoly& p, const RealRange& domain, Sign sign,
                                  const std::string& expr = "poly");
/// Sign of p on the closed ray [a, inf).
SignCertificate certify_poly_sign_on_ray(const RatPoly& p, const Rational& a, Sign sign,
                                         const std::string& expr = "poly");

/// Coefficient-bound route on [a, inf), a >= 0: rational lower (upper)
/// bound polynomials at grids 2^-32, 2^-64, ... down to `finest`.
SignCertificate certify_radical_poly_sign_on_ray(const RadPoly& p, const Rational& a, Sign sign,
                                                 const Rational& finest = Rational::pow2(-kMaxBits),
                                                 const std::string& expr = "radical-poly");

/// Subdivision of [a, x0] plus a tail record on [x0, inf).
SignCertificate certify_expr_sign_on_ray(const ScaledExpr& e, const Rational& a, Sign sign,
                                         const CertifyOptions& opt = {});

/// Scalar claim from an enclosure routine refined until the sign is decided.
SignCertificate certify_scalar(const std::string& expr, const std::map<std::string, Rational>& params, Sign sign,
                               const std::function<Interval(long)>& eval, const CertifyOptions& opt = {});
/// Scalar claim about an exact field element; the sign is decided exactly.
SignCertificate certify_scalar_exact(const std::string& expr, const std::map<std::string, Rational>& params,
                                     Sign sign, const RadicalNumber& value);

// ---------------------------------------------------------------------------
// Proof bundles

/// g1 < 0 on [6, inf) from the factorization through Z - W <= Q1.
SignCertificate verify_case1();
/// g2 < 0 on [6, inf) from monotonicity and a negative limit.
SignCertificate verify_case2();
/// The same bundles built on a caller-supplied Q1 (resp. Q2).
SignCertificate verify_case1_with(const RatPoly& q1);
SignCertificate verify_case2_with(const RatPoly& q2);

/// The minimal-hypersurface pinching claim for [n, n + n/k]: small
/// dimensions by the exact coefficients, x >= 6 by the case bundles at the
/// reference parameters and by subdivision otherwise.
SignCertificate verify_minimal_theorem(const MinimalParams& params, const CertifyOptions& opt = {});
/// The self-shrinker claim for [1, 1 + delta].
SignCertificate verify_shrinker_theorem(const ShrinkerParams& params, const CertifyOptions& opt = {});

/// Smallest k keeping the pinching interval inside S <= 16n/15, where the
/// constant C1 applies.
inline Rational minimal_k_floor() { return Rational(15); }

// ---------------------------------------------------------------------------
// Registries used to bind certificate claims to the proof's objects.

std::optional<RatPoly> registered_rat_poly(const std::string& id);
std::optional<RadPoly> registered_rad_poly(const std::string& id);
/// Enclosure of a registered scalar at grid 2^-bits.
std::optional<Interval> registered_scalar(const std::string& id, const std::map<std::string, Rational>& params,
                                          long bits);

// ---------------------------------------------------------------------------
// Checker

/// Independent replay of a certificate. Shallow mode re-runs only cheap
/// checks (chain recurrence, sign variations, coverage, enclosure signs,
/// exact bound comparisons). Deep mode additionally re-evaluates recorded
/// enclosures of registered expressions. Throws ParseError for malformed
/// documents.
CertStatus check_certificate(const SignCertificate& cert, bool deep = false);
CertStatus check_certificate_text(const std::string& text, bool deep = false);

}  // namespace pinch

#endif  // PINCHCERT_CERTIFY_HPP
