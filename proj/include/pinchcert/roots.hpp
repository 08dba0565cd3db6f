#ifndef PINCHCERT_ROOTS_HPP
#define PINCHCERT_ROOTS_HPP

#include "pinchcert/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pinch {

// ---------------------------------------------------------------------------
// Resultants and discriminants

/// (deg p + deg q)-square Sylvester matrix, rows of p first.
template <class T>
std::vector<std::vector<T>> sylvester_matrix(const UniPoly<T>& p, const UniPoly<T>& q);

/// Determinant of the Sylvester matrix. The Rational overload clears
/// denominators row by row and runs fraction-free Bareiss elimination over
/// the integers. Throws DomainError for a zero polynomial.
Rational sylvester_resultant(const RatPoly& p, const RatPoly& q);
RadicalNumber sylvester_resultant(const RadPoly& p, const RadPoly& q);

/// (-1)^(n(n-1)/2) Res(p, p') / lc(p); requires deg p >= 2.
Rational discriminant(const RatPoly& p);
RadicalNumber discriminant(const RadPoly& p);

// ---------------------------------------------------------------------------
// Sturm sequences and real roots

struct SturmChain {
  std::vector<RatPoly> polys;
  /// Set when the input had repeated roots and the chain was built on
  /// p / gcd(p, p').
  bool squarefree_reduced = false;
};

/// p, p', then -rem(p_{i-1}, p_i) scaled by positive constants to coprime
/// integer coefficients, until the remainder vanishes.
SturmChain sturm_chain(const RatPoly& p);
/// Chain of p itself, without squarefree reduction.
std::vector<RatPoly> sturm_sequence(const RatPoly& p);

/// Sign changes of the sequence at x, zeros skipped.
int sign_variations(const std::vector<RatPoly>& chain, const Rational& x);
/// Sign changes at +inf (positive = true) or -inf.
int sign_variations_at_infinity(const std::vector<RatPoly>& chain, bool positive);

/// Subset of the real line: each end is either finite (open or closed) or
/// infinite.
struct RealRange {
  std::optional<Rational> lo, hi;
  bool lo_closed = false, hi_closed = false;

  static RealRange open(Rational a, Rational b) { return {std::move(a), std::move(b), false, false}; }
  static RealRange closed(Rational a, Rational b) { return {std::move(a), std::move(b), true, true}; }
  static RealRange ray_from(Rational a, bool closed = true) { return {std::move(a), std::nullopt, closed, false}; }
  static RealRange whole_line() { return {}; }
  /// "a:b" with "inf"/"-inf" ends, brackets optional: "[3:inf)", "(-6:3)".
  static RealRange parse(std::string_view text);

  bool contains(const Rational& x) const;
  std::string str() const;
};

struct RootCount {
  int count = 0;
  RealRange range;
};

/// Number of distinct real roots inside the range. Endpoint roots are
/// resolved exactly (they are counted iff the end is closed).
RootCount count_real_roots(const RatPoly& p, const RealRange& range);

/// Either an exact rational root (lo == hi) or an open interval (lo, hi)
/// with non-root endpoints holding exactly one root.
struct IsolatingInterval {
  Rational lo, hi;
  bool exact() const { return lo == hi; }
};

/// Disjoint isolating intervals for every distinct real root, ascending.
std::vector<IsolatingInterval> isolate_real_roots(const RatPoly& p);
/// Bisects an isolating interval of p until it is no wider than `width`.
IsolatingInterval refine_root(const RatPoly& p, IsolatingInterval iv, const Rational& width);

/// 1 + max |c_i / c_lead|; all real roots lie in (-B, B).
Rational cauchy_root_bound(const RatPoly& p);

// ---------------------------------------------------------------------------
// Rational sandwiches of radical-coefficient polynomials on [0, inf)

enum class BoundDirection { lower, upper };

/// Each coefficient replaced by a rational bound within `width`; for every
/// x >= 0, lower(x) <= p(x) <= upper(x).
RatPoly coeff_bound_poly(const RadPoly& p, BoundDirection dir, const Rational& width);

/// Squarefree factorization p = c * prod f_i^i collapsed into the
/// odd-multiplicity part and the square root of the even remainder:
/// p = scale * core * square^2 with scale > 0.
struct ParityFactorization {
  Rational scale;
  RatPoly core, square;
};
ParityFactorization parity_factorization(const RatPoly& p);

}  // namespace pinch

#endif  // PINCHCERT_ROOTS_HPP
