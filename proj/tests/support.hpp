#ifndef PINCHCERT_TESTS_SUPPORT_HPP
#define PINCHCERT_TESTS_SUPPORT_HPP

#include "pinchcert/rational.hpp"

#include <random>

namespace testing_support {

using pinch::Rational;

/// Deterministic source of small rationals.
class Rng {
 public:
  explicit Rng(unsigned long seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  /// num / den with |num| <= max_num, 1 <= den <= max_den.
  Rational rational(long max_num = 50, long max_den = 12) {
    return Rational(integer(-max_num, max_num)) / Rational(integer(1, max_den));
  }
  Rational nonzero(long max_num = 50, long max_den = 12) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }
  Rational positive(long max_num = 50, long max_den = 12) { return nonzero(max_num, max_den).abs(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace testing_support

#endif  // PINCHCERT_TESTS_SUPPORT_HPP
