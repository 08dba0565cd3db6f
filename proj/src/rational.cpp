#include "pinchcert/rational.hpp"

#include <cctype>
#include <ostream>

namespace pinch {

namespace {

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

mpz_class pow2z(unsigned long e) {
  mpz_class r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

long parse_exponent(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s) || s.size() > 6)
    throw ParseError("bad exponent in number '" + std::string(whole) + "'");
  long e = std::stol(std::string(s));
  return neg ? -e : e;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty number");

  if (auto caret = s.find('^'); caret != std::string_view::npos) {
    if (s.substr(0, caret) != "2") throw ParseError("only powers of two are supported: '" + std::string(text) + "'");
    return pow2(parse_exponent(s.substr(caret + 1), text));
  }

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational p = parse(s.substr(0, slash));
    Rational q = parse(s.substr(slash + 1));
    if (q.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return p / q;
  }

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exp10 = parse_exponent(s.substr(e + 1), text);
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw ParseError("malformed number '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw ParseError("malformed number '" + std::string(text) + "'");
    digits = std::string(s);
  }
  mpz_class n(digits.empty() ? "0" : digits, 10);
  if (neg) n = -n;
  if (exp10 >= 0) return Rational(mpq_class(n * pow10(static_cast<unsigned long>(exp10))));
  return Rational(n, pow10(static_cast<unsigned long>(-exp10)));
}

Rational Rational::pow2(long e) {
  if (e >= 0) return Rational(mpq_class(pow2z(static_cast<unsigned long>(e))));
  return Rational(mpz_class(1), pow2z(static_cast<unsigned long>(-e)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return r;
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

long Rational::ilog2() const {
  if (is_zero()) throw DomainError("log2 of zero");
  mpz_class n = ::abs(num());
  long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(den().get_mpz_t(), 2));
  // 2^e is within a factor 2 of |x|; settle the boundary exactly.
  Rational a = abs();
  while (Rational::pow2(e) > a) --e;
  while (Rational::pow2(e + 1) <= a) ++e;
  return e;
}

std::string Rational::str() const { return is_integer() ? num().get_str() : num().get_str() + "/" + den().get_str(); }

std::string Rational::decimal(int digits) const {
  mpz_class scale = pow10(static_cast<unsigned long>(digits));
  mpz_class n = ::abs(num()) * scale * 2 + den();
  mpz_class d = den() * 2;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  std::string s = q.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<size_t>(digits)) s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<size_t>(digits), ".");
  }
  if (sign() < 0 && q != 0) s.insert(0, "-");
  return s;
}

Rational round_down(const Rational& x, long bits) {
  mpz_class scaled = x.num();
  if (bits >= 0)
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(bits));
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.den().get_mpz_t());
  return Rational(q, pow2z(static_cast<unsigned long>(bits)));
}

Rational round_up(const Rational& x, long bits) {
  mpz_class scaled = x.num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(bits));
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.den().get_mpz_t());
  return Rational(q, pow2z(static_cast<unsigned long>(bits)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace pinch
