#include "pinchcert/poly.hpp"

#include <sstream>

namespace pinch {

RadPoly to_radical(const RatPoly& p) {
  std::vector<RadicalNumber> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RadPoly(std::move(c));
}

RatPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return p;
  mpz_class l = 1, g = 0;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(mpq_class(v / g));
  return RatPoly(std::move(out));
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = primitive_part(r);
  }
  if (a.is_zero()) return a;
  return a * a.lead().inverse();
}

Interval eval_interval(const RatPoly& p, const Interval& x) {
  Interval acc(0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + Interval(*it);
  return acc;
}

namespace {

template <class T>
std::string poly_string(const UniPoly<T>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const T& c = p.coeffs()[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (i > 0) os << "*x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const RatPoly& p) { return poly_string(p); }
std::string to_string(const RadPoly& p) { return poly_string(p); }

}  // namespace pinch
