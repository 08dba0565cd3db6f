#include "pinchcert/roots.hpp"

#include <functional>

namespace pinch {

template <class T>
std::vector<std::vector<T>> sylvester_matrix(const UniPoly<T>& p, const UniPoly<T>& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("resultant of the zero polynomial");
  const int n = p.degree(), m = q.degree(), N = n + m;
  std::vector<std::vector<T>> M(static_cast<size_t>(N), std::vector<T>(static_cast<size_t>(N), T(0)));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) M[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = p.coeff(n - i);
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) M[static_cast<size_t>(m + r)][static_cast<size_t>(r + i)] = q.coeff(m - i);
  return M;
}

template std::vector<std::vector<Rational>> sylvester_matrix(const RatPoly&, const RatPoly&);
template std::vector<std::vector<RadicalNumber>> sylvester_matrix(const RadPoly&, const RadPoly&);

namespace {

mpz_class denominator_lcm(const RatPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  return l;
}

mpz_class bareiss_det(std::vector<std::vector<mpz_class>> M) {
  const size_t N = M.size();
  if (N == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (size_t k = 0; k + 1 < N; ++k) {
    if (M[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < N && M[piv][k] == 0) ++piv;
      if (piv == N) return 0;
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < N; ++i) {
      for (size_t j = k + 1; j < N; ++j) {
        mpz_class v = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        mpz_divexact(M[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return sign * M[N - 1][N - 1];
}

template <class T>
T pow_value(T base, long e) {
  T r(1);
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Rational sylvester_resultant(const RatPoly& p, const RatPoly& q) {
  auto M = sylvester_matrix(p, q);
  const int n = p.degree(), m = q.degree();
  mpz_class dp = denominator_lcm(p), dq = denominator_lcm(q);
  std::vector<std::vector<mpz_class>> Z(M.size());
  for (size_t r = 0; r < M.size(); ++r) {
    const mpz_class& scale = static_cast<int>(r) < m ? dp : dq;
    for (const auto& v : M[r]) Z[r].push_back(v.num() * (scale / v.den()));
  }
  mpz_class det = bareiss_det(std::move(Z));
  mpz_class sp, sq;
  mpz_pow_ui(sp.get_mpz_t(), dp.get_mpz_t(), static_cast<unsigned long>(m));
  mpz_pow_ui(sq.get_mpz_t(), dq.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(det, sp * sq);
}

RadicalNumber sylvester_resultant(const RadPoly& p, const RadPoly& q) {
  auto M = sylvester_matrix(p, q);
  const size_t N = M.size();
  RadicalNumber det(1);
  for (size_t k = 0; k < N; ++k) {
    size_t piv = k;
    while (piv < N && M[piv][k].is_zero()) ++piv;
    if (piv == N) return RadicalNumber(0);
    if (piv != k) {
      std::swap(M[k], M[piv]);
      det = -det;
    }
    det *= M[k][k];
    RadicalNumber inv = M[k][k].inverse();
    for (size_t i = k + 1; i < N; ++i) {
      if (M[i][k].is_zero()) continue;
      RadicalNumber f = M[i][k] * inv;
      for (size_t j = k; j < N; ++j) M[i][j] -= f * M[k][j];
    }
  }
  return det;
}

namespace {

template <class T>
T discriminant_impl(const UniPoly<T>& p) {
  const long n = p.degree();
  if (n < 2) throw DomainError("discriminant needs degree >= 2");
  T r = sylvester_resultant(p, p.derivative()) / p.lead();
  return (n * (n - 1) / 2) % 2 == 1 ? -r : r;
}

}  // namespace

Rational discriminant(const RatPoly& p) { return discriminant_impl(p); }
RadicalNumber discriminant(const RadPoly& p) { return discriminant_impl(p); }

// ---------------------------------------------------------------------------

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  std::vector<RatPoly> chain{p};
  if (p.is_constant()) return chain;
  chain.push_back(p.derivative());
  for (;;) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(primitive_part(-r));
  }
  return chain;
}

namespace {

RatPoly exact_quotient(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

RatPoly squarefree_part(const RatPoly& p, bool* reduced = nullptr) {
  if (p.is_constant()) return p;
  RatPoly g = poly_gcd(p, p.derivative());
  if (reduced) *reduced = g.degree() > 0;
  return g.degree() > 0 ? exact_quotient(p, g) : p;
}

}  // namespace

SturmChain sturm_chain(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  SturmChain out;
  RatPoly s = squarefree_part(p, &out.squarefree_reduced);
  out.polys = sturm_sequence(s);
  return out;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& q : chain) {
    int s = q(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int sign_variations_at_infinity(const std::vector<RatPoly>& chain, bool positive) {
  int count = 0, last = 0;
  for (const auto& q : chain) {
    if (q.is_zero()) continue;
    int s = q.lead().sign();
    if (!positive && q.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

bool RealRange::contains(const Rational& x) const {
  if (lo && (lo_closed ? x < *lo : x <= *lo)) return false;
  if (hi && (hi_closed ? x > *hi : x >= *hi)) return false;
  return true;
}

std::string RealRange::str() const {
  std::string s = lo ? (lo_closed ? "[" : "(") + lo->str() : std::string("(-inf");
  s += ", ";
  s += hi ? hi->str() + (hi_closed ? "]" : ")") : std::string("inf)");
  return s;
}

RealRange RealRange::parse(std::string_view text) {
  std::string_view s = text;
  RealRange r;
  bool lo_closed = false, hi_closed = false;
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
    lo_closed = s.front() == '[';
    s.remove_prefix(1);
  }
  if (!s.empty() && (s.back() == ']' || s.back() == ')')) {
    hi_closed = s.back() == ']';
    s.remove_suffix(1);
  }
  auto colon = s.find(':');
  if (colon == std::string_view::npos) colon = s.find(',');
  if (colon == std::string_view::npos) throw ParseError("range must look like a:b, got '" + std::string(text) + "'");
  auto a = s.substr(0, colon), b = s.substr(colon + 1);
  while (!b.empty() && b.front() == ' ') b.remove_prefix(1);
  if (a != "-inf") {
    r.lo = Rational::parse(a);
    r.lo_closed = lo_closed;
  }
  if (b != "inf" && b != "+inf") {
    r.hi = Rational::parse(b);
    r.hi_closed = hi_closed;
  }
  if (r.lo && r.hi && *r.hi < *r.lo) throw ParseError("empty range '" + std::string(text) + "'");
  return r;
}

RootCount count_real_roots(const RatPoly& p, const RealRange& range) {
  if (p.is_zero()) throw DomainError("root count of the zero polynomial");
  RootCount out{0, range};
  if (p.is_constant()) return out;
  RatPoly s = squarefree_part(p);
  auto chain = sturm_sequence(s);
  if (range.lo && range.hi && *range.lo == *range.hi) {
    out.count = (range.lo_closed && range.hi_closed && s(*range.lo).is_zero()) ? 1 : 0;
    return out;
  }
  // Sturm's theorem with zeros skipped counts the roots in (lo, hi].
  int vlo = range.lo ? sign_variations(chain, *range.lo) : sign_variations_at_infinity(chain, false);
  int vhi = range.hi ? sign_variations(chain, *range.hi) : sign_variations_at_infinity(chain, true);
  int c = vlo - vhi;
  if (range.hi && !range.hi_closed && s(*range.hi).is_zero()) --c;
  if (range.lo && range.lo_closed && s(*range.lo).is_zero()) ++c;
  out.count = c;
  return out;
}

Rational cauchy_root_bound(const RatPoly& p) {
  if (p.is_constant()) throw DomainError("root bound of a constant polynomial");
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = max(m, (p.coeff(i) / p.lead()).abs());
  return Rational(1) + m;
}

std::vector<IsolatingInterval> isolate_real_roots(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
  std::vector<IsolatingInterval> out;
  if (p.is_constant()) return out;
  RatPoly s = squarefree_part(p);
  auto chain = sturm_sequence(s);
  auto V = [&](const Rational& x) { return sign_variations(chain, x); };
  Rational B = cauchy_root_bound(s);

  // Invariant: l, h are not roots and (l, h) holds `count` roots.
  std::function<void(const Rational&, const Rational&, int, int, int)> split =
      [&](const Rational& l, const Rational& h, int vl, int vh, int count) {
        if (count == 0) return;
        if (count == 1) {
          out.push_back({l, h});
          return;
        }
        Rational m = (l + h) / Rational(2);
        if (!s(m).is_zero()) {
          int vm = V(m);
          split(l, m, vl, vm, vl - vm);
          split(m, h, vm, vh, vm - vh);
          return;
        }
        Rational w = (h - l) / Rational(4);
        Rational ml, mr;
        int vml = 0, vmr = 0;
        for (;;) {
          ml = m - w;
          mr = m + w;
          if (!s(ml).is_zero() && !s(mr).is_zero()) {
            vml = V(ml);
            vmr = V(mr);
            if (vml - vmr == 1) break;
          }
          w /= Rational(2);
        }
        split(l, ml, vl, vml, vl - vml);
        out.push_back({m, m});
        split(mr, h, vmr, vh, vmr - vh);
      };
  int vl = V(-B), vh = V(B);
  split(-B, B, vl, vh, vl - vh);
  return out;
}

namespace {

// Rational with the smallest denominator in the open interval (lo, hi), via
// continued fractions; no upper bound when hi is empty.
Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi) {
  Rational fl(lo.floor(), mpz_class(1));
  Rational next = fl + Rational(1);
  if (!hi || next < *hi) return next;
  if (lo == fl) return fl + simplest_between(Rational(1) / (*hi - fl), std::nullopt).inverse();
  std::optional<Rational> up = Rational(1) / (lo - fl);
  return fl + simplest_between(Rational(1) / (*hi - fl), up).inverse();
}

}  // namespace

IsolatingInterval refine_root(const RatPoly& p, IsolatingInterval iv, const Rational& width) {
  if (iv.exact()) return iv;
  RatPoly s = squarefree_part(p);
  if (Rational q = simplest_between(iv.lo, iv.hi); s(q).is_zero()) return {q, q};
  int sl = s(iv.lo).sign();
  while (iv.hi - iv.lo > width) {
    Rational m = (iv.lo + iv.hi) / Rational(2);
    int sm = s(m).sign();
    if (sm == 0) return {m, m};
    if (sm == sl)
      iv.lo = m;
    else
      iv.hi = m;
  }
  if (Rational q = simplest_between(iv.lo, iv.hi); s(q).is_zero()) return {q, q};
  return iv;
}

RatPoly coeff_bound_poly(const RadPoly& p, BoundDirection dir, const Rational& width) {
  if (width.sign() <= 0) throw DomainError("bound width must be positive");
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (c.is_rational()) {
      out.push_back(c.rational());
      continue;
    }
    Interval e = rad_enclose(c, width);
    out.push_back(dir == BoundDirection::lower ? e.lo() : e.hi());
  }
  return RatPoly(std::move(out));
}

ParityFactorization parity_factorization(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("factorization of the zero polynomial");
  Rational lc = p.lead();
  RatPoly f = p * lc.inverse();
  RatPoly core = RatPoly::constant(Rational(1)), square = RatPoly::constant(Rational(1));
  if (!f.is_constant()) {
    // Yun's algorithm: f = prod a_i^i with a_i squarefree and coprime.
    RatPoly df = f.derivative();
    RatPoly a0 = poly_gcd(f, df);
    RatPoly b = exact_quotient(f, a0);
    RatPoly c = exact_quotient(df, a0);
    RatPoly d = c - b.derivative();
    for (unsigned i = 1; !b.is_constant(); ++i) {
      RatPoly a = poly_gcd(b, d);
      b = exact_quotient(b, a);
      c = exact_quotient(d, a);
      d = c - b.derivative();
      if (i % 2 == 1) core *= a;
      if (i / 2 > 0) square *= a.pow(i / 2);
    }
  }
  if (lc.sign() < 0) {
    lc = -lc;
    core = -core;
  }
  return {lc, core, square};
}

}  // namespace pinch
