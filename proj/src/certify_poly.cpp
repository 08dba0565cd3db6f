#include "pinchcert/certify.hpp"

namespace pinch {

namespace {

Rational interior_point(const RealRange& d) {
  if (d.lo && d.hi) return (*d.lo + *d.hi) / Rational(2);
  if (d.lo) return *d.lo + Rational(1);
  if (d.hi) return *d.hi - Rational(1);
  return Rational(0);
}

int variations_lo(const std::vector<RatPoly>& chain, const RealRange& d) {
  return d.lo ? sign_variations(chain, *d.lo) : sign_variations_at_infinity(chain, false);
}

int variations_hi(const std::vector<RatPoly>& chain, const RealRange& d) {
  return d.hi ? sign_variations(chain, *d.hi) : sign_variations_at_infinity(chain, true);
}

bool point_violates(const RatPoly& p, const Rational& x, Sign s) { return !sign_satisfies(s, p(x).sign()); }

Json point_witness(const RatPoly& p, const Rational& x) { return Json{{"x", x.str()}, {"value", p(x).str()}}; }

// Tries the range ends, the interior sample, and points around each real
// root of p for a rational point where the claim fails.
std::optional<Json> find_poly_witness(const RatPoly& p, const RealRange& d, Sign s) {
  std::vector<Rational> cand;
  if (d.lo && d.lo_closed) cand.push_back(*d.lo);
  if (d.hi && d.hi_closed) cand.push_back(*d.hi);
  cand.push_back(interior_point(d));
  auto roots = isolate_real_roots(p);
  for (auto& iv : roots) {
    // Pull the isolating interval inside the range when it straddles an end.
    for (int i = 0; i < 400 && !iv.exact(); ++i) {
      bool lo_in = d.contains(iv.lo), hi_in = d.contains(iv.hi);
      if (lo_in && hi_in) break;
      bool outside = (d.hi && iv.lo >= *d.hi) || (d.lo && iv.hi <= *d.lo);
      if (outside) break;
      iv = refine_root(p, iv, (iv.hi - iv.lo) / Rational(2));
    }
    cand.push_back(iv.lo);
    cand.push_back(iv.hi);
  }
  for (size_t i = 0; i + 1 < roots.size(); ++i) cand.push_back((roots[i].hi + roots[i + 1].lo) / Rational(2));
  for (const auto& x : cand)
    if (d.contains(x) && point_violates(p, x, s)) return point_witness(p, x);
  if (is_strict(s)) {
    for (const auto& iv : roots)
      if (!iv.exact() && d.contains(iv.lo) && d.contains(iv.hi))
        return Json{{"root_interval", to_json(Interval(iv.lo, iv.hi))}};
  }
  return std::nullopt;
}

bool has_repeated_roots(const RatPoly& p) { return !p.is_constant() && poly_gcd(p, p.derivative()).degree() > 0; }

}  // namespace

SignCertificate certify_poly_sign(const RatPoly& p, const RealRange& domain, Sign sign, const std::string& expr) {
  if (p.is_zero()) throw DomainError("sign certificate for the zero polynomial");
  Json doc = make_cert_doc(domain.hi ? "sturm-interval" : "sturm-ray", expr, {}, domain, sign);
  CertStatus st;
  st.precision_used = Rational(0);

  ParityFactorization pf{Rational(1), p, RatPoly::constant(Rational(1))};
  // Strict claims with repeated roots: p = core * cofactor with core the
  // squarefree part; the cofactor's roots are among the core's.
  std::optional<RatPoly> cofactor;
  if (!is_strict(sign)) {
    pf = parity_factorization(p);
  } else if (has_repeated_roots(p)) {
    cofactor = poly_gcd(p, p.derivative());
    pf.core = divmod(p, *cofactor).first;
  }
  const RatPoly& sampled = cofactor ? p : pf.core;
  std::vector<RatPoly> chain = sturm_sequence(pf.core);
  int vlo = variations_lo(chain, domain), vhi = variations_hi(chain, domain);
  int interior = vlo - vhi - ((domain.hi && pf.core(*domain.hi).is_zero()) ? 1 : 0);

  Json samples = Json::array();
  std::vector<Rational> pts;
  if (is_strict(sign)) {
    if (domain.lo && domain.lo_closed) pts.push_back(*domain.lo);
    if (domain.hi && domain.hi_closed && !(domain.lo && *domain.lo == *domain.hi)) pts.push_back(*domain.hi);
  }
  pts.push_back(interior_point(domain));
  bool samples_ok = true;
  Sign core_sign = (sign == Sign::negative || sign == Sign::nonpositive) ? Sign::negative : Sign::positive;
  for (const auto& x : pts) {
    Rational v = sampled(x);
    samples.push_back({{"x", x.str()}, {"value", v.str()}, {"sign", v.sign()}});
    if (!sign_satisfies(core_sign, v.sign())) samples_ok = false;
  }

  Json chain_json = Json::array();
  for (const auto& q : chain) chain_json.push_back(to_json(q));
  doc["evidence"] = {{"poly", to_json(p)},
                     {"scale", pf.scale.str()},
                     {"core", to_json(pf.core)},
                     {"square", to_json(pf.square)},
                     {"chain", chain_json},
                     {"variations", {{"lo", vlo}, {"hi", vhi}}},
                     {"interior_roots", interior},
                     {"samples", samples}};
  if (cofactor) doc["evidence"]["cofactor"] = to_json(*cofactor);

  if (interior == 0 && samples_ok) {
    st.status = Verdict::verified;
    st.detail = "no roots of the core inside " + domain.str() + "; sign fixed by samples";
  } else {
    st.witness = find_poly_witness(p, domain, sign);
    st.status = st.witness ? Verdict::falsified : Verdict::inconclusive;
    st.detail = st.witness ? "counterexample found"
                           : std::to_string(interior) + " root(s) inside the range but no sign violation located";
  }
  set_status(doc, st);
  return SignCertificate(std::move(doc));
}

SignCertificate certify_poly_sign_on_ray(const RatPoly& p, const Rational& a, Sign sign, const std::string& expr) {
  return certify_poly_sign(p, RealRange::ray_from(a, true), sign, expr);
}

SignCertificate certify_radical_poly_sign_on_ray(const RadPoly& p, const Rational& a, Sign sign,
                                                 const Rational& finest, const std::string& expr) {
  if (a.sign() < 0) throw DomainError("coefficient bounds need a >= 0, got " + a.str());
  if (p.is_zero()) throw DomainError("sign certificate for the zero polynomial");
  RealRange dom = RealRange::ray_from(a, true);
  BoundDirection dir =
      (sign == Sign::positive || sign == Sign::nonnegative) ? BoundDirection::lower : BoundDirection::upper;
  Json doc = make_cert_doc("radical-bound", expr, {}, dom, sign);
  CertStatus st;
  std::optional<Json> sub_witness;
  for (long bits = std::min<long>(32, bits_for_width(finest));; bits *= 2) {
    Rational width = Rational::pow2(-bits);
    if (width < finest) break;
    RatPoly bound = coeff_bound_poly(p, dir, width);
    SignCertificate sub = certify_poly_sign(bound, dom, sign, "bound:" + expr);
    st.precision_used = width;
    doc["evidence"] = {{"poly", to_json(p)},
                       {"direction", dir == BoundDirection::lower ? "lower" : "upper"},
                       {"width", width.str()},
                       {"bound_poly", to_json(bound)},
                       {"bound_cert", sub.json()}};
    CertStatus sst = sub.status();
    if (sst.verified()) {
      st.status = Verdict::verified;
      st.detail = "bound polynomial certified at width 2^-" + std::to_string(bits);
      set_status(doc, st);
      return SignCertificate(std::move(doc));
    }
    if (sst.witness) sub_witness = sst.witness;
    bool exact_bound = true;
    for (const auto& c : p.coeffs()) exact_bound = exact_bound && c.is_rational();
    if (exact_bound) break;
  }
  // Does the failure transfer to p itself?
  std::vector<Rational> pts{a, a + Rational(1)};
  if (sub_witness && sub_witness->contains("x")) pts.insert(pts.begin(), rational_from((*sub_witness)["x"]));
  for (const auto& x : pts) {
    RadicalNumber v = p(RadicalNumber(x));
    if (!sign_satisfies(sign, rad_sign(v))) {
      st.status = Verdict::falsified;
      st.witness = Json{{"x", x.str()}, {"value", to_json(v)}};
      st.detail = "counterexample found";
      set_status(doc, st);
      return SignCertificate(std::move(doc));
    }
  }
  st.status = Verdict::inconclusive;
  st.detail = "bound polynomial not certified down to width " + st.precision_used.str();
  set_status(doc, st);
  return SignCertificate(std::move(doc));
}

}  // namespace pinch
