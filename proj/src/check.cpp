#include "pinchcert/certify.hpp"

namespace pinch {

namespace {

struct Reject {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Reject{why};
}

const Json& at(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("certificate field '") + key + "' missing");
  return j.at(key);
}

long int_at(const Json& j, const char* key) {
  const Json& v = at(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("certificate field '") + key + "' must be an integer");
  return v.get<long>();
}

long bits_at(const Json& j, const char* key) {
  long b = int_at(j, key);
  if (b < 1 || b > 8 * kMaxBits) throw ParseError(std::string("certificate field '") + key + "' out of range");
  return b;
}

CertStatus result(Verdict v, std::string detail, Rational precision = Rational(0)) {
  CertStatus st;
  st.status = v;
  st.detail = std::move(detail);
  st.precision_used = std::move(precision);
  return st;
}

struct Ctx {
  bool deep;
};

CertStatus check_any(const SignCertificate& c, const Ctx& ctx);

// ---------------------------------------------------------------------------
// Sturm

bool chain_recurrence_ok(const std::vector<RatPoly>& chain, const RatPoly& core) {
  if (chain.empty() || !(chain[0] == core)) return false;
  if (core.is_constant()) return chain.size() == 1;
  if (chain.size() < 2 || !(chain[1] == core.derivative())) return false;
  for (size_t i = 2; i < chain.size(); ++i) {
    RatPoly r = -divmod(chain[i - 2], chain[i - 1]).second;
    if (r.is_zero()) return false;
    if (!(primitive_part(r) == chain[i])) return false;
  }
  return divmod(chain[chain.size() - 2], chain.back()).second.is_zero();
}

void check_poly_witness(const Json& w, const RatPoly& p, const RealRange& d, Sign s) {
  if (w.contains("x")) {
    Rational x = rational_from(w["x"]);
    require(d.contains(x), "witness outside the claimed range");
    require(!sign_satisfies(s, p(x).sign()), "witness value satisfies the claim");
    return;
  }
  if (w.contains("root_interval")) {
    Interval iv = interval_from(w["root_interval"]);
    require(is_strict(s), "root witness for a non-strict claim");
    require(d.contains(iv.lo()) && d.contains(iv.hi()), "root witness outside the claimed range");
    require(count_real_roots(p, RealRange::open(iv.lo(), iv.hi())).count > 0, "no root inside the root witness");
    return;
  }
  throw ParseError("witness has neither x nor root_interval");
}

CertStatus check_sturm(const SignCertificate& c) {
  const Json& doc = c.json();
  const Json& ev = at(doc, "evidence");
  RealRange d = c.domain();
  Sign s = c.sign();
  RatPoly p = rat_poly_from(at(ev, "poly"));
  if (auto reg = registered_rat_poly(c.expr())) require(*reg == p, "polynomial does not match '" + c.expr() + "'");
  if (auto reg = registered_rad_poly(c.expr()))
    require(*reg == to_radical(p), "polynomial does not match '" + c.expr() + "'");
  require(c.kind() == (d.hi ? "sturm-interval" : "sturm-ray"), "kind does not match the range");
  CertStatus claimed = c.status();
  if (claimed.status == Verdict::falsified) {
    require(claimed.witness.has_value(), "falsified without witness");
    check_poly_witness(*claimed.witness, p, d, s);
    return result(Verdict::falsified, "witness confirmed");
  }
  if (claimed.status == Verdict::inconclusive) return result(Verdict::inconclusive, "producer was inconclusive");

  Rational scale = rational_from(at(ev, "scale"));
  RatPoly core = rat_poly_from(at(ev, "core"));
  RatPoly square = rat_poly_from(at(ev, "square"));
  require(scale.sign() > 0, "scale must be positive");
  require(!core.is_zero(), "zero core");
  require(core * square * square * scale == p || ev.contains("cofactor"), "poly != scale * core * square^2");
  if (is_strict(s)) require(square == RatPoly::constant(Rational(1)), "strict claim needs square = 1");
  std::optional<RatPoly> cofactor;
  if (ev.contains("cofactor")) {
    cofactor = rat_poly_from(ev["cofactor"]);
    require(is_strict(s), "cofactor only appears in strict claims");
    require(scale == Rational(1), "cofactor form needs scale 1");
    require(*cofactor == poly_gcd(p, p.derivative()) && !cofactor->is_constant(), "cofactor is not gcd(p, p')");
    require(core * *cofactor == p, "poly != core * cofactor");
  }
  const RatPoly& sampled = cofactor ? p : core;

  std::vector<RatPoly> chain;
  for (const auto& q : at(ev, "chain")) chain.push_back(rat_poly_from(q));
  require(chain_recurrence_ok(chain, core), "Sturm chain recurrence fails");
  require(chain.back().is_constant(), "core is not squarefree");

  int vlo = d.lo ? sign_variations(chain, *d.lo) : sign_variations_at_infinity(chain, false);
  int vhi = d.hi ? sign_variations(chain, *d.hi) : sign_variations_at_infinity(chain, true);
  const Json& var = at(ev, "variations");
  require(int_at(var, "lo") == vlo && int_at(var, "hi") == vhi, "recorded sign variations differ");
  int interior = vlo - vhi - ((d.hi && core(*d.hi).is_zero()) ? 1 : 0);
  require(int_at(ev, "interior_roots") == interior, "recorded interior root count differs");
  require(interior == 0, "core has roots inside the range");

  Sign core_sign = (s == Sign::negative || s == Sign::nonpositive) ? Sign::negative : Sign::positive;
  bool has_interior = false, lo_seen = false, hi_seen = false;
  for (const auto& smp : at(ev, "samples")) {
    Rational x = rational_from(at(smp, "x"));
    Rational v = sampled(x);
    require(d.contains(x), "sample outside the range");
    require(rational_from(at(smp, "value")) == v, "sample value is wrong");
    require(int_at(smp, "sign") == v.sign(), "sample sign is wrong");
    require(sign_satisfies(core_sign, v.sign()), "sample has the wrong sign");
    bool at_lo = d.lo && x == *d.lo, at_hi = d.hi && x == *d.hi;
    lo_seen = lo_seen || at_lo;
    hi_seen = hi_seen || at_hi;
    has_interior = has_interior || (!at_lo && !at_hi);
  }
  require(has_interior, "no interior sample");
  if (is_strict(s)) {
    require(!(d.lo && d.lo_closed) || lo_seen, "closed lower end not sampled");
    require(!(d.hi && d.hi_closed) || hi_seen, "closed upper end not sampled");
  }
  if (!d.hi) require(sign_satisfies(core_sign, sampled.lead().sign()), "leading coefficient has the wrong sign");
  return result(Verdict::verified, "Sturm evidence replayed");
}

// ---------------------------------------------------------------------------
// Radical bound

CertStatus check_radical(const SignCertificate& c, const Ctx& ctx) {
  const Json& doc = c.json();
  const Json& ev = at(doc, "evidence");
  RealRange d = c.domain();
  Sign s = c.sign();
  require(d.lo && !d.hi && d.lo->sign() >= 0, "coefficient bounds need a ray inside [0, inf)");
  RadPoly p = rad_poly_from(at(ev, "poly"));
  if (auto reg = registered_rad_poly(c.expr())) require(*reg == p, "polynomial does not match '" + c.expr() + "'");
  if (auto reg = registered_rat_poly(c.expr()))
    require(to_radical(*reg) == p, "polynomial does not match '" + c.expr() + "'");
  CertStatus claimed = c.status();
  if (claimed.status == Verdict::falsified) {
    require(claimed.witness && claimed.witness->contains("x"), "falsified without witness");
    Rational x = rational_from((*claimed.witness)["x"]);
    require(d.contains(x), "witness outside the claimed range");
    require(!sign_satisfies(s, rad_sign(p(RadicalNumber(x)))), "witness value satisfies the claim");
    return result(Verdict::falsified, "witness confirmed");
  }
  if (claimed.status == Verdict::inconclusive) return result(Verdict::inconclusive, "producer was inconclusive");

  std::string dir = at(ev, "direction").get<std::string>();
  bool lower = s == Sign::positive || s == Sign::nonnegative;
  require(dir == (lower ? "lower" : "upper"), "bound direction does not fit the claim");
  RatPoly b = rat_poly_from(at(ev, "bound_poly"));
  Rational width = rational_from(at(ev, "width"));
  require(width.sign() > 0, "bound width must be positive");
  require(coeff_bound_poly(p, lower ? BoundDirection::lower : BoundDirection::upper, width) == b,
          "bound polynomial is not the rounding of the coefficients at the recorded width");
  size_t n = std::max(p.coeffs().size(), b.coeffs().size());
  for (size_t i = 0; i < n; ++i) {
    RadicalNumber pi = i < p.coeffs().size() ? p.coeffs()[i] : RadicalNumber();
    Rational bi = i < b.coeffs().size() ? b.coeffs()[i] : Rational(0);
    int gap = rad_sign(pi - RadicalNumber(bi));
    require(lower ? gap >= 0 : gap <= 0, "bound coefficient " + std::to_string(i) + " is on the wrong side");
  }
  SignCertificate sub(at(ev, "bound_cert"));
  require(sub.sign() == s, "embedded claim sign differs");
  require(sub.domain().str() == d.str(), "embedded claim range differs");
  require(rat_poly_from(at(at(sub.json(), "evidence"), "poly")) == b, "embedded polynomial differs from the bound");
  require(sub.kind() == "sturm-ray", "embedded certificate must be a Sturm ray certificate");
  CertStatus st = check_any(sub, ctx);
  require(st.verified(), "embedded certificate: " + st.detail);
  return result(Verdict::verified, "bound coefficients exact; " + st.detail, width);
}

// ---------------------------------------------------------------------------
// Subdivision with tail

CertStatus check_subdivision(const SignCertificate& c, const Ctx& ctx) {
  const Json& doc = c.json();
  RealRange d = c.domain();
  Sign s = c.sign();
  require(d.lo && d.lo_closed && !d.hi && d.lo->sign() > 0, "subdivision claims need a closed ray [a, inf), a > 0");
  std::optional<ScaledExpr> e;
  if (ctx.deep) e = expr_by_id(c.expr(), params_from(at(at(doc, "claim"), "params")));
  CertStatus claimed = c.status();
  if (claimed.status == Verdict::falsified) {
    require(claimed.witness.has_value(), "falsified without witness");
    const Json& w = *claimed.witness;
    Rational x = rational_from(at(w, "x"));
    Interval enc = interval_from(at(w, "enclosure"));
    require(d.contains(x), "witness outside the claimed range");
    require(interval_violates(s, enc), "witness enclosure does not violate the claim");
    if (e) require(eval_on(*e, Interval(x), bits_at(w, "bits")) == enc, "witness enclosure does not replay");
    return result(Verdict::falsified, "witness confirmed");
  }
  if (claimed.status == Verdict::inconclusive) return result(Verdict::inconclusive, "producer was inconclusive");

  const Json& ev = at(doc, "evidence");
  long power = int_at(ev, "power");
  require(power >= 0, "negative power");
  if (e) require(e->power == power, "power does not match the expression");
  Rational x0 = rational_from(at(ev, "x0"));
  const Json& pieces = at(ev, "pieces");
  require(pieces.is_array() && !pieces.empty(), "no pieces");
  Rational cursor = *d.lo;
  long finest = 0;
  for (const auto& pc : pieces) {
    Interval x = interval_from(at(pc, "x"));
    Interval enc = interval_from(at(pc, "enclosure"));
    require(x.lo() == cursor, "gap or overlap at " + cursor.decimal(10));
    require(x.lo() < x.hi(), "degenerate piece");
    require(interval_satisfies(s, enc), "piece enclosure has the wrong sign");
    long bits = bits_at(pc, "bits");
    finest = std::max(finest, bits);
    if (e) require(eval_on(*e, x, bits) == enc, "piece enclosure does not replay");
    cursor = x.hi();
  }
  require(cursor == x0, "pieces do not reach x0");

  const Json& tail = at(ev, "tail");
  require(rational_from(at(tail, "x0")) == x0, "tail cutoff differs");
  Interval rr = interval_from(at(tail, "r_range"));
  require(rr.lo().is_zero() && rr.hi() == x0.inverse(), "tail r-range must be [0, 1/x0]");
  Interval enc = interval_from(at(tail, "enclosure"));
  Interval dom = interval_from(at(tail, "dominant"));
  Rational rem = rational_from(at(tail, "remainder"));
  require(rem == max(Rational(0), max(dom.lo() - enc.lo(), enc.hi() - dom.hi())), "remainder is not the enclosure excess");
  Interval widened(dom.lo() - rem, dom.hi() + rem);
  require(widened.contains(enc), "tail enclosure exceeds dominant term plus remainder");
  require(interval_satisfies(s, widened), "tail margin does not exceed the remainder");
  long tbits = bits_at(tail, "bits");
  finest = std::max(finest, tbits);
  if (e) {
    require(e->scaled(rr, tbits) == enc, "tail enclosure does not replay");
    require(e->scaled(Interval(0), tbits) == dom, "dominant term does not replay");
  }
  return result(Verdict::verified, std::to_string(pieces.size()) + " pieces and tail replayed",
                Rational::pow2(-finest));
}

// ---------------------------------------------------------------------------
// Scalar

CertStatus check_scalar(const SignCertificate& c, const Ctx& ctx) {
  const Json& doc = c.json();
  Sign s = c.sign();
  auto params = params_from(at(at(doc, "claim"), "params"));
  CertStatus claimed = c.status();
  if (claimed.status == Verdict::inconclusive) return result(Verdict::inconclusive, "producer was inconclusive");
  require(c.domain().str() == RealRange::closed(Rational(0), Rational(0)).str(), "scalar claims use the range [0, 0]");
  const Json& ev = at(doc, "evidence");
  Interval enc = interval_from(at(ev, "enclosure"));
  long bits = bits_at(ev, "bits");
  std::optional<RadicalNumber> exact;
  if (ev.contains("exact")) {
    exact = radical_from(ev["exact"]);
    require(rad_sign(*exact - RadicalNumber(enc.lo())) >= 0 && rad_sign(RadicalNumber(enc.hi()) - *exact) >= 0,
            "enclosure does not contain the exact value");
    require(enc == rad_enclose_bits(*exact, bits), "enclosure is not the exact value rounded at the recorded bits");
    int es = rad_sign(*exact);
    long expect_bits = kDefaultBits;
    while (es != 0 && rad_enclose_bits(*exact, expect_bits).certain_sign() != es && expect_bits < 8 * kMaxBits)
      expect_bits *= 2;
    require(bits == expect_bits, "recorded bits are not the first sufficient grid");
    if (c.expr() == "smalln") {
      int n = static_cast<int>(rational_from(at(at(at(doc, "claim"), "params"), "n")).to_double());
      require(smalln_coefficient_exact(n, params.at("k"), params.at("S")) == *exact,
              "exact value does not match the small-dimension coefficient");
    }
  }
  if (ctx.deep && !exact) {
    auto re = registered_scalar(c.expr(), params, bits);
    require(re.has_value(), "unknown scalar '" + c.expr() + "'");
    require(*re == enc, "enclosure does not replay");
  }
  if (claimed.status == Verdict::falsified) {
    if (exact)
      require(!sign_satisfies(s, rad_sign(*exact)), "exact value satisfies the claim");
    else
      require(interval_violates(s, enc), "enclosure does not violate the claim");
    return result(Verdict::falsified, "witness confirmed");
  }
  if (exact)
    require(sign_satisfies(s, rad_sign(*exact)), "exact value has the wrong sign");
  else
    require(interval_satisfies(s, enc), "enclosure has the wrong sign");
  return result(Verdict::verified, "enclosure " + enc.lo().decimal(8) + " .. " + enc.hi().decimal(8),
                Rational::pow2(-bits));
}

// ---------------------------------------------------------------------------
// Bundles

void expect_part(const SignCertificate& b, const std::string& name, const std::string& kind, const std::string& expr,
                 Sign sign, const std::string& domain) {
  SignCertificate p = b.part(name);
  require(p.kind() == kind, "part '" + name + "' must be " + kind);
  require(p.expr() == expr, "part '" + name + "' must be about " + expr);
  require(p.sign() == sign, "part '" + name + "' has the wrong sign claim");
  if (!domain.empty()) require(p.domain().str() == domain, "part '" + name + "' has the wrong range");
}

std::map<std::string, Rational> part_params(const SignCertificate& b, const std::string& name) {
  return params_from(at(at(b.part(name).json(), "claim"), "params"));
}

void check_rule(const SignCertificate& c) {
  std::string rule = at(c.json(), "rule").get<std::string>();
  auto params = params_from(at(at(c.json(), "claim"), "params"));
  const std::string six = RealRange::ray_from(Rational(6)).str();
  if (rule == "case1-factorization") {
    require(c.expr() == "g1" && c.sign() == Sign::negative && c.domain().str() == six, "conclusion must be g1 < 0");
    expect_part(c, "prefactor", "sturm-ray", "case1-prefactor", Sign::positive, six);
    expect_part(c, "sqrt6-factor", "radical-bound", "sqrt6-factor", Sign::positive, six);
    expect_part(c, "x2x4", "sturm-ray", "x2x4", Sign::positive, six);
    expect_part(c, "majorant", "radical-bound", "Q1-(Z-W)", Sign::nonnegative, RealRange::ray_from(Rational(0)).str());
    expect_part(c, "q1-negative", "sturm-ray", "Q1", Sign::negative, RealRange::ray_from(Rational(3)).str());
    return;
  }
  if (rule == "case2-monotone-limit") {
    require(c.expr() == "g2" && c.sign() == Sign::negative && c.domain().str() == six, "conclusion must be g2 < 0");
    expect_part(c, "printed-majorant", "radical-bound", "R-10000Q2", Sign::nonnegative,
                RealRange::ray_from(Rational(0)).str());
    expect_part(c, "q2-positive", "sturm-ray", "Q2", Sign::positive, RealRange::ray_from(Rational(3)).str());
    expect_part(c, "slope-numerator", "radical-bound", "g2-slope-numerator", Sign::positive, six);
    expect_part(c, "sqrt6-factor", "radical-bound", "sqrt6-factor", Sign::positive, six);
    expect_part(c, "linear-factor", "radical-bound", "case2-linear", Sign::positive, six);
    expect_part(c, "u1-numerator", "radical-bound", "u1-numerator", Sign::positive, six);
    expect_part(c, "x-minus-2", "sturm-ray", "x-minus-2", Sign::positive, six);
    expect_part(c, "limit", "scalar", "g2-limit", Sign::negative, "");
    return;
  }
  if (rule == "minimal-theorem") {
    MinimalParams mp{params.at("theta"), params.at("theta1"), params.at("k")};
    mp.validate();
    require(c.expr() == "minimal-theorem" && c.sign() == Sign::negative &&
                c.domain().str() == RealRange::ray_from(Rational(2), true).str(),
            "conclusion must be the minimal-theorem claim on [2, inf)");
    require(mp.k >= minimal_k_floor(), "k below the range where C1 applies");
    for (int n = 2; n <= 5; ++n) {
      Rational N(n);
      for (const char* end : {"lo", "hi"}) {
        std::string name = "smalln-" + std::to_string(n) + "-" + end;
        expect_part(c, name, "scalar", "smalln", Sign::negative, "");
        auto pp = part_params(c, name);
        Rational S = std::string(end) == "lo" ? N : N + N / mp.k;
        require(pp.at("n") == N && pp.at("k") == mp.k && pp.at("S") == S, "part '" + name + "' has wrong parameters");
      }
    }
    const Json& parts = at(c.json(), "parts");
    if (parts.contains("case1")) {
      MinimalParams paper = paper_minimal_params();
      require(mp.theta == paper.theta && mp.theta1 == paper.theta1 && mp.k == paper.k,
              "case bundles only apply at the reference parameters");
      require(at(c.part("case1").json(), "rule") == "case1-factorization", "case1 part has the wrong rule");
      require(at(c.part("case2").json(), "rule") == "case2-monotone-limit", "case2 part has the wrong rule");
      return;
    }
    const std::string six_closed = RealRange::ray_from(Rational(6), true).str();
    expect_part(c, "gradA", "subdivision-tail", "minimal-gradA", Sign::negative, six_closed);
    expect_part(c, "endpoint", "subdivision-tail", "minimal-endpoint", Sign::negative, six_closed);
    require(part_params(c, "gradA") == mp.as_map() && part_params(c, "endpoint") == mp.as_map(),
            "subdivision parts use other parameters");
    return;
  }
  if (rule == "shrinker-theorem") {
    ShrinkerParams sp{params.at("delta"), params.at("theta"), params.at("theta1")};
    sp.validate();
    require(c.expr() == "shrinker-theorem" && c.sign() == Sign::negative, "conclusion must be the shrinker-theorem claim");
    require(c.domain().str() == RealRange::closed(Rational(0), sp.delta).str(), "conclusion range must be [0, delta]");
    expect_part(c, "c4", "scalar", "C4", Sign::positive, "");
    expect_part(c, "gradA", "scalar", "shrinker-gradA", Sign::negative, "");
    expect_part(c, "endpoint", "scalar", "shrinker-endpoint", Sign::negative, "");
    require(part_params(c, "c4").at("theta") == sp.theta, "c4 part has the wrong theta");
    require(part_params(c, "gradA") == sp.as_map() && part_params(c, "endpoint") == sp.as_map(),
            "coefficient parts use other parameters");
    return;
  }
  throw ParseError("unknown bundle rule '" + rule + "'");
}

CertStatus check_bundle(const SignCertificate& c, const Ctx& ctx) {
  CertStatus claimed = c.status();
  const Json& parts = at(c.json(), "parts");
  require(parts.is_object(), "parts must be an object");
  if (claimed.status == Verdict::falsified) {
    require(claimed.witness && claimed.witness->contains("part"), "falsified without failing part");
    std::string name = (*claimed.witness)["part"].get<std::string>();
    CertStatus ps = check_any(c.part(name), ctx);
    require(ps.status == Verdict::falsified, "failing part does not replay as falsified");
    return result(Verdict::falsified, "part '" + name + "' falsified");
  }
  if (claimed.status == Verdict::inconclusive) return result(Verdict::inconclusive, "producer was inconclusive");
  check_rule(c);
  Rational finest(0);
  for (const auto& [name, j] : parts.items()) {
    CertStatus ps = check_any(SignCertificate(j), ctx);
    require(ps.verified(), "part '" + name + "': " + ps.detail);
    if (ps.precision_used.sign() > 0 && (finest.is_zero() || ps.precision_used < finest)) finest = ps.precision_used;
  }
  return result(Verdict::verified, std::to_string(parts.size()) + " parts replayed", finest);
}

CertStatus check_any(const SignCertificate& c, const Ctx& ctx) {
  if (!c.json().is_object() || at(c.json(), "schema") != kCertSchema) throw ParseError("unsupported certificate schema");
  std::string kind = c.kind();
  if (kind == "sturm-ray" || kind == "sturm-interval") return check_sturm(c);
  if (kind == "radical-bound") return check_radical(c, ctx);
  if (kind == "subdivision-tail") return check_subdivision(c, ctx);
  if (kind == "scalar") return check_scalar(c, ctx);
  if (kind == "bundle") return check_bundle(c, ctx);
  throw ParseError("unknown certificate kind '" + kind + "'");
}

}  // namespace

CertStatus check_certificate(const SignCertificate& cert, bool deep) {
  try {
    return check_any(cert, Ctx{deep});
  } catch (const Reject& r) {
    return result(Verdict::falsified, "replay failed: " + r.why);
  } catch (const DomainError& e) {
    return result(Verdict::falsified, std::string("replay failed: ") + e.what());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

CertStatus check_certificate_text(const std::string& text, bool deep) {
  return check_certificate(SignCertificate::parse(text), deep);
}

}  // namespace pinch
