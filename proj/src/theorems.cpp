#include "pinchcert/certify.hpp"

namespace pinch {

// ---------------------------------------------------------------------------
// Registries

std::optional<RatPoly> registered_rat_poly(const std::string& id) {
  RatPoly x = RatPoly::x();
  if (id == "Q1") return build_Q1();
  if (id == "Q2") return build_Q2();
  if (id == "case1-prefactor") return case1_prefactor_poly();
  if (id == "x2x4") return (x - RatPoly::constant(Rational(2))) * (x + RatPoly::constant(Rational(4)));
  if (id == "x-minus-2") return x - RatPoly::constant(Rational(2));
  return std::nullopt;
}

std::optional<RadPoly> registered_rad_poly(const std::string& id) {
  if (id == "Q1-(Z-W)") return to_radical(build_Q1()) - (build_Z() - build_W());
  if (id == "R-10000Q2") return build_Rx() - to_radical(build_Q2()) * RadicalNumber(10000);
  if (id == "g2-slope-numerator") return build_g2_slope_numerator();
  if (id == "sqrt6-factor") return shifted_sqrt6_factor();
  if (id == "case2-linear") return case2_linear_factor();
  if (id == "u1-numerator") return case2_u1_numerator();
  return std::nullopt;
}

namespace {

const Rational& param(const std::map<std::string, Rational>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw ParseError("scalar parameter '" + key + "' missing");
  return it->second;
}

ShrinkerParams shrinker_from(const std::map<std::string, Rational>& p) {
  return {param(p, "delta"), param(p, "theta"), param(p, "theta1")};
}

int small_n(const Rational& n) {
  if (!n.is_integer() || n < Rational(2) || n > Rational(5)) throw DomainError("small dimension must be 2..5");
  return static_cast<int>(n.to_double());
}

Interval shrinker_endpoint_bits(const ShrinkerParams& sp, long bits) {
  CoefficientPair c = shrinker_coeff_pair_bits(sp, bits);
  return round_out(c.coeff_gradA + Interval(sp.delta) * c.coeff_excess, bits);
}

}  // namespace

std::optional<Interval> registered_scalar(const std::string& id, const std::map<std::string, Rational>& params,
                                          long bits) {
  if (id == "g2-limit") return g2_expr().scaled(Interval(0), bits);
  if (id == "C4") return C4_bits(param(params, "theta"), bits);
  if (id == "shrinker-gradA") return shrinker_coeff_pair_bits(shrinker_from(params), bits).coeff_gradA;
  if (id == "shrinker-excess") return shrinker_coeff_pair_bits(shrinker_from(params), bits).coeff_excess;
  if (id == "shrinker-endpoint") return shrinker_endpoint_bits(shrinker_from(params), bits);
  if (id == "smalln")
    return rad_enclose_bits(
        smalln_coefficient_exact(small_n(param(params, "n")), param(params, "k"), param(params, "S")), bits);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bundles

namespace {

struct Part {
  std::string name;
  SignCertificate cert;
};

SignCertificate bundle(const std::string& rule, const std::string& expr,
                       const std::map<std::string, Rational>& params, const RealRange& domain, Sign sign,
                       const std::vector<Part>& parts, const std::string& ok_detail) {
  Json doc = make_cert_doc("bundle", expr, params, domain, sign);
  doc["rule"] = rule;
  doc["parts"] = Json::object();
  CertStatus st;
  st.status = Verdict::verified;
  st.precision_used = Rational(0);
  for (const auto& p : parts) {
    doc["parts"][p.name] = p.cert.json();
    CertStatus ps = p.cert.status();
    if (ps.precision_used.sign() > 0 && (st.precision_used.is_zero() || ps.precision_used < st.precision_used))
      st.precision_used = ps.precision_used;
    if (st.status == Verdict::falsified) continue;
    if (ps.status == Verdict::falsified) {
      st.status = Verdict::falsified;
      st.detail = "part '" + p.name + "' falsified: " + ps.detail;
      st.witness = Json{{"part", p.name}};
      if (ps.witness) (*st.witness)["witness"] = *ps.witness;
    } else if (ps.status == Verdict::inconclusive && st.status == Verdict::verified) {
      st.status = Verdict::inconclusive;
      st.detail = "part '" + p.name + "' inconclusive: " + ps.detail;
    }
  }
  if (st.status == Verdict::verified) st.detail = ok_detail;
  set_status(doc, st);
  return SignCertificate(std::move(doc));
}

RealRange ray(long a) { return RealRange::ray_from(Rational(a), true); }

const Rational& finest() {
  static const Rational f = Rational::pow2(-kMaxBits);
  return f;
}

}  // namespace

SignCertificate verify_case1_with(const RatPoly& q1) {
  RadPoly major = to_radical(q1) - (build_Z() - build_W());
  std::vector<Part> parts{
      {"prefactor", certify_poly_sign_on_ray(case1_prefactor_poly(), Rational(6), Sign::positive, "case1-prefactor")},
      {"sqrt6-factor", certify_radical_poly_sign_on_ray(shifted_sqrt6_factor(), Rational(6), Sign::positive, finest(),
                                                        "sqrt6-factor")},
      {"x2x4", certify_poly_sign_on_ray(*registered_rat_poly("x2x4"), Rational(6), Sign::positive, "x2x4")},
      {"majorant", certify_radical_poly_sign_on_ray(major, Rational(0), Sign::nonnegative, finest(), "Q1-(Z-W)")},
      {"q1-negative", certify_poly_sign_on_ray(q1, Rational(3), Sign::negative, "Q1")},
  };
  return bundle("case1-factorization", "g1", {}, ray(6), Sign::negative, parts,
                "g1 = (Z - W) / (positive factors) and Z - W <= Q1 < 0 on [6, inf)");
}

SignCertificate verify_case2_with(const RatPoly& q2) {
  RadPoly minor = build_Rx() - to_radical(q2) * RadicalNumber(10000);
  CertifyOptions opt;
  std::vector<Part> parts{
      {"printed-majorant",
       certify_radical_poly_sign_on_ray(minor, Rational(0), Sign::nonnegative, finest(), "R-10000Q2")},
      {"q2-positive", certify_poly_sign_on_ray(q2, Rational(3), Sign::positive, "Q2")},
      {"slope-numerator", certify_radical_poly_sign_on_ray(build_g2_slope_numerator(), Rational(6), Sign::positive,
                                                           finest(), "g2-slope-numerator")},
      {"sqrt6-factor", certify_radical_poly_sign_on_ray(shifted_sqrt6_factor(), Rational(6), Sign::positive, finest(),
                                                        "sqrt6-factor")},
      {"linear-factor", certify_radical_poly_sign_on_ray(case2_linear_factor(), Rational(6), Sign::positive,
                                                         finest(), "case2-linear")},
      {"u1-numerator", certify_radical_poly_sign_on_ray(case2_u1_numerator(), Rational(6), Sign::positive, finest(),
                                                        "u1-numerator")},
      {"x-minus-2", certify_poly_sign_on_ray(*registered_rat_poly("x-minus-2"), Rational(6), Sign::positive,
                                             "x-minus-2")},
      {"limit", certify_scalar("g2-limit", {}, Sign::negative,
                               [](long b) { return *registered_scalar("g2-limit", {}, b); }, opt)},
  };
  return bundle("case2-monotone-limit", "g2", {}, ray(6), Sign::negative, parts,
                "g2 increasing on [6, inf) with a negative limit");
}

SignCertificate verify_case1() { return verify_case1_with(build_Q1()); }
SignCertificate verify_case2() { return verify_case2_with(build_Q2()); }

SignCertificate verify_minimal_theorem(const MinimalParams& params, const CertifyOptions& opt) {
  params.validate();
  auto pmap = params.as_map();
  std::vector<Part> parts;
  auto done = [&](const std::string& ok) {
    SignCertificate b = bundle("minimal-theorem", "minimal-theorem", pmap, ray(2), Sign::negative, parts, ok);
    // The coefficient is linear in S; record which end of [n, n + n/k] binds.
    Json binding = Json::object();
    for (int n = 2; n <= 5 && 2 * (n - 1) <= static_cast<int>(parts.size()); ++n) {
      Rational N(n);
      int d = rad_sign(smalln_coefficient_exact(n, params.k, N + N / params.k) - smalln_coefficient_exact(n, params.k, N));
      binding[std::to_string(n)] = d >= 0 ? "hi" : "lo";
    }
    b.json()["info"] = {{"smalln_binding", binding}};
    return b;
  };
  auto failed = [&] { return !parts.empty() && !parts.back().cert.verified(); };

  for (int n = 2; n <= 5; ++n) {
    Rational N(n);
    for (const char* end : {"lo", "hi"}) {
      Rational S = std::string(end) == "lo" ? N : N + N / params.k;
      parts.push_back({"smalln-" + std::to_string(n) + "-" + end,
                       certify_scalar_exact("smalln", {{"n", N}, {"k", params.k}, {"S", S}}, Sign::negative,
                                            smalln_coefficient_exact(n, params.k, S))});
      if (failed()) return done("");
    }
  }
  if (params.k < minimal_k_floor()) {
    Json doc = done("").json();
    CertStatus st;
    st.status = Verdict::inconclusive;
    st.detail = "k = " + params.k.str() + " is below 15, outside the range where C1 applies";
    set_status(doc, st);
    return SignCertificate(std::move(doc));
  }

  const MinimalParams paper = paper_minimal_params();
  if (params.theta == paper.theta && params.theta1 == paper.theta1 && params.k == paper.k) {
    parts.push_back({"case1", verify_case1()});
    if (failed()) return done("");
    parts.push_back({"case2", verify_case2()});
    return done("small dimensions exact; x >= 6 by the two case bundles");
  }
  parts.push_back({"gradA", certify_expr_sign_on_ray(minimal_gradA_expr(params), Rational(6), Sign::negative, opt)});
  if (failed()) return done("");
  parts.push_back(
      {"endpoint", certify_expr_sign_on_ray(minimal_endpoint_expr(params), Rational(6), Sign::negative, opt)});
  return done("small dimensions exact; x >= 6 by subdivision and tail");
}

SignCertificate verify_shrinker_theorem(const ShrinkerParams& params, const CertifyOptions& opt) {
  params.validate();
  auto pmap = params.as_map();
  std::map<std::string, Rational> tmap{{"theta", params.theta}};
  std::vector<Part> parts{
      {"c4", certify_scalar("C4", tmap, Sign::positive, [&](long b) { return *registered_scalar("C4", tmap, b); },
                            opt)},
      {"gradA", certify_scalar("shrinker-gradA", pmap, Sign::negative,
                               [&](long b) { return *registered_scalar("shrinker-gradA", pmap, b); }, opt)},
      {"endpoint", certify_scalar("shrinker-endpoint", pmap, Sign::negative,
                                  [&](long b) { return *registered_scalar("shrinker-endpoint", pmap, b); }, opt)},
  };
  SignCertificate out = bundle("shrinker-theorem", "shrinker-theorem", pmap,
                               RealRange::closed(Rational(0), params.delta), Sign::negative, parts,
                               "integrand coefficient negative at both ends of [0, delta]");
  try {
    out.json()["info"] = {{"coeff_excess", to_json(shrinker_coeff_pair_bits(params, kDefaultBits).coeff_excess)}};
  } catch (const DomainError&) {
  }
  return out;
}

}  // namespace pinch
