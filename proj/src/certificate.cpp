#include "pinchcert/certificate.hpp"

namespace pinch {

std::string to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::nonpositive: return "nonpositive";
    case Sign::nonnegative: return "nonnegative";
    case Sign::positive: return "positive";
  }
  return "?";
}

Sign parse_sign(const std::string& s) {
  if (s == "negative") return Sign::negative;
  if (s == "nonpositive") return Sign::nonpositive;
  if (s == "nonnegative") return Sign::nonnegative;
  if (s == "positive") return Sign::positive;
  throw ParseError("unknown sign '" + s + "'");
}

bool is_strict(Sign s) { return s == Sign::negative || s == Sign::positive; }

bool sign_satisfies(Sign s, int v) {
  switch (s) {
    case Sign::negative: return v < 0;
    case Sign::nonpositive: return v <= 0;
    case Sign::nonnegative: return v >= 0;
    case Sign::positive: return v > 0;
  }
  return false;
}

bool interval_satisfies(Sign s, const Interval& e) {
  switch (s) {
    case Sign::negative: return e.hi().sign() < 0;
    case Sign::nonpositive: return e.hi().sign() <= 0;
    case Sign::nonnegative: return e.lo().sign() >= 0;
    case Sign::positive: return e.lo().sign() > 0;
  }
  return false;
}

bool interval_violates(Sign s, const Interval& e) {
  switch (s) {
    case Sign::negative: return e.lo().sign() >= 0;
    case Sign::nonpositive: return e.lo().sign() > 0;
    case Sign::nonnegative: return e.hi().sign() < 0;
    case Sign::positive: return e.hi().sign() <= 0;
  }
  return false;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::falsified: return "falsified";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

Verdict parse_verdict(const std::string& s) {
  if (s == "verified") return Verdict::verified;
  if (s == "falsified") return Verdict::falsified;
  if (s == "inconclusive") return Verdict::inconclusive;
  throw ParseError("unknown status '" + s + "'");
}

int CertStatus::exit_code() const {
  switch (status) {
    case Verdict::verified: return 0;
    case Verdict::falsified: return 1;
    case Verdict::inconclusive: return 2;
  }
  return 2;
}

// ---------------------------------------------------------------------------

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("certificate field '") + key + "' missing");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("certificate field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

std::string SignCertificate::kind() const { return string_field(doc_, "kind"); }
std::string SignCertificate::expr() const { return string_field(field(doc_, "claim"), "expr"); }
Sign SignCertificate::sign() const { return parse_sign(string_field(field(doc_, "claim"), "sign")); }
RealRange SignCertificate::domain() const { return RealRange::parse(string_field(field(doc_, "claim"), "domain")); }

CertStatus SignCertificate::status() const {
  CertStatus st;
  st.status = parse_verdict(string_field(doc_, "status"));
  st.detail = doc_.contains("detail") && doc_["detail"].is_string() ? doc_["detail"].get<std::string>() : "";
  st.precision_used = doc_.contains("precision") ? rational_from(doc_["precision"]) : Rational(0);
  if (doc_.contains("witness")) st.witness = doc_["witness"];
  return st;
}

SignCertificate SignCertificate::part(const std::string& name) const {
  const Json& parts = field(doc_, "parts");
  if (!parts.is_object() || !parts.contains(name)) throw ParseError("bundle part '" + name + "' missing");
  return SignCertificate(parts.at(name));
}

std::string SignCertificate::dump() const { return doc_.dump(2) + "\n"; }

SignCertificate SignCertificate::parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("certificate must be a JSON object");
  if (string_field(j, "schema") != kCertSchema) throw ParseError("unsupported certificate schema");
  return SignCertificate(std::move(j));
}

// ---------------------------------------------------------------------------

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Interval& e) { return Json::array({e.lo().str(), e.hi().str()}); }

Json to_json(const RadicalNumber& a) {
  Json j = Json::object();
  for (int i = 0; i < RadicalNumber::kBasisSize; ++i)
    if (!a.coeff(i).is_zero()) j[RadicalNumber::basis_name(i)] = a.coeff(i).str();
  return j;
}

Json to_json(const RatPoly& p) {
  Json j = Json::array();
  for (const auto& c : p.coeffs()) j.push_back(c.str());
  return j;
}

Json to_json(const RadPoly& p) {
  Json j = Json::array();
  for (const auto& c : p.coeffs()) j.push_back(to_json(c));
  return j;
}

Json to_json(const std::map<std::string, Rational>& params) {
  Json j = Json::object();
  for (const auto& [k, v] : params) j[k] = v.str();
  return j;
}

Rational rational_from(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

Interval interval_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("interval must be a [lo, hi] pair");
  Rational lo = rational_from(j[0]), hi = rational_from(j[1]);
  if (hi < lo) throw ParseError("interval with lo > hi");
  return Interval(lo, hi);
}

RadicalNumber radical_from(const Json& j) {
  if (!j.is_object()) throw ParseError("radical number must be an object");
  RadicalNumber a;
  for (const auto& [k, v] : j.items()) a.set_coeff(RadicalNumber::basis_index(k), rational_from(v));
  return a;
}

RatPoly rat_poly_from(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient array");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from(v));
  return RatPoly(std::move(c));
}

RadPoly rad_poly_from(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient array");
  std::vector<RadicalNumber> c;
  for (const auto& v : j) c.push_back(radical_from(v));
  return RadPoly(std::move(c));
}

std::map<std::string, Rational> params_from(const Json& j) {
  std::map<std::string, Rational> out;
  if (!j.is_object()) throw ParseError("params must be an object");
  for (const auto& [k, v] : j.items()) out[k] = rational_from(v);
  return out;
}

Json make_cert_doc(const std::string& kind, const std::string& expr, const std::map<std::string, Rational>& params,
                   const RealRange& domain, Sign sign) {
  Json doc;
  doc["schema"] = kCertSchema;
  doc["kind"] = kind;
  doc["claim"] = {{"expr", expr}, {"params", to_json(params)}, {"domain", domain.str()}, {"sign", to_string(sign)}};
  doc["status"] = "inconclusive";
  doc["detail"] = "";
  doc["precision"] = "0";
  return doc;
}

void set_status(Json& doc, const CertStatus& st) {
  doc["status"] = to_string(st.status);
  doc["detail"] = st.detail;
  doc["precision"] = st.precision_used.str();
  if (st.witness)
    doc["witness"] = *st.witness;
  else
    doc.erase("witness");
}

}  // namespace pinch
