#ifndef PINCHCERT_CERTIFICATE_HPP
#define PINCHCERT_CERTIFICATE_HPP

#include "pinchcert/interval.hpp"
#include "pinchcert/poly.hpp"
#include "pinchcert/radical.hpp"
#include "pinchcert/roots.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace pinch {

using Json = nlohmann::json;

/// Schema tag written into every certificate file.
inline constexpr const char* kCertSchema = "pinchcert/1";

enum class Sign { negative, nonpositive, nonnegative, positive };

std::string to_string(Sign s);
Sign parse_sign(const std::string& s);
bool is_strict(Sign s);
/// Sign of an exact value (-1, 0, 1) satisfies the claim.
bool sign_satisfies(Sign s, int value_sign);
/// The whole enclosure satisfies / violates the claim.
bool interval_satisfies(Sign s, const Interval& e);
bool interval_violates(Sign s, const Interval& e);

enum class Verdict { verified, falsified, inconclusive };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct CertStatus {
  Verdict status = Verdict::inconclusive;
  std::string detail;
  /// Finest enclosure grid used, 2^-bits; 0 for purely exact evidence.
  Rational precision_used;
  /// Present when falsified.
  std::optional<Json> witness;

  bool verified() const { return status == Verdict::verified; }
  /// 0 verified, 1 falsified, 2 inconclusive.
  int exit_code() const;
};

/// A self-contained sign certificate. The document holds the schema tag,
/// kind, claim {expr, params, domain, sign}, producer status and the
/// kind-specific evidence; see README, "Certificate format".
class SignCertificate {
 public:
  SignCertificate() = default;
  explicit SignCertificate(Json doc) : doc_(std::move(doc)) {}

  const Json& json() const { return doc_; }
  Json& json() { return doc_; }

  std::string kind() const;
  std::string expr() const;
  Sign sign() const;
  RealRange domain() const;
  /// Status recorded by the producer.
  CertStatus status() const;
  bool verified() const { return status().verified(); }

  /// Named sub-certificate of a bundle; throws ParseError when absent.
  SignCertificate part(const std::string& name) const;

  /// Pretty-printed JSON with sorted keys; deterministic.
  std::string dump() const;
  /// Throws ParseError for malformed text or a wrong schema tag.
  static SignCertificate parse(const std::string& text);

 private:
  Json doc_;
};

// Serialization helpers shared by producers and the checker.
Json to_json(const Rational& r);
Json to_json(const Interval& e);
Json to_json(const RadicalNumber& a);
Json to_json(const RatPoly& p);
Json to_json(const RadPoly& p);
Json to_json(const std::map<std::string, Rational>& params);
Rational rational_from(const Json& j);
Interval interval_from(const Json& j);
RadicalNumber radical_from(const Json& j);
RatPoly rat_poly_from(const Json& j);
RadPoly rad_poly_from(const Json& j);
std::map<std::string, Rational> params_from(const Json& j);

/// Skeleton document: schema, kind, claim, status fields.
Json make_cert_doc(const std::string& kind, const std::string& expr, const std::map<std::string, Rational>& params,
                   const RealRange& domain, Sign sign);
void set_status(Json& doc, const CertStatus& st);

}  // namespace pinch

#endif  // PINCHCERT_CERTIFICATE_HPP
