#ifndef PINCHCERT_TESTS_MUTATION_HPP
#define PINCHCERT_TESTS_MUTATION_HPP

#include "pinchcert/certify.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using pinch::Json;

/// Paths of the leaves a mutation may touch: everything under a claim or an
/// evidence object, plus each certificate's kind. Status metadata (detail,
/// precision, status, info) is skipped.
inline void mutable_leaves(const Json& j, const Json::json_pointer& at, bool inside, std::vector<Json::json_pointer>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& k = it.key();
      bool in = inside || k == "claim" || k == "evidence";
      if (!inside && k == "kind") {
        out.push_back(at / k);
        continue;
      }
      if (k == "detail" || k == "precision" || k == "status" || k == "schema" || k == "info") continue;
      mutable_leaves(it.value(), at / k, in, out);
    }
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) mutable_leaves(j[i], at / i, inside, out);
  } else if (inside || at.back() == "kind") {
    out.push_back(at);
  }
}

inline std::vector<Json::json_pointer> mutable_leaves(const Json& j) {
  std::vector<Json::json_pointer> out;
  mutable_leaves(j, Json::json_pointer(), false, out);
  return out;
}

/// Single-field mutation of the leaf at p. Returns false when the leaf has
/// no meaningful mutation.
inline bool mutate(Json& doc, const Json::json_pointer& p) {
  Json& v = doc[p];
  std::string key = p.back();
  if (v.is_number_integer()) {
    long x = v.get<long>();
    v = key == "sign" ? (x == 0 ? 1 : -x) : x + 1;
    return true;
  }
  if (v.is_boolean()) {
    v = !v.get<bool>();
    return true;
  }
  if (!v.is_string()) return false;
  std::string s = v.get<std::string>();
  static const std::vector<std::pair<std::string, std::string>> swaps = {
      {"positive", "negative"}, {"negative", "positive"},     {"nonnegative", "nonpositive"},
      {"nonpositive", "nonnegative"}, {"lower", "upper"},     {"upper", "lower"},
      {"sturm-ray", "sturm-interval"}, {"sturm-interval", "sturm-ray"}, {"radical-bound", "scalar"},
      {"subdivision-tail", "scalar"},  {"scalar", "subdivision-tail"},   {"bundle", "scalar"},
      {"verified", "falsified"},       {"falsified", "verified"}};
  for (const auto& [from, to] : swaps)
    if (s == from) {
      v = to;
      return true;
    }
  if (key == "domain") {
    pinch::RealRange r = pinch::RealRange::parse(s);
    if (r.lo)
      r.lo = *r.lo - pinch::Rational(1, 7);
    else
      r.hi = *r.hi + pinch::Rational(1, 7);
    v = r.str();
    return true;
  }
  if (key == "expr" || key == "rule" || key == "id") {
    v = s == "Q1" ? "Q2" : "Q1";
    return true;
  }
  try {
    pinch::Rational r = pinch::Rational::parse(s);
    v = (r + pinch::Rational(1, 7)).str();
    return true;
  } catch (const pinch::ParseError&) {
  }
  v = s + "x";
  return true;
}

struct MutationReport {
  int tried = 0;
  int rejected = 0;
  std::vector<std::string> survivors;
};

/// Applies each selected mutation to a copy of the certificate and replays
/// the checker. A mutation counts as rejected when the checker does not
/// return verified or the document no longer parses. `limit` > 0 samples
/// that many leaves with a fixed seed; otherwise every leaf is tried.
inline MutationReport run_mutations(const pinch::SignCertificate& cert, bool deep, int limit = 0,
                                    unsigned seed = 7) {
  MutationReport rep;
  std::vector<Json::json_pointer> leaves = mutable_leaves(cert.json());
  if (limit > 0 && static_cast<int>(leaves.size()) > limit) {
    std::mt19937 gen(seed);
    std::shuffle(leaves.begin(), leaves.end(), gen);
    leaves.resize(static_cast<size_t>(limit));
  }
  for (const auto& p : leaves) {
    Json doc = cert.json();
    if (!mutate(doc, p)) continue;
    ++rep.tried;
    bool ok = false;
    try {
      ok = pinch::check_certificate_text(doc.dump(), deep).verified();
    } catch (const pinch::ParseError&) {
    }
    if (ok)
      rep.survivors.push_back(p.to_string() + " -> " + doc[p].dump());
    else
      ++rep.rejected;
  }
  return rep;
}

}  // namespace testing_support

#endif  // PINCHCERT_TESTS_MUTATION_HPP
