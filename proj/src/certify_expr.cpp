#include "pinchcert/certify.hpp"

#include <algorithm>

namespace pinch {

namespace {

constexpr size_t kMaxPieces = 200000;

Rational split_point(const Rational& lo, const Rational& hi) {
  if (hi > Rational(2) * lo && lo.sign() > 0) {
    Rational g = sqrt_lower(lo * hi, 16);
    if (lo < g && g < hi) return g;
  }
  return (lo + hi) / Rational(2);
}

SignCertificate finish(Json doc, CertStatus st) {
  set_status(doc, st);
  return SignCertificate(std::move(doc));
}

}  // namespace

SignCertificate certify_expr_sign_on_ray(const ScaledExpr& e, const Rational& a, Sign sign,
                                         const CertifyOptions& opt) {
  if (a.sign() <= 0) throw DomainError("subdivision needs a > 0, got " + a.str());
  if (!(opt.x0 > a)) throw DomainError("cutoff x0 must exceed a");
  if (opt.start_bits <= 0 || opt.max_bits < opt.start_bits) throw DomainError("bad precision schedule");
  const Rational& x0 = opt.x0;
  Json doc = make_cert_doc("subdivision-tail", e.id, e.params, RealRange::ray_from(a, true), sign);
  CertStatus st;
  long finest = opt.start_bits;
  auto precision = [&] { return Rational::pow2(-finest); };

  auto point_witness = [&](const Rational& x, long bits) -> std::optional<Json> {
    Interval v = eval_on(e, Interval(x), bits);
    if (interval_violates(sign, v)) return Json{{"x", x.str()}, {"enclosure", to_json(v)}, {"bits", bits}};
    return std::nullopt;
  };

  try {
    // Tail on [x0, inf) in the variable r = 1/x.
    Interval rt(Rational(0), x0.inverse());
    std::optional<Interval> tail;
    long tail_bits = opt.start_bits;
    for (long bits = opt.start_bits; bits <= opt.max_bits; bits *= 2) {
      Interval enc = e.scaled(rt, bits);
      finest = std::max(finest, bits);
      if (interval_satisfies(sign, enc)) {
        tail = enc;
        tail_bits = bits;
        break;
      }
      if (interval_violates(sign, enc)) {
        if (auto w = point_witness(x0, bits)) {
          st.status = Verdict::falsified;
          st.witness = w;
          st.detail = "tail has the wrong sign";
          st.precision_used = precision();
          return finish(std::move(doc), st);
        }
      }
    }
    if (!tail) {
      st.detail = "tail margin nonpositive at 2^-" + std::to_string(opt.max_bits);
      st.precision_used = precision();
      return finish(std::move(doc), st);
    }
    Interval dom = e.scaled(Interval(0), tail_bits);
    Rational rem = max(Rational(0), max(dom.lo() - tail->lo(), tail->hi() - dom.hi()));
    Json tail_json = {{"x0", x0.str()},
                      {"r_range", to_json(rt)},
                      {"enclosure", to_json(*tail)},
                      {"dominant", to_json(dom)},
                      {"remainder", rem.str()},
                      {"bits", tail_bits}};

    // Cheap samples first: a false claim usually shows at one of these.
    for (Rational x = a; x < x0; x = x * Rational(2))
      if (auto w = point_witness(x, opt.start_bits)) {
        st.status = Verdict::falsified;
        st.witness = w;
        st.detail = "counterexample found";
        st.precision_used = precision();
        return finish(std::move(doc), st);
      }

    struct Job {
      Rational lo, hi;
      int depth;
    };
    std::vector<Job> stack{{a, x0, 0}};
    Json pieces = Json::array();
    while (!stack.empty()) {
      Job j = stack.back();
      stack.pop_back();
      if (pieces.size() >= kMaxPieces) {
        st.detail = "piece limit reached";
        st.precision_used = precision();
        return finish(std::move(doc), st);
      }
      bool split = false;
      for (long bits = opt.start_bits;; bits *= 2) {
        finest = std::max(finest, bits);
        Interval enc = eval_on(e, Interval(j.lo, j.hi), bits);
        if (interval_satisfies(sign, enc)) {
          pieces.push_back({{"x", to_json(Interval(j.lo, j.hi))}, {"enclosure", to_json(enc)}, {"bits", bits}});
          break;
        }
        if (interval_violates(sign, enc)) {
          if (auto w = point_witness(j.lo, bits)) {
            st.status = Verdict::falsified;
            st.witness = w;
            st.detail = "counterexample found";
            st.precision_used = precision();
            return finish(std::move(doc), st);
          }
        }
        bool tiny = j.depth >= opt.depth_cap || (j.hi - j.lo) <= j.lo * Rational::pow2(-40);
        if (!tiny) {
          split = true;
          break;
        }
        if (bits * 2 > opt.max_bits) {
          if (auto w = point_witness(j.lo, bits)) {
            st.status = Verdict::falsified;
            st.witness = w;
            st.detail = "counterexample found";
          } else {
            st.detail = "sign undecided on [" + j.lo.decimal(12) + ", " + j.hi.decimal(12) + "] at 2^-" +
                        std::to_string(opt.max_bits);
          }
          st.precision_used = precision();
          return finish(std::move(doc), st);
        }
      }
      if (split) {
        Rational m = split_point(j.lo, j.hi);
        stack.push_back({m, j.hi, j.depth + 1});
        stack.push_back({j.lo, m, j.depth + 1});
      }
    }
    doc["evidence"] = {{"power", e.power}, {"x0", x0.str()}, {"pieces", pieces}, {"tail", tail_json}};
    st.status = Verdict::verified;
    st.detail = std::to_string(pieces.size()) + " pieces on [" + a.str() + ", " + x0.str() + "] plus tail";
    st.precision_used = precision();
    return finish(std::move(doc), st);
  } catch (const DomainError& ex) {
    st.status = Verdict::inconclusive;
    st.detail = std::string("evaluation failed: ") + ex.what();
    st.precision_used = precision();
    return finish(std::move(doc), st);
  }
}

SignCertificate certify_scalar(const std::string& expr, const std::map<std::string, Rational>& params, Sign sign,
                               const std::function<Interval(long)>& eval, const CertifyOptions& opt) {
  Json doc = make_cert_doc("scalar", expr, params, RealRange::closed(Rational(0), Rational(0)), sign);
  CertStatus st;
  try {
    for (long bits = opt.start_bits; bits <= opt.max_bits; bits *= 2) {
      Interval enc = eval(bits);
      st.precision_used = Rational::pow2(-bits);
      doc["evidence"] = {{"enclosure", to_json(enc)}, {"bits", bits}};
      if (interval_satisfies(sign, enc)) {
        st.status = Verdict::verified;
        st.detail = "enclosure " + enc.lo().decimal(8) + " .. " + enc.hi().decimal(8);
        return finish(std::move(doc), st);
      }
      if (interval_violates(sign, enc)) {
        st.status = Verdict::falsified;
        st.witness = Json{{"enclosure", to_json(enc)}, {"bits", bits}};
        st.detail = "enclosure " + enc.lo().decimal(8) + " .. " + enc.hi().decimal(8) + " has the wrong sign";
        return finish(std::move(doc), st);
      }
    }
    st.detail = "enclosure straddles zero at 2^-" + std::to_string(opt.max_bits);
  } catch (const DomainError& ex) {
    st.detail = std::string("evaluation failed: ") + ex.what();
  }
  return finish(std::move(doc), st);
}

SignCertificate certify_scalar_exact(const std::string& expr, const std::map<std::string, Rational>& params,
                                     Sign sign, const RadicalNumber& value) {
  Json doc = make_cert_doc("scalar", expr, params, RealRange::closed(Rational(0), Rational(0)), sign);
  int s = rad_sign(value);
  long bits = kDefaultBits;
  Interval enc = rad_enclose_bits(value, bits);
  while (s != 0 && enc.certain_sign() != s) enc = rad_enclose_bits(value, bits *= 2);
  doc["evidence"] = {{"enclosure", to_json(enc)}, {"bits", bits}, {"exact", to_json(value)}};
  CertStatus st;
  st.precision_used = Rational::pow2(-bits);
  st.detail = "exact value " + value.str() + ", about " + enc.mid().decimal(8);
  if (sign_satisfies(sign, s)) {
    st.status = Verdict::verified;
  } else {
    st.status = Verdict::falsified;
    st.witness = Json{{"exact", to_json(value)}};
  }
  return finish(std::move(doc), st);
}

}  // namespace pinch
