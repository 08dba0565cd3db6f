#include "pinchcert/cli.hpp"

#include "pinchcert/optimize.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace pinch {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write '" + path.string() + "'");
  f << text;
}

Rational parse_flag(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw ParseError("--" + name + ": " + e.what());
  }
}

std::string precision_str(const Rational& p) {
  if (p.is_zero()) return "exact";
  long b = -p.ilog2();
  return Rational::pow2(-b) == p ? "2^-" + std::to_string(b) : p.str();
}

std::string interval_str(const Interval& e, int digits) {
  return "[" + e.lo().decimal(digits) + ", " + e.hi().decimal(digits) + "]";
}

int digits_for(const Rational& width) {
  long b = std::max(1L, -width.ilog2());
  return static_cast<int>(std::min(60L, b * 30103L / 100000L + 3));
}

void report_tree(std::ostream& out, const SignCertificate& c, const std::string& name, int depth) {
  CertStatus st = c.status();
  out << std::string(2 * depth, ' ') << name << ": " << to_string(st.status) << " [" << c.kind() << " " << c.expr()
      << " " << to_string(c.sign()) << " on " << c.domain().str() << "] " << st.detail << "\n";
  const Json& j = c.json();
  if (!j.contains("parts")) return;
  for (const auto& [pname, pj] : j["parts"].items()) report_tree(out, SignCertificate(pj), pname, depth + 1);
}

int report_verification(std::ostream& out, const SignCertificate& c, const std::string& emit_dir,
                        const std::string& stem) {
  CertStatus st = c.status();
  out << "status: " << to_string(st.status) << "\n";
  out << "detail: " << st.detail << "\n";
  out << "precision: " << precision_str(st.precision_used) << "\n";
  if (st.witness) out << "witness: " << st.witness->dump() << "\n";
  if (c.json().contains("info")) out << "info: " << c.json()["info"].dump() << "\n";
  out << "certificates:\n";
  report_tree(out, c, stem, 1);
  if (!emit_dir.empty()) {
    std::filesystem::path dir(emit_dir);
    write_file(dir / (stem + ".cert.json"), c.dump());
    if (c.json().contains("parts"))
      for (const auto& [pname, pj] : c.json()["parts"].items())
        write_file(dir / "parts" / (pname + ".cert.json"), SignCertificate(pj).dump());
    out << "wrote " << (dir / (stem + ".cert.json")).string() << "\n";
  }
  return st.exit_code();
}

CertifyOptions options_for(const std::string& precision) {
  CertifyOptions opt;
  if (!precision.empty()) {
    Rational w = parse_flag("precision", precision);
    if (w.sign() <= 0) throw DomainError("--precision must be positive");
    opt.start_bits = std::max(1L, bits_for_width(w));
    opt.max_bits = std::max(opt.max_bits, opt.start_bits);
  }
  return opt;
}

// --- poly -------------------------------------------------------------------

struct PolyInput {
  std::optional<RatPoly> rat;
  std::optional<RadPoly> rad;
  std::string name;
};

RatPoly read_poly_file(const std::string& path) {
  std::string text = read_file(path);
  std::vector<Rational> coeffs;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    Json j = Json::parse(text);
    if (!j.is_array()) throw ParseError("'" + path + "' must hold a coefficient array");
    for (const auto& c : j) {
      if (!c.is_string() && !c.is_number()) throw ParseError("coefficients must be numbers or strings");
      coeffs.push_back(Rational::parse(c.is_string() ? c.get<std::string>() : c.dump()));
    }
  } else {
    std::stringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      for (char& ch : line)
        if (ch == ',') ch = ' ';
      std::stringstream ls(line);
      std::string tok;
      while (ls >> tok) coeffs.push_back(Rational::parse(tok));
    }
  }
  if (coeffs.empty()) throw ParseError("no coefficients in '" + path + "'");
  return RatPoly(coeffs);
}

PolyInput poly_input(const std::string& which) {
  if (which == "q1") return {build_Q1(), std::nullopt, "Q1"};
  if (which == "q2") return {build_Q2(), std::nullopt, "Q2"};
  if (which == "z") return {std::nullopt, build_Z(), "Z"};
  if (which == "w") return {std::nullopt, build_W(), "W"};
  if (which == "r") return {std::nullopt, build_Rx(), "R"};
  return {read_poly_file(which), std::nullopt, which};
}

int run_poly(std::ostream& out, const std::string& op, const std::string& which, const std::string& range_text,
             const std::string& precision) {
  PolyInput in = poly_input(which);
  Rational width = precision.empty() ? Rational::pow2(-64) : parse_flag("precision", precision);
  if (width.sign() <= 0) throw DomainError("--precision must be positive");
  int digits = digits_for(width);
  out << in.name << "(x) = " << (in.rat ? to_string(*in.rat) : to_string(*in.rad)) << "\n";
  if (op == "resultant" || op == "discriminant") {
    if (in.rat) {
      Rational v = op == "resultant" ? sylvester_resultant(*in.rat, in.rat->derivative()) : discriminant(*in.rat);
      out << op << " exact: " << v.str() << "\n" << op << " decimal: " << v.decimal(digits) << "\n";
    } else {
      RadicalNumber v = op == "resultant" ? sylvester_resultant(*in.rad, in.rad->derivative()) : discriminant(*in.rad);
      out << op << " exact: " << v.str() << "\n" << op << " enclosure: " << interval_str(rad_enclose(v, width), digits)
          << "\n";
    }
    return kExitVerified;
  }
  if (op != "sturm-count" && op != "isolate") throw ParseError("unknown --op '" + op + "'");
  if (!in.rat) throw DomainError(op + " needs rational coefficients; " + in.name + " has radical ones");
  RealRange range = range_text.empty() ? RealRange::whole_line() : RealRange::parse(range_text);
  RootCount rc = count_real_roots(*in.rat, range);
  out << "distinct real roots in " << range.str() << ": " << rc.count << "\n";
  if (op == "isolate") {
    for (auto iv : isolate_real_roots(*in.rat)) {
      if (!iv.exact()) iv = refine_root(*in.rat, iv, width);
      bool lo_in = range.contains(iv.lo), hi_in = range.contains(iv.hi);
      if (!lo_in && !hi_in) continue;
      out << "  root " << (iv.exact() ? iv.lo.str() : "in (" + iv.lo.decimal(digits) + ", " + iv.hi.decimal(digits) + ")");
      if (lo_in != hi_in) out << " (interval meets a range end)";
      out << "\n";
    }
  }
  return kExitVerified;
}

// --- eval -------------------------------------------------------------------

struct EvalArgs {
  std::string expr, at, precision, theta, theta1, k, delta;
};

Rational flag_or(const std::string& name, const std::string& text, const Rational& fallback) {
  return text.empty() ? fallback : parse_flag(name, text);
}

int run_eval(std::ostream& out, const EvalArgs& a) {
  Rational width = a.precision.empty() ? Rational::pow2(-64) : parse_flag("precision", a.precision);
  if (width.sign() <= 0) throw DomainError("--precision must be positive");
  int digits = digits_for(width);
  auto need_at = [&]() {
    if (a.at.empty()) throw ParseError("--expr " + a.expr + " needs --at");
    return parse_flag("at", a.at);
  };
  auto print = [&](const std::string& label, const Interval& e) {
    out << label << " in " << interval_str(e, digits) << "\n";
    out << label << " exact bounds: [" << e.lo().str() << ", " << e.hi().str() << "]\n";
  };
  MinimalParams mp = paper_minimal_params();
  mp.theta = flag_or("theta", a.theta, mp.theta);
  mp.theta1 = flag_or("theta1", a.theta1, mp.theta1);
  mp.k = flag_or("k", a.k, mp.k);
  ShrinkerParams sp = paper_shrinker_params();
  sp.theta = flag_or("theta", a.theta, sp.theta);
  sp.theta1 = flag_or("theta1", a.theta1, sp.theta1);
  sp.delta = flag_or("delta", a.delta, sp.delta);

  const std::string& e = a.expr;
  if (e == "g1") {
    Rational x = need_at();
    print("g1(" + x.str() + ")", g1_point(x, width));
  } else if (e == "g2") {
    Rational x = need_at();
    print("g2(" + x.str() + ")", g2_point(x, width));
  } else if (e == "g2-limit") {
    print("lim g2", g2_limit(width));
  } else if (e == "c1") {
    Rational n = need_at();
    print("C1(" + n.str() + ")", C1_of(n, width));
  } else if (e == "c2") {
    print("C2", C2_enclosure(width));
  } else if (e == "c3") {
    Rational n = need_at();
    print("C3(" + n.str() + ", theta=" + mp.theta.str() + ")", C3_of(n, mp.theta, width));
  } else if (e == "c4") {
    print("C4(theta=" + sp.theta.str() + ")", C4_of(sp.theta, width));
  } else if (e == "coeff-minimal") {
    mp.validate();
    Rational n = need_at();
    CoefficientPair c = minimal_coeff_pair(mp, n, width);
    out << "parameters: theta=" << mp.theta.str() << " theta1=" << mp.theta1.str() << " k=" << mp.k.str() << "\n";
    print("coeff |grad A|^2 at n=" + n.str(), c.coeff_gradA);
    print("coeff (S-n)|grad A|^2 at n=" + n.str(), c.coeff_excess);
    print("endpoint a + (n/k) b", round_out(c.coeff_gradA + Interval(mp.delta(n)) * c.coeff_excess,
                                           std::max(1L, bits_for_width(width))));
  } else if (e == "coeff-shrinker") {
    sp.validate();
    CoefficientPair c = shrinker_coeff_pair(sp, width);
    out << "parameters: delta=" << sp.delta.str() << " theta=" << sp.theta.str() << " theta1=" << sp.theta1.str()
        << "\n";
    print("coeff |grad A|^2", c.coeff_gradA);
    print("coeff (|A|^2-1)|grad A|^2", c.coeff_excess);
    print("endpoint a + delta b", round_out(c.coeff_gradA + Interval(sp.delta) * c.coeff_excess,
                                           std::max(1L, bits_for_width(width))));
  } else {
    throw ParseError("unknown --expr '" + e + "'");
  }
  return kExitVerified;
}

// --- optimize ---------------------------------------------------------------

int run_optimize(std::ostream& out, bool minimal, const std::string& config_path, const std::string& out_dir) {
  SearchConfig cfg = minimal ? SearchConfig::default_minimal() : SearchConfig::default_shrinker();
  if (!config_path.empty()) cfg = SearchConfig::from_config(Config::load(config_path), cfg);
  SearchResult r = minimal ? minimize_k(cfg) : maximize_shrinker_delta(cfg);
  out << "objective: " << r.objective << "\n";
  out << "grid points: " << cfg.theta_grid.size() * cfg.theta1_grid.size() << " (" << r.frontier.size()
      << " feasible, " << r.infeasible.size() << " infeasible)\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  if (!r.best_constant) {
    out << "status: inconclusive\nno certified parameters\n";
    if (!out_dir.empty()) write_search_outputs(r, out_dir);
    return kExitInconclusive;
  }
  const auto& bp = *r.best_params;
  out << "best " << (minimal ? "k" : "delta") << ": " << r.best_constant->str() << " = "
      << r.best_constant->decimal(6) << "\n";
  out << "at theta=" << bp.at("theta").str() << " theta1=" << bp.at("theta1").str() << "\n";
  if (minimal) {
    bool below = r.best_constant < Rational(22);
    out << "improves on k = 22: " << (below ? "yes" : "no") << "\n";
  } else {
    out << "improves on delta = 1/21: " << (*r.best_constant > Rational(1, 21) ? "yes" : "no") << "\n";
  }
  out << "status: " << to_string(r.certificate->status().status) << "\n";
  if (!out_dir.empty()) {
    write_search_outputs(r, out_dir);
    out << "wrote " << out_dir << "/frontier.tsv, result.json, best.cert.json\n";
  } else {
    out << r.frontier_tsv();
  }
  return r.certificate->status().exit_code();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates for the second pinching inequalities", "pinchcert"};
  app.require_subcommand(1);

  std::string theta, theta1, k, delta, emit, precision;
  auto* vmin = app.add_subcommand("verify-minimal", "Certify the minimal-hypersurface claim");
  vmin->add_option("--theta", theta)->required();
  vmin->add_option("--theta1", theta1)->required();
  vmin->add_option("--k", k)->required();
  vmin->add_option("--emit-certs", emit, "Directory for certificate files");
  vmin->add_option("--precision", precision, "Starting enclosure width (default 2^-64)");

  auto* vshr = app.add_subcommand("verify-shrinker", "Certify the self-shrinker claim");
  vshr->add_option("--theta", theta)->required();
  vshr->add_option("--theta1", theta1)->required();
  vshr->add_option("--delta", delta)->required();
  vshr->add_option("--emit-certs", emit, "Directory for certificate files");
  vshr->add_option("--precision", precision, "Starting enclosure width (default 2^-64)");

  std::string config, out_dir;
  auto* omin = app.add_subcommand("optimize-minimal", "Minimize k over the parameter grid");
  auto* oshr = app.add_subcommand("optimize-shrinker", "Maximize delta over the parameter grid");
  for (auto* sc : {omin, oshr}) {
    sc->add_option("--config", config, "key = value search configuration")->check(CLI::ExistingFile);
    sc->add_option("--out", out_dir, "Directory for frontier.tsv, result.json, best.cert.json");
  }

  std::string op, poly, range;
  auto* pol = app.add_subcommand("poly", "Exact polynomial diagnostics");
  pol->add_option("--op", op)->required()->check(CLI::IsMember({"resultant", "discriminant", "sturm-count", "isolate"}));
  pol->add_option("--poly", poly, "q1, q2, z, w, r or a coefficient file (ascending)")->required();
  pol->add_option("--range", range, "Real range such as (-6:3) or [3:inf)");
  pol->add_option("--precision", precision, "Width for decimal output and root refinement");

  std::string cert_file;
  bool deep = false;
  auto* chk = app.add_subcommand("cert-check", "Replay a certificate file");
  chk->add_option("file", cert_file)->required();
  chk->add_flag("--deep", deep, "Also re-evaluate every recorded enclosure");

  EvalArgs ea;
  auto* ev = app.add_subcommand("eval", "Enclose an expression");
  ev->add_option("--expr", ea.expr)
      ->required()
      ->check(CLI::IsMember({"g1", "g2", "g2-limit", "c1", "c2", "c3", "c4", "coeff-minimal", "coeff-shrinker"}));
  ev->add_option("--at", ea.at, "Point x (g1, g2) or dimension n (c1, c3, coeff-minimal)");
  ev->add_option("--precision", ea.precision, "Enclosure width (default 2^-64)");
  ev->add_option("--theta", ea.theta);
  ev->add_option("--theta1", ea.theta1);
  ev->add_option("--k", ea.k);
  ev->add_option("--delta", ea.delta);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitVerified;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (vmin->parsed()) {
      MinimalParams p{parse_flag("theta", theta), parse_flag("theta1", theta1), parse_flag("k", k)};
      p.validate();
      out << "verify-minimal theta=" << p.theta.str() << " theta1=" << p.theta1.str() << " k=" << p.k.str()
          << " (pinching interval [n, n + n/k])\n";
      return report_verification(out, verify_minimal_theorem(p, options_for(precision)), emit, "minimal");
    }
    if (vshr->parsed()) {
      ShrinkerParams p{parse_flag("delta", delta), parse_flag("theta", theta), parse_flag("theta1", theta1)};
      p.validate();
      out << "verify-shrinker delta=" << p.delta.str() << " theta=" << p.theta.str() << " theta1=" << p.theta1.str()
          << " (pinching interval [1, 1 + delta])\n";
      return report_verification(out, verify_shrinker_theorem(p, options_for(precision)), emit, "shrinker");
    }
    if (omin->parsed() || oshr->parsed()) return run_optimize(out, omin->parsed(), config, out_dir);
    if (pol->parsed()) return run_poly(out, op, poly, range, precision);
    if (ev->parsed()) return run_eval(out, ea);
    if (chk->parsed()) {
      std::string text = read_file(cert_file);
      CertStatus st;
      try {
        st = check_certificate_text(text, deep);
      } catch (const ParseError& e) {
        out << "status: falsified\ndetail: rejected, " << e.what() << "\n";
        return kExitFalsified;
      }
      out << "status: " << to_string(st.status) << "\n";
      out << "detail: " << st.detail << "\n";
      out << "precision: " << precision_str(st.precision_used) << "\n";
      return st.exit_code();
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pinch
