#include "pinchcert/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

namespace pinch {

void Bisection::validate(const std::string& what) const {
  if (!(lo < hi)) throw DomainError(what + " bisection needs lo < hi");
  if (tol.sign() <= 0) throw DomainError(what + " tolerance must be positive");
}

void SearchConfig::validate() const {
  if (theta_grid.empty() || theta1_grid.empty()) throw DomainError("search grids must be nonempty");
  for (const auto& t : theta_grid)
    if (t.sign() <= 0 || t >= Rational(1)) throw DomainError("theta grid values must lie in (0, 1)");
  for (const auto& t : theta1_grid)
    if (t.sign() <= 0 || t > Rational(1)) throw DomainError("theta1 grid values must lie in (0, 1]");
  k_bisection.validate("k");
  delta_bisection.validate("delta");
  if (delta_bisection.lo.sign() <= 0) throw DomainError("delta bisection must start above 0");
  if (threads < 1) throw DomainError("threads must be at least 1");
  if (spot_checks < 0) throw DomainError("spot_checks must be nonnegative");
}

namespace {

std::vector<Rational> steps(const char* lo, const char* hi, const char* step, const char* extra) {
  auto g = parse_grid(std::string(lo) + ":" + hi + ":" + step + "," + extra);
  return g;
}

}  // namespace

SearchConfig SearchConfig::default_minimal() {
  SearchConfig c;
  c.theta_grid = steps("0.80", "0.90", "0.01", "0.866");
  c.theta1_grid = steps("0.75", "0.90", "0.01", "0.83");
  return c;
}

SearchConfig SearchConfig::default_shrinker() {
  SearchConfig c;
  c.theta_grid = steps("0.80", "0.90", "0.01", "0.836");
  c.theta1_grid = steps("0.75", "0.90", "0.01", "0.81");
  return c;
}

SearchConfig SearchConfig::from_config(const Config& c, SearchConfig base) {
  static const std::vector<std::string> known{"theta_grid", "theta1_grid", "k_lo",     "k_hi",        "k_tol",
                                              "delta_lo",   "delta_hi",    "delta_tol", "x0",         "max_bits",
                                              "threads",    "spot_checks", "seed"};
  auto unknown = c.unknown_keys(known);
  if (!unknown.empty()) throw ParseError("unknown config key '" + unknown.front() + "'");
  if (c.has("theta_grid")) base.theta_grid = c.grid("theta_grid");
  if (c.has("theta1_grid")) base.theta1_grid = c.grid("theta1_grid");
  base.k_bisection.lo = c.rational_or("k_lo", base.k_bisection.lo);
  base.k_bisection.hi = c.rational_or("k_hi", base.k_bisection.hi);
  base.k_bisection.tol = c.rational_or("k_tol", base.k_bisection.tol);
  base.delta_bisection.lo = c.rational_or("delta_lo", base.delta_bisection.lo);
  base.delta_bisection.hi = c.rational_or("delta_hi", base.delta_bisection.hi);
  base.delta_bisection.tol = c.rational_or("delta_tol", base.delta_bisection.tol);
  base.certify.x0 = c.rational_or("x0", base.certify.x0);
  base.certify.max_bits = c.integer_or("max_bits", base.certify.max_bits);
  base.threads = static_cast<int>(c.integer_or("threads", base.threads));
  base.spot_checks = static_cast<int>(c.integer_or("spot_checks", base.spot_checks));
  base.seed = static_cast<unsigned>(c.integer_or("seed", base.seed));
  base.validate();
  return base;
}

CertStatus feasibility_minimal(const Rational& theta, const Rational& theta1, const Rational& k,
                               const CertifyOptions& opt) {
  return verify_minimal_theorem({theta, theta1, k}, opt).status();
}

CertStatus feasibility_shrinker(const Rational& theta, const Rational& theta1, const Rational& delta,
                                const CertifyOptions& opt) {
  return verify_shrinker_theorem({delta, theta, theta1}, opt).status();
}

namespace {

enum class Goal { minimize_k, maximize_delta };

struct GridPoint {
  Rational theta, theta1;
};

struct Outcome {
  std::optional<FrontierPoint> point;
  std::string infeasible_status;
};

CertStatus feasible(Goal g, const GridPoint& p, const Rational& v, const CertifyOptions& opt) {
  try {
    return g == Goal::minimize_k ? feasibility_minimal(p.theta, p.theta1, v, opt)
                                 : feasibility_shrinker(p.theta, p.theta1, v, opt);
  } catch (const DomainError& e) {
    CertStatus st;
    st.detail = e.what();
    return st;
  }
}

// Lattice value lo + m * tol, clamped to hi.
Rational lattice(const Bisection& b, const mpz_class& m) { return min(b.hi, b.lo + b.tol * Rational(m, 1)); }

Outcome search_point(Goal g, const GridPoint& p, const SearchConfig& cfg) {
  const Bisection& b = g == Goal::minimize_k ? cfg.k_bisection : cfg.delta_bisection;
  // The easy end: large k, small delta.
  mpz_class m_top = ((b.hi - b.lo) / b.tol).ceil();
  mpz_class m_easy = g == Goal::minimize_k ? m_top : mpz_class(0);
  mpz_class m_hard = g == Goal::minimize_k ? mpz_class(0) : m_top;
  Outcome out;
  FrontierPoint fp{p.theta, p.theta1, Rational(0), std::nullopt, "", 0};

  CertStatus st = feasible(g, p, lattice(b, m_easy), cfg.certify);
  ++fp.evaluations;
  if (!st.verified()) {
    out.infeasible_status = to_string(st.status) + ": " + st.detail;
    return out;
  }
  st = feasible(g, p, lattice(b, m_hard), cfg.certify);
  ++fp.evaluations;
  if (st.verified()) {
    fp.best = lattice(b, m_hard);
    out.point = fp;
    return out;
  }
  std::string bad_status = to_string(st.status);
  while (abs(m_easy - m_hard) > 1) {
    mpz_class mid = (m_easy + m_hard) / 2;
    CertStatus s = feasible(g, p, lattice(b, mid), cfg.certify);
    ++fp.evaluations;
    if (s.verified()) {
      m_easy = mid;
    } else {
      m_hard = mid;
      bad_status = to_string(s.status);
    }
  }
  fp.best = lattice(b, m_easy);
  fp.rejected = lattice(b, m_hard);
  fp.rejected_status = bad_status;
  out.point = fp;
  return out;
}

SearchResult search(Goal g, const SearchConfig& cfg) {
  cfg.validate();
  std::vector<GridPoint> grid;
  for (const auto& t : cfg.theta_grid)
    for (const auto& t1 : cfg.theta1_grid) grid.push_back({t, t1});

  std::vector<Outcome> outcomes(grid.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < grid.size(); i = next++) outcomes[i] = search_point(g, grid[i], cfg);
  };
  if (cfg.threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < cfg.threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SearchResult r;
  r.objective = g == Goal::minimize_k ? "minimize-k" : "maximize-delta";
  const FrontierPoint* best = nullptr;
  for (size_t i = 0; i < grid.size(); ++i) {
    if (!outcomes[i].point) {
      r.infeasible.push_back({grid[i].theta, grid[i].theta1, outcomes[i].infeasible_status});
      continue;
    }
    r.frontier.push_back(*outcomes[i].point);
  }
  for (const auto& fp : r.frontier) {
    bool better = !best || (g == Goal::minimize_k ? fp.best < best->best : fp.best > best->best);
    if (better) best = &fp;
  }
  if (!best) {
    r.warnings.push_back("no grid point is feasible at the easy end of the bisection range");
    return r;
  }

  // Spot checks of the monotonicity the bisection relies on.
  std::vector<size_t> idx(r.frontier.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::mt19937 rng(cfg.seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(std::min(idx.size(), static_cast<size_t>(cfg.spot_checks)));
  std::sort(idx.begin(), idx.end());
  for (size_t i : idx) {
    const FrontierPoint& fp = r.frontier[i];
    Rational easier = g == Goal::minimize_k ? fp.best * Rational(2) : fp.best / Rational(2);
    if (!feasible(g, {fp.theta, fp.theta1}, easier, cfg.certify).verified()) {
      r.monotone_checks_passed = false;
      r.warnings.push_back("monotonicity spot check failed at theta = " + fp.theta.str() +
                           ", theta1 = " + fp.theta1.str() + "; bisection results are grid-only");
    }
  }

  r.best_constant = best->best;
  if (g == Goal::minimize_k) {
    MinimalParams mp{best->theta, best->theta1, best->best};
    r.best_params = mp.as_map();
    r.certificate = verify_minimal_theorem(mp, cfg.certify);
  } else {
    ShrinkerParams sp{best->best, best->theta, best->theta1};
    r.best_params = sp.as_map();
    r.certificate = verify_shrinker_theorem(sp, cfg.certify);
  }
  if (!r.certificate->verified()) throw std::logic_error("best search point failed to re-verify");
  return r;
}

}  // namespace

SearchResult minimize_k(const SearchConfig& config) { return search(Goal::minimize_k, config); }
SearchResult maximize_shrinker_delta(const SearchConfig& config) { return search(Goal::maximize_delta, config); }

const FrontierPoint* SearchResult::find(const Rational& theta, const Rational& theta1) const {
  for (const auto& fp : frontier)
    if (fp.theta == theta && fp.theta1 == theta1) return &fp;
  return nullptr;
}

std::string SearchResult::frontier_tsv() const {
  std::string out = "theta\ttheta1\tbest\tbest_decimal\trejected\trejected_status\tevaluations\n";
  for (const auto& fp : frontier) {
    out += fp.theta.str() + "\t" + fp.theta1.str() + "\t" + fp.best.str() + "\t" + fp.best.decimal(6) + "\t" +
           (fp.rejected ? fp.rejected->str() : "-") + "\t" + (fp.rejected ? fp.rejected_status : "-") + "\t" +
           std::to_string(fp.evaluations) + "\n";
  }
  return out;
}

Json SearchResult::summary() const {
  Json j;
  j["objective"] = objective;
  j["best_params"] = best_params ? to_json(*best_params) : Json(nullptr);
  j["best_constant"] = best_constant ? Json(best_constant->str()) : Json(nullptr);
  j["best_constant_decimal"] = best_constant ? Json(best_constant->decimal(6)) : Json(nullptr);
  j["certificate_status"] = certificate ? Json(to_string(certificate->status().status)) : Json(nullptr);
  j["frontier_size"] = frontier.size();
  Json inf = Json::array();
  for (const auto& p : infeasible) inf.push_back({{"theta", p.theta.str()}, {"theta1", p.theta1.str()}, {"status", p.status}});
  j["infeasible"] = inf;
  j["monotone_checks_passed"] = monotone_checks_passed;
  j["warnings"] = warnings;
  return j;
}

void write_search_outputs(const SearchResult& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream f(std::filesystem::path(dir) / name);
    if (!f) throw ParseError("cannot write " + name + " in '" + dir + "'");
    f << text;
  };
  write("frontier.tsv", r.frontier_tsv());
  write("result.json", r.summary().dump(2) + "\n");
  if (r.certificate) write("best.cert.json", r.certificate->dump());
}

}  // namespace pinch
