#include "doctest.h"

#include "pinchcert/cli.hpp"
#include "pinchcert/optimize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pinch;
namespace fs = std::filesystem;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pinchcert");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("pinchcert-test-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

SearchConfig single(SearchConfig base, const char* theta, const char* theta1) {
  base.theta_grid = {R(theta)};
  base.theta1_grid = {R(theta1)};
  base.spot_checks = 1;
  return base;
}

}  // namespace

TEST_SUITE("optimize") {
  TEST_CASE("config files") {
    Config c = Config::parse("# search\n theta_grid = 0.80:0.82:0.01, 0.866 \n\nk_tol = 1/500  # coarse\nthreads=2\n");
    std::vector<Rational> g = c.grid("theta_grid");
    REQUIRE(g.size() == 4);
    CHECK(g[0] == R("0.8"));
    CHECK(g[2] == R("0.82"));
    CHECK(g[3] == R("0.866"));
    CHECK(c.rational("k_tol") == Rational(1, 500));
    CHECK(c.integer_or("threads", 1) == 2);
    CHECK(c.integer_or("seed", 9) == 9);
    CHECK(c.unknown_keys({"theta_grid", "k_tol"}) == std::vector<std::string>{"threads"});
    CHECK_THROWS_AS(Config::parse("a = 1\na = 2\n"), ParseError);
    CHECK_THROWS_AS(Config::parse("just words\n"), ParseError);
    CHECK_THROWS_AS(Config::parse("x = 0.1.2\n").rational("x"), ParseError);
    CHECK_THROWS_AS(parse_grid("0.9:0.8:0.01"), ParseError);
    CHECK_THROWS_AS(parse_grid("0.8:0.9:0"), ParseError);
    CHECK(parse_grid("0.5, 0.5, 0.25") == std::vector<Rational>{R("0.25"), R("0.5")});

    SearchConfig s = SearchConfig::from_config(Config::parse("theta_grid = 0.85\ntheta1_grid = 0.78\nk_hi = 30\n"),
                                               SearchConfig::default_minimal());
    CHECK(s.theta_grid == std::vector<Rational>{R("0.85")});
    CHECK(s.k_bisection.hi == Rational(30));
    CHECK(s.k_bisection.lo == Rational(15));
    CHECK_THROWS_AS(SearchConfig::from_config(Config::parse("thetta_grid = 0.8\n"), SearchConfig::default_minimal()),
                    ParseError);
    SearchConfig bad = SearchConfig::default_minimal();
    bad.theta_grid.clear();
    CHECK_THROWS(bad.validate());
    bad = SearchConfig::default_minimal();
    bad.k_bisection.tol = Rational(0);
    CHECK_THROWS(bad.validate());
    bad = SearchConfig::default_shrinker();
    bad.delta_bisection.lo = bad.delta_bisection.hi;
    CHECK_THROWS(bad.validate());
    bad = SearchConfig::default_minimal();
    bad.theta_grid.push_back(Rational(1));
    CHECK_THROWS(bad.validate());
  }

  TEST_CASE("default grids") {
    SearchConfig m = SearchConfig::default_minimal(), s = SearchConfig::default_shrinker();
    CHECK(m.theta_grid.size() == 12);
    CHECK(m.theta1_grid.size() == 16);
    CHECK(std::count(m.theta_grid.begin(), m.theta_grid.end(), R("0.866")) == 1);
    CHECK(std::count(m.theta1_grid.begin(), m.theta1_grid.end(), R("0.83")) == 1);
    CHECK(std::count(s.theta_grid.begin(), s.theta_grid.end(), R("0.836")) == 1);
    CHECK(std::count(s.theta1_grid.begin(), s.theta1_grid.end(), R("0.81")) == 1);
    CHECK(m.k_bisection.tol == Rational(1, 1000));
    CHECK(s.delta_bisection.tol == Rational(1, 10000));
  }

  TEST_CASE("feasibility oracles") {
    CHECK(feasibility_minimal(R("0.866"), R("0.83"), Rational(22)).verified());
    CHECK(feasibility_minimal(R("0.866"), R("0.83"), Rational(1000000)).verified());
    CHECK(feasibility_minimal(R("0.866"), R("0.83"), Rational(1)).status != Verdict::verified);
    // Not asserted anywhere; recorded here so a change shows up.
    CHECK(feasibility_minimal(R("0.5"), R("0.5"), Rational(22)).status == Verdict::falsified);
    CHECK(feasibility_minimal(R("0.5"), R("0.5"), Rational(1000000)).verified());
    CHECK(feasibility_shrinker(R("0.836"), R("0.81"), Rational(1, 21)).verified());
    CHECK(feasibility_shrinker(R("0.836"), R("0.81"), R("0.022")).verified());
    CHECK(feasibility_shrinker(R("0.836"), R("0.81"), R("0.2")).status == Verdict::falsified);
    CHECK_THROWS_AS(feasibility_minimal(Rational(1), R("0.83"), Rational(22)), DomainError);
  }

  TEST_CASE("shrinker search at the reference point") {
    SearchResult r = maximize_shrinker_delta(single(SearchConfig::default_shrinker(), "0.836", "0.81"));
    REQUIRE(r.best_constant.has_value());
    CHECK(*r.best_constant >= Rational(1, 21));
    CHECK(*r.best_constant > R("0.022"));
    CHECK(*r.best_constant < Rational(1, 20));
    REQUIRE(r.certificate.has_value());
    CHECK(check_certificate_text(r.certificate->dump(), true).verified());
    const FrontierPoint* fp = r.find(R("0.836"), R("0.81"));
    REQUIRE(fp != nullptr);
    REQUIRE(fp->rejected.has_value());
    CHECK(*fp->rejected == fp->best + Rational(1, 10000));
    CHECK(r.monotone_checks_passed);

    SearchResult worse = maximize_shrinker_delta(single(SearchConfig::default_shrinker(), "0.99", "0.81"));
    if (worse.best_constant) CHECK(*worse.best_constant < *r.best_constant);
  }

  TEST_CASE("minimal search at a single grid point") {
    SearchResult r = minimize_k(single(SearchConfig::default_minimal(), "0.866", "0.83"));
    REQUIRE(r.best_constant.has_value());
    CHECK(*r.best_constant <= Rational(22));
    CHECK(*r.best_constant > Rational(21));
    CHECK(r.best_params->at("theta") == R("0.866"));
    CHECK(check_certificate_text(r.certificate->dump(), true).verified());
    CHECK(r.monotone_checks_passed);
    const FrontierPoint* fp = r.find(R("0.866"), R("0.83"));
    REQUIRE(fp != nullptr);
    REQUIRE(fp->rejected.has_value());
    CHECK(*fp->rejected == fp->best - Rational(1, 1000));
    CHECK(!feasibility_minimal(R("0.866"), R("0.83"), *fp->rejected).verified());

    SearchConfig hot = single(SearchConfig::default_minimal(), "0.99", "0.83");
    SearchResult worse = minimize_k(hot);
    if (worse.best_constant) CHECK(*worse.best_constant > *r.best_constant);
    else CHECK(worse.infeasible.size() == 1);
  }

  TEST_CASE("infeasible grids give an empty frontier") {
    SearchConfig c = single(SearchConfig::default_shrinker(), "0.99", "0.5");
    c.delta_bisection = {R("0.2"), R("0.3"), R("0.01")};
    SearchResult r = maximize_shrinker_delta(c);
    CHECK(!r.best_constant.has_value());
    CHECK(r.frontier.empty());
    CHECK(r.infeasible.size() == 1);
    CHECK(r.summary()["best_constant"].is_null());
  }

  TEST_CASE("searches are deterministic and thread-independent") {
    SearchConfig c = SearchConfig::default_shrinker();
    c.theta_grid = {R("0.82"), R("0.836"), R("0.85")};
    c.theta1_grid = {R("0.78"), R("0.81")};
    SearchResult a = maximize_shrinker_delta(c), b = maximize_shrinker_delta(c);
    c.threads = 3;
    SearchResult t = maximize_shrinker_delta(c);
    CHECK(a.summary().dump() == b.summary().dump());
    CHECK(a.frontier_tsv() == b.frontier_tsv());
    CHECK(a.summary().dump() == t.summary().dump());
    CHECK(a.certificate->dump() == t.certificate->dump());
    CHECK(a.frontier.size() == 6);
    // Frontier rows come out in grid order.
    CHECK(a.frontier.front().theta == R("0.82"));
    CHECK(a.frontier.back().theta == R("0.85"));

    fs::path dir = scratch("search");
    write_search_outputs(a, dir.string());
    CHECK(slurp(dir / "frontier.tsv") == a.frontier_tsv());
    Json res = Json::parse(slurp(dir / "result.json"));
    CHECK(res["objective"] == "maximize-delta");
    CHECK(check_certificate_text(slurp(dir / "best.cert.json"), true).verified());
    std::string tsv = a.frontier_tsv();
    CHECK(tsv.substr(0, tsv.find('\n')) ==
          "theta\ttheta1\tbest\tbest_decimal\trejected\trejected_status\tevaluations");
  }
}

TEST_SUITE("cli") {
  TEST_CASE("verify verbs and exit codes") {
    Run ok = cli({"verify-minimal", "--theta", "0.866", "--theta1", "0.83", "--k", "22"});
    CHECK(ok.code == kExitVerified);
    for (const char* part : {"smalln-2-lo", "smalln-5-hi", "case1", "case2", "majorant", "q1-negative", "limit"})
      CHECK(ok.out.find(part) != std::string::npos);
    CHECK(cli({"verify-minimal", "--theta", "0.866", "--theta1", "0.83", "--k", "1"}).code == kExitFalsified);
    CHECK(cli({"verify-shrinker", "--theta", "0.836", "--theta1", "0.81", "--delta", "1/21"}).code == kExitVerified);
    CHECK(cli({"verify-shrinker", "--theta", "0.836", "--theta1", "0.81", "--delta", "0.2"}).code == kExitFalsified);
    CHECK(cli({"verify-shrinker", "--theta", "1.5", "--theta1", "0.81", "--delta", "0.2"}).code == kExitUsage);
    Run a = cli({"verify-shrinker", "--theta", "0.836", "--theta1", "0.81", "--delta", "0.022"});
    Run b = cli({"verify-shrinker", "--theta", "0.836", "--theta1", "0.81", "--delta", "0.022"});
    CHECK(a.out == b.out);
  }

  TEST_CASE("usage errors") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({"verify-minimal", "--theta", "0.866", "--theta1", "0.83"}).code == kExitUsage);
    CHECK(cli({"verify-minimal", "--theta", "0.866", "--theta1", "0.83", "--k", "22", "--bogus", "1"}).code ==
          kExitUsage);
    CHECK(cli({"verify-minimal", "--theta", "abc", "--theta1", "0.83", "--k", "22"}).code == kExitUsage);
    CHECK(cli({"poly", "--op", "factor", "--poly", "q1"}).code == kExitUsage);
    CHECK(cli({"poly", "--op", "sturm-count", "--poly", "z"}).code == kExitUsage);
    CHECK(cli({"eval", "--expr", "g1"}).code == kExitUsage);
    CHECK(cli({"eval", "--expr", "g9", "--at", "6"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitVerified);
  }

  TEST_CASE("poly verb") {
    Run r = cli({"poly", "--op", "resultant", "--poly", "q1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("resultant decimal: -32.12") != std::string::npos);
    Run r2 = cli({"poly", "--op", "resultant", "--poly", "q2"});
    CHECK(r2.out.find("resultant decimal: -0.144") != std::string::npos);
    CHECK(cli({"poly", "--op", "sturm-count", "--poly", "q1", "--range", "-6:3"}).out.find(": 5\n") !=
          std::string::npos);
    CHECK(cli({"poly", "--op", "sturm-count", "--poly", "q1", "--range", "[3:inf)"}).out.find(": 0\n") !=
          std::string::npos);
    CHECK(cli({"poly", "--op", "sturm-count", "--poly", "q2"}).out.find(": 3\n") != std::string::npos);
    CHECK(cli({"poly", "--op", "discriminant", "--poly", "z"}).code == 0);

    fs::path dir = scratch("poly");
    write(dir / "p.txt", "-2 0 1  # x^2 - 2\n");
    Run iso = cli({"poly", "--op", "isolate", "--poly", (dir / "p.txt").string(), "--precision", "1e-6"});
    CHECK(iso.code == 0);
    CHECK(iso.out.find("root in (-1.414") != std::string::npos);
    CHECK(iso.out.find("root in (1.414") != std::string::npos);
    write(dir / "p.json", "[\"6\", -5, 1]");
    Run js = cli({"poly", "--op", "isolate", "--poly", (dir / "p.json").string()});
    CHECK(js.out.find("root 2\n") != std::string::npos);
    CHECK(js.out.find("root 3\n") != std::string::npos);
    CHECK(cli({"poly", "--op", "isolate", "--poly", (dir / "missing.txt").string()}).code == kExitUsage);
  }

  TEST_CASE("eval verb") {
    Run lim = cli({"eval", "--expr", "g2-limit", "--precision", "1e-6"});
    CHECK(lim.code == 0);
    CHECK(lim.out.find("lim g2 in [-0.0437") != std::string::npos);
    CHECK(cli({"eval", "--expr", "c4", "--theta", "0.836"}).out.find("in [1.06621783") != std::string::npos);
    CHECK(cli({"eval", "--expr", "g1", "--at", "6"}).out.find("g1(6) in [-0.03169") != std::string::npos);
    CHECK(cli({"eval", "--expr", "coeff-shrinker", "--delta", "1/21"}).out.find("coeff |grad A|^2 in [-0.00156") !=
          std::string::npos);
    Run cm = cli({"eval", "--expr", "coeff-minimal", "--at", "6"});
    CHECK(cm.code == 0);
    CHECK(cm.out.find("theta=433/500 theta1=83/100 k=22") != std::string::npos);
    CHECK(cli({"eval", "--expr", "c1", "--at", "2"}).code == kExitUsage);
  }

  TEST_CASE("certificate files") {
    fs::path dir = scratch("certs");
    Run v = cli({"verify-shrinker", "--theta", "0.836", "--theta1", "0.81", "--delta", "1/21", "--emit-certs",
                 dir.string()});
    REQUIRE(v.code == 0);
    REQUIRE(fs::exists(dir / "shrinker.cert.json"));
    CHECK(fs::exists(dir / "parts" / "c4.cert.json"));
    CHECK(cli({"cert-check", (dir / "shrinker.cert.json").string()}).code == kExitVerified);
    CHECK(cli({"cert-check", "--deep", (dir / "parts" / "gradA.cert.json").string()}).code == kExitVerified);

    Json doc = Json::parse(slurp(dir / "shrinker.cert.json"));
    doc["parts"]["gradA"]["claim"]["sign"] = "positive";
    write(dir / "tampered.cert", doc.dump());
    CHECK(cli({"cert-check", (dir / "tampered.cert").string()}).code == kExitFalsified);
    write(dir / "garbage.cert", "{ not json");
    CHECK(cli({"cert-check", (dir / "garbage.cert").string()}).code == kExitFalsified);
    CHECK(cli({"cert-check", (dir / "absent.cert").string()}).code == kExitUsage);

    fs::path m = scratch("certs-min");
    CHECK(cli({"verify-minimal", "--theta", "0.85", "--theta1", "0.78", "--k", "22", "--emit-certs", m.string()})
              .code == 0);
    CHECK(cli({"cert-check", "--deep", (m / "minimal.cert.json").string()}).code == kExitVerified);
  }

  TEST_CASE("optimize verbs") {
    fs::path dir = scratch("opt");
    write(dir / "search.cfg", "theta_grid = 0.836\ntheta1_grid = 0.80:0.81:0.01\nspot_checks = 2\n");
    Run r = cli({"optimize-shrinker", "--config", (dir / "search.cfg").string(), "--out", (dir / "out").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("best delta: ") != std::string::npos);
    CHECK(fs::exists(dir / "out" / "frontier.tsv"));
    CHECK(cli({"cert-check", (dir / "out" / "best.cert.json").string()}).code == 0);
    write(dir / "bad.cfg", "theta_grid = 0.836\nbogus = 1\n");
    CHECK(cli({"optimize-shrinker", "--config", (dir / "bad.cfg").string()}).code == kExitUsage);
    CHECK(cli({"optimize-minimal", "--config", (dir / "nope.cfg").string()}).code == kExitUsage);
  }
}
