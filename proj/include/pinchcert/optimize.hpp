#ifndef PINCHCERT_OPTIMIZE_HPP
#define PINCHCERT_OPTIMIZE_HPP

#include "pinchcert/certify.hpp"
#include "pinchcert/config.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pinch {

/// Search range on a lattice lo, lo + tol, ..., hi.
struct Bisection {
  Rational lo, hi, tol;
  void validate(const std::string& what) const;
};

struct SearchConfig {
  std::vector<Rational> theta_grid;
  std::vector<Rational> theta1_grid;
  Bisection k_bisection{Rational(15), Rational(40), Rational(1, 1000)};
  Bisection delta_bisection{Rational(1, 1000), Rational(1, 5), Rational(1, 10000)};
  CertifyOptions certify;
  /// Grid points evaluated concurrently; the merge is by grid index.
  int threads = 1;
  /// Monotonicity spot checks and the seed choosing their grid points.
  int spot_checks = 10;
  unsigned seed = 20240521;

  void validate() const;

  /// theta 0.80..0.90 plus 0.866, theta1 0.75..0.90.
  static SearchConfig default_minimal();
  /// theta 0.80..0.90 plus 0.836, theta1 0.75..0.90.
  static SearchConfig default_shrinker();
  /// Keys: theta_grid, theta1_grid, k_lo, k_hi, k_tol, delta_lo, delta_hi,
  /// delta_tol, x0, max_bits, threads, spot_checks, seed. Missing keys keep
  /// the defaults of `base`; unknown keys are errors.
  static SearchConfig from_config(const Config& c, SearchConfig base);
};

struct FrontierPoint {
  Rational theta, theta1;
  /// Best certified k (minimal) or delta (shrinker) at this grid point.
  Rational best;
  /// Nearest lattice value on the other side that did not verify, if any.
  std::optional<Rational> rejected;
  std::string rejected_status;
  int evaluations = 0;
};

struct InfeasiblePoint {
  Rational theta, theta1;
  std::string status;
};

struct SearchResult {
  std::string objective;  // "minimize-k" or "maximize-delta"
  std::optional<std::map<std::string, Rational>> best_params;
  std::optional<Rational> best_constant;
  /// Bundle certifying best_params.
  std::optional<SignCertificate> certificate;
  std::vector<FrontierPoint> frontier;
  std::vector<InfeasiblePoint> infeasible;
  bool monotone_checks_passed = true;
  std::vector<std::string> warnings;

  /// Tab-separated: theta, theta1, best, best_decimal, rejected, rejected_status, evaluations.
  std::string frontier_tsv() const;
  /// Deterministic summary without the certificate.
  Json summary() const;
  const FrontierPoint* find(const Rational& theta, const Rational& theta1) const;
};

CertStatus feasibility_minimal(const Rational& theta, const Rational& theta1, const Rational& k,
                               const CertifyOptions& opt = {});
CertStatus feasibility_shrinker(const Rational& theta, const Rational& theta1, const Rational& delta,
                                const CertifyOptions& opt = {});

/// Per grid point, bisects k downward to the feasibility boundary.
SearchResult minimize_k(const SearchConfig& config);
/// Per grid point, bisects delta upward to the feasibility boundary.
SearchResult maximize_shrinker_delta(const SearchConfig& config);

/// Writes frontier.tsv, result.json and best.cert.json into dir.
void write_search_outputs(const SearchResult& r, const std::string& dir);

}  // namespace pinch

#endif  // PINCHCERT_OPTIMIZE_HPP
