#ifndef PINCHCERT_CONFIG_HPP
#define PINCHCERT_CONFIG_HPP

#include "pinchcert/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace pinch {

/// Plain-text configuration: one `key = value` per line, `#` starts a
/// comment, blank lines are ignored. Numbers are exact rationals.
class Config {
 public:
  static Config parse(const std::string& text);
  static Config load(const std::string& path);

  bool has(const std::string& key) const { return entries_.count(key) > 0; }
  const std::string& raw(const std::string& key) const;
  Rational rational(const std::string& key) const;
  Rational rational_or(const std::string& key, const Rational& fallback) const;
  long integer_or(const std::string& key, long fallback) const;
  /// Comma-separated items, each a number or an inclusive range lo:hi:step.
  std::vector<Rational> grid(const std::string& key) const;

  /// Keys present in the file but absent from `known`; callers treat them as
  /// errors.
  std::vector<std::string> unknown_keys(const std::vector<std::string>& known) const;

 private:
  std::map<std::string, std::string> entries_;
};

/// Parses a grid string (see Config::grid).
std::vector<Rational> parse_grid(const std::string& text);

}  // namespace pinch

#endif  // PINCHCERT_CONFIG_HPP
