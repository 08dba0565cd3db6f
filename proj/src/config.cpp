#include "pinchcert/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pinch {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace

Config Config::parse(const std::string& text) {
  Config c;
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ParseError("config line " + std::to_string(lineno) + ": empty key or value");
    if (!c.entries_.emplace(key, value).second)
      throw ParseError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
  }
  return c;
}

Config Config::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

const std::string& Config::raw(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw ParseError("config key '" + key + "' missing");
  return it->second;
}

Rational Config::rational(const std::string& key) const { return Rational::parse(raw(key)); }

Rational Config::rational_or(const std::string& key, const Rational& fallback) const {
  return has(key) ? rational(key) : fallback;
}

long Config::integer_or(const std::string& key, long fallback) const {
  if (!has(key)) return fallback;
  Rational v = rational(key);
  if (!v.is_integer() || !v.num().fits_slong_p()) throw ParseError("config key '" + key + "' must be an integer");
  return v.num().get_si();
}

std::vector<Rational> Config::grid(const std::string& key) const { return parse_grid(raw(key)); }

std::vector<std::string> Config::unknown_keys(const std::vector<std::string>& known) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_)
    if (std::find(known.begin(), known.end(), k) == known.end()) out.push_back(k);
  return out;
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) throw ParseError("empty grid item in '" + text + "'");
    auto parts = split(item, ':');
    if (parts.size() == 1) {
      out.push_back(Rational::parse(parts[0]));
      continue;
    }
    if (parts.size() != 3) throw ParseError("grid range must be lo:hi:step, got '" + item + "'");
    Rational lo = Rational::parse(parts[0]), hi = Rational::parse(parts[1]), step = Rational::parse(parts[2]);
    if (step.sign() <= 0 || hi < lo) throw ParseError("bad grid range '" + item + "'");
    for (Rational v = lo; v <= hi; v += step) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pinch
