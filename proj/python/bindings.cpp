#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pinchcert/cli.hpp"
#include "pinchcert/optimize.hpp"

#include <sstream>

namespace py = pybind11;
using namespace pinch;

namespace {

std::vector<std::string> pair_of(const Interval& e) { return {e.lo().str(), e.hi().str()}; }

Rational width_from(const std::string& w) { return w.empty() ? Rational::pow2(-64) : Rational::parse(w); }

RatPoly poly_named(const std::string& name) {
  if (name == "q1") return build_Q1();
  if (name == "q2") return build_Q2();
  throw DomainError("rational polynomial name must be q1 or q2");
}

RatPoly poly_from(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  for (const auto& s : coeffs) c.push_back(Rational::parse(s));
  return RatPoly(c);
}

std::vector<Rational> grid_from(const std::vector<std::string>& g) {
  std::vector<Rational> out;
  for (const auto& s : g) out.push_back(Rational::parse(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact certificates for the second pinching inequalities (native core)";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("verify_minimal", [](const std::string& theta, const std::string& theta1, const std::string& k) {
    MinimalParams p{Rational::parse(theta), Rational::parse(theta1), Rational::parse(k)};
    py::gil_scoped_release nogil;
    return verify_minimal_theorem(p).dump();
  }, py::arg("theta"), py::arg("theta1"), py::arg("k"));

  m.def("verify_shrinker", [](const std::string& theta, const std::string& theta1, const std::string& delta) {
    ShrinkerParams p{Rational::parse(delta), Rational::parse(theta), Rational::parse(theta1)};
    py::gil_scoped_release nogil;
    return verify_shrinker_theorem(p).dump();
  }, py::arg("theta"), py::arg("theta1"), py::arg("delta"));

  m.def("check_certificate", [](const std::string& text, bool deep) {
    CertStatus st = check_certificate_text(text, deep);
    return std::make_pair(to_string(st.status), st.detail);
  }, py::arg("text"), py::arg("deep") = false);

  m.def("poly_coefficients", [](const std::string& name) {
    std::vector<std::string> out;
    RatPoly p = poly_named(name);
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
  }, py::arg("name"), "Ascending coefficients of q1 or q2 as exact fractions");

  m.def("resultant_with_derivative", [](const std::vector<std::string>& coeffs) {
    RatPoly p = poly_from(coeffs);
    return sylvester_resultant(p, p.derivative()).str();
  }, py::arg("coeffs"));

  m.def("count_real_roots", [](const std::vector<std::string>& coeffs, const std::string& range) {
    return count_real_roots(poly_from(coeffs), range.empty() ? RealRange::whole_line() : RealRange::parse(range)).count;
  }, py::arg("coeffs"), py::arg("range") = "");

  m.def("g2_limit", [](const std::string& width) { return pair_of(g2_limit(width_from(width))); },
        py::arg("width") = "");
  m.def("C4", [](const std::string& theta, const std::string& width) {
    return pair_of(C4_of(Rational::parse(theta), width_from(width)));
  }, py::arg("theta"), py::arg("width") = "");
  m.def("shrinker_coefficients", [](const std::string& theta, const std::string& theta1, const std::string& delta,
                                     const std::string& width) {
    CoefficientPair c =
        shrinker_coeff_pair({Rational::parse(delta), Rational::parse(theta), Rational::parse(theta1)}, width_from(width));
    return std::make_pair(pair_of(c.coeff_gradA), pair_of(c.coeff_excess));
  }, py::arg("theta"), py::arg("theta1"), py::arg("delta"), py::arg("width") = "");

  m.def("optimize", [](const std::string& objective, const std::vector<std::string>& theta_grid,
                       const std::vector<std::string>& theta1_grid, int spot_checks) {
    bool minimal = objective == "minimize-k";
    if (!minimal && objective != "maximize-delta") throw DomainError("objective must be minimize-k or maximize-delta");
    SearchConfig cfg = minimal ? SearchConfig::default_minimal() : SearchConfig::default_shrinker();
    if (!theta_grid.empty()) cfg.theta_grid = grid_from(theta_grid);
    if (!theta1_grid.empty()) cfg.theta1_grid = grid_from(theta1_grid);
    cfg.spot_checks = spot_checks;
    py::gil_scoped_release nogil;
    SearchResult r = minimal ? minimize_k(cfg) : maximize_shrinker_delta(cfg);
    return std::make_pair(r.summary().dump(), r.frontier_tsv());
  }, py::arg("objective"), py::arg("theta_grid") = std::vector<std::string>{},
     py::arg("theta1_grid") = std::vector<std::string>{}, py::arg("spot_checks") = 10);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    std::vector<std::string> full{"pinchcert"};
    full.insert(full.end(), args.begin(), args.end());
    int code = run_cli(full, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
