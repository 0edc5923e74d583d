#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torcov/elliptic.hpp"
#include "torcov/errors.hpp"
#include "torcov/hurwitz.hpp"
#include "torcov/qmpoly.hpp"
#include "torcov/siegel_veech.hpp"
#include "torcov/triple.hpp"

namespace py = pybind11;
using namespace torcov;

namespace {

using Coeffs = std::vector<std::string>;
using Terms = std::vector<std::pair<std::tuple<int, int, int>, std::string>>;

Coeffs out(const QSeries& s) { return serialize(s); }

QSeries in(const Coeffs& c) {
  if (c.empty()) throw PreconditionError("empty coefficient list");
  QSeries s(static_cast<int>(c.size()) - 1);
  for (size_t i = 0; i < c.size(); ++i) s[i] = parse_rational(c[i]);
  return s;
}

Terms terms(const QMPoly& p) {
  Terms t;
  for (const auto& [m, c] : p.terms()) t.emplace_back(std::tuple(m.a, m.b, m.c), to_string(c));
  return t;
}

}  // namespace

PYBIND11_MODULE(_torcov, m) {
  m.doc() = "exact torus cover counts and quasimodular fits";

  auto base = py::register_exception<Error>(m, "TorcovError", PyExc_ValueError);
  py::register_exception<FitError>(m, "FitError", base.ptr());
  py::register_exception<MismatchError>(m, "MismatchError", base.ptr());
  py::register_exception<BudgetError>(m, "BudgetError", base.ptr());

  m.def("count", [](const std::string& profile, int order, const std::string& variant) {
    return out(n_variant_series(parse_profile(profile), order, parse_variant(variant)));
  }, py::arg("profile"), py::arg("order") = 12, py::arg("variant") = "all");

  m.def("sv_count", [](const std::string& profile, int p, int order, const std::string& variant) {
    return out(c_variant_series(parse_profile(profile), p, order, parse_variant(variant)));
  }, py::arg("profile"), py::arg("p") = -1, py::arg("order") = 12, py::arg("variant") = "connected");

  m.def("brute_force", [](const std::string& profile, int d, const std::string& variant, double budget) {
    return to_string(brute_force_n(parse_profile(profile), d, parse_variant(variant), budget));
  }, py::arg("profile"), py::arg("d"), py::arg("variant") = "all", py::arg("budget") = kDefaultOracleBudget);

  m.def("eisenstein", [](int k, int order) { return out(eisenstein_series(k, order)); },
        py::arg("k"), py::arg("order"));

  m.def("fit", [](const Coeffs& c, int max_weight) { return terms(fit_quasimodular(in(c), max_weight)); },
        py::arg("coeffs"), py::arg("max_weight"));

  m.def("fit_string", [](const Coeffs& c, int max_weight) { return fit_quasimodular(in(c), max_weight).to_string(); },
        py::arg("coeffs"), py::arg("max_weight"));

  m.def("qm_series", [](const std::string& poly, int order) { return out(qm_to_series(QMPoly::parse(poly), order)); },
        py::arg("poly"), py::arg("order"));

  m.def("zeta0_z_power", [](int e, int order) { return zeta0_Z_power(e, order).to_string(); },
        py::arg("e"), py::arg("order") = 12);

  m.def("constant_term", [](const std::string& graph, const std::vector<int>& mexp, int order) {
    GlobalGraph g = GlobalGraph::parse(graph);
    EdgeExponents e = mexp.empty() ? EdgeExponents(g.edge_count(), 0) : mexp;
    return out(constant_term_graph(g, e, order));
  }, py::arg("graph"), py::arg("m") = std::vector<int>{}, py::arg("order") = 12);

  m.def("triple", [](const std::vector<int>& win, const std::vector<int>& wout, const std::string& mu, int completed) {
    VertexFunction F = VertexFunction::one();
    if (completed >= 1) F = VertexFunction::completed(completed);
    else if (!mu.empty()) F = VertexFunction::f(parse_profile(mu).at(0));
    return std::pair(to_string(a_number(win, wout, F)), to_string(a_prime(win, wout, F)));
  }, py::arg("win"), py::arg("wout"), py::arg("mu") = "", py::arg("completed") = 0);
}
