#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "locgad/report.hpp"

namespace py = pybind11;
using namespace locgad;

namespace {

struct Input {
  Polynomial form;
  Ring ring;
};

Input parse(const std::string& form, const std::vector<std::string>& vars) {
  if (vars.empty()) {
    Polynomial f = parse_form(form);
    return {f, Ring::standard(f.nvars())};
  }
  Ring ring{vars};
  return {parse_polynomial(form, ring), ring};
}

DriverOptions options(const Ring& ring, const std::string& strategy, std::uint64_t seed, const std::string& charts,
                      std::size_t minor_batch, std::size_t budget, double timeout) {
  DriverOptions o;
  o.strategy = parse_strategy(strategy);
  o.seed = seed;
  o.minor_batch = minor_batch;
  o.budget = budget;
  o.timeout_seconds = timeout;
  if (charts == "all") {
    o.charts = ChartMode::All;
  } else if (charts == "generic") {
    o.charts = ChartMode::Generic;
  } else {
    o.charts = ChartMode::Single;
    auto it = std::find(ring.names.begin(), ring.names.end(), charts);
    if (it == ring.names.end()) throw Error("unknown chart '" + charts + "'");
    o.chart = static_cast<std::size_t>(it - ring.names.begin());
  }
  return o;
}

std::string minimal_supports_json(const std::string& form, const std::vector<std::string>& vars,
                                  const std::string& strategy, std::uint64_t seed, const std::string& charts,
                                  std::size_t minor_batch, std::size_t budget, double timeout) {
  Input in = parse(form, vars);
  DriverOptions o = options(in.ring, strategy, seed, charts, minor_batch, budget, timeout);
  py::gil_scoped_release release;
  return to_json(minimal_supports(in.form, o), in.ring).dump();
}

std::string stratify_json(const std::string& form, const std::vector<std::string>& vars, std::uint64_t seed,
                          double timeout) {
  Input in = parse(form, vars);
  DriverOptions o;
  o.timeout_seconds = timeout;
  py::gil_scoped_release release;
  return to_json(rank_stratification(in.form, seed, o), in.ring).dump();
}

std::string apolar_scheme_json(const std::string& form, const std::string& support,
                               const std::vector<std::string>& vars) {
  Input in = parse(form, vars);
  Polynomial l = parse_polynomial(support, in.ring);
  Ideal ideal = natural_apolar_scheme(in.form, l);
  return Json{{"ideal", to_json(ideal, in.ring)},
              {"hilbert", to_json(hilbert_prefix(ideal))},
              {"length", inverse_system_dimension(dual_generator(in.form, l))}}
      .dump();
}

std::vector<std::vector<std::string>> inverse_matrix(const std::string& form, const std::vector<std::string>& vars,
                                                     std::size_t chart) {
  Input in = parse(form, vars);
  InverseSystemMatrix m = inverse_system_matrix(in.form, chart);
  Ring params = Ring::parameters(m.nparams());
  std::vector<std::vector<std::string>> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i].push_back(m.entry(i, j).to_string(params));
  return out;
}

std::vector<std::vector<std::string>> catalecticant_entries(const std::string& form,
                                                            const std::vector<std::string>& vars, unsigned i) {
  Input in = parse(form, vars);
  std::vector<std::vector<std::string>> out;
  for (const auto& row : catalecticant(in.form, i).entries) {
    out.emplace_back();
    for (const auto& e : row) out.back().push_back(rational_to_string(e));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_locgad, m) {
  py::register_exception<Error>(m, "LocgadError", PyExc_ValueError);
  m.def("minimal_supports_json", &minimal_supports_json, py::arg("form"), py::arg("vars"), py::arg("strategy"),
        py::arg("seed"), py::arg("charts"), py::arg("minor_batch"), py::arg("budget"), py::arg("timeout"));
  m.def("stratify_json", &stratify_json, py::arg("form"), py::arg("vars"), py::arg("seed"), py::arg("timeout"));
  m.def("apolar_scheme_json", &apolar_scheme_json, py::arg("form"), py::arg("support"), py::arg("vars"));
  m.def("inverse_matrix", &inverse_matrix, py::arg("form"), py::arg("vars"), py::arg("chart"));
  m.def("catalecticant", &catalecticant_entries, py::arg("form"), py::arg("vars"), py::arg("degree"));
  m.def("generic_local_rank", &generic_local_rank, py::arg("n"), py::arg("d"));
  m.def("embed_check", [](const std::string& form, const std::vector<std::string>& vars) {
    return embed_check(parse(form, vars).form);
  }, py::arg("form"), py::arg("vars") = std::vector<std::string>{});
}
