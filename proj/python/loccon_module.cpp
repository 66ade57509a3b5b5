#include "loccon/cli.hpp"
#include "loccon/config.hpp"
#include "loccon/gamma.hpp"
#include "loccon/parity.hpp"
#include "loccon/report_json.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace loccon;

namespace {

// Python ints of any size travel as decimal strings.
Integer to_integer(const py::int_& x) { return Integer(py::str(x).cast<std::string>()); }

py::object from_integer(const Integer& x) { return py::module_::import("builtins").attr("int")(x.get_str()); }

WeierstrassCurve to_curve(const std::vector<py::int_>& a) {
  if (a.size() != 5) throw py::value_error("curve must be five integers [a1, a2, a3, a4, a6]");
  return {to_integer(a[0]), to_integer(a[1]), to_integer(a[2]), to_integer(a[3]), to_integer(a[4])};
}

AnalysisConfig parsed(const std::string& text, const std::string& base_dir) {
  const auto r = parse_config(text, base_dir);
  if (!r.errors.empty()) {
    std::string msg;
    for (const auto& e : r.errors) msg += (msg.empty() ? "" : "\n") + e.to_string();
    throw py::value_error(msg);
  }
  return *r.config;
}

std::vector<py::dict> violations(const AnalysisConfig& c) {
  std::vector<py::dict> out;
  for (const auto& v : validate_tower(c.tower, c.curve))
    out.push_back(py::dict(py::arg("rule") = to_string(v.rule), py::arg("message") = v.message,
                           py::arg("citation") = v.citation));
  return out;
}

std::string analyze_json(const std::string& text, const std::string& base_dir) {
  const AnalysisConfig c = parsed(text, base_dir);
  const auto vs = validate_tower(c.tower, c.curve);
  if (!vs.empty()) {
    std::string msg;
    for (const auto& v : vs) msg += (msg.empty() ? "" : "\n") + to_string(v.rule) + ": " + v.message;
    throw py::value_error(msg);
  }
  ParityReport r;
  {
    py::gil_scoped_release release;
    r = analyze(c.curve, c.tower, c.dim_selmer_K, c.label);
  }
  return to_json(r).dump();
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = run_cli(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

py::dict reduction(const std::vector<py::int_>& a, const py::int_& l) {
  const auto r = local_reduction(to_curve(a), to_integer(l));
  const auto& m = r.minimal_model;
  return py::dict(py::arg("type") = reduction_type_name(r.type), py::arg("v_disc_min") = r.v_disc_min,
                  py::arg("potentially_multiplicative") = r.potential == PotentialType::PotentiallyMultiplicative,
                  py::arg("minimal_model") = std::vector<py::object>{from_integer(m.a1), from_integer(m.a2),
                                                                     from_integer(m.a3), from_integer(m.a4),
                                                                     from_integer(m.a6)});
}

}  // namespace

PYBIND11_MODULE(_loccon, m) {
  m.doc() = "Bindings for the loccon C++ core";
  m.attr("REPORT_SCHEMA_VERSION") = kReportSchemaVersion;

  m.def("analyze_config", &analyze_json, py::arg("config_json"), py::arg("base_dir") = ".",
        "Analyse a JSON config and return the report as a JSON string. Raises ValueError on bad input.");
  m.def(
      "validate_config", [](const std::string& text, const std::string& base_dir) { return violations(parsed(text, base_dir)); },
      py::arg("config_json"), py::arg("base_dir") = ".", "Violations of the standing hypotheses, empty when valid.");
  m.def("run_cli", &cli, py::arg("args"), "Run the command line tool in-process; returns (exit_code, stdout, stderr).");

  m.def("local_reduction", &reduction, py::arg("curve"), py::arg("l"));
  m.def(
      "trace_of_frobenius",
      [](const std::vector<py::int_>& a, const py::int_& l) { return trace_of_frobenius(to_curve(a), to_integer(l)); },
      py::arg("curve"), py::arg("l"));
  m.def(
      "quadratic_twist",
      [](const std::vector<py::int_>& a, const py::int_& D) {
        const auto t = quadratic_twist(to_curve(a), to_integer(D));
        return std::vector<py::object>{from_integer(t.a1), from_integer(t.a2), from_integer(t.a3), from_integer(t.a4),
                                       from_integer(t.a6)};
      },
      py::arg("curve"), py::arg("D"));

  py::register_exception<SingularCurveError>(m, "SingularCurveError", PyExc_ValueError);
}
