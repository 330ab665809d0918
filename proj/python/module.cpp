#include "tdlc/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>

namespace py = pybind11;
using namespace tdlc;

namespace {

scenario::Scenario open_scenario(const std::string& arg) {
  if (std::filesystem::exists(arg)) return scenario::load(arg);
  for (const auto& id : scenario::catalog_ids())
    if (id == arg) return scenario::catalog_scenario(id);
  throw InvalidInput("no scenario file or catalog entry named '" + arg + "'");
}

report::Options options(std::optional<std::size_t> probe, std::optional<std::size_t> tidy_probe,
                        std::optional<std::size_t> resolution) {
  report::Options o;
  o.probe = probe;
  o.tidy_probe = tidy_probe;
  o.resolution = resolution;
  return o;
}

}  // namespace

PYBIND11_MODULE(_tdlc, m) {
  m.doc() = "exact entropy, scale and nub of endomorphisms of t.d.l.c. groups";
  m.attr("version") = report::kVersion;

  // translators run newest first, so the base class goes first
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def("catalog_ids", &scenario::catalog_ids);
  m.def("catalog_source", &scenario::catalog_source, py::arg("id"));
  m.def("suite_names", &suites::suite_names);
  m.def(
      "parse_rational",
      [](const std::string& s) {
        Rational q = scenario::parse_rational(s);
        return std::make_pair(q.get_num().get_str(), q.get_den().get_str());
      },
      py::arg("text"));

  // JSON text of the report for one scenario file, JSON string or catalog id
  m.def(
      "report_json",
      [](const std::string& source, std::optional<std::vector<std::string>> computations, bool checks,
         std::optional<std::size_t> probe, std::optional<std::size_t> tidy_probe,
         std::optional<std::size_t> resolution) {
        py::gil_scoped_release release;
        auto sc = source.starts_with("{") ? scenario::parse(source) : open_scenario(source);
        auto r = report::run(sc, computations.value_or(sc.compute), checks, options(probe, tidy_probe, resolution));
        return report::to_json({r});
      },
      py::arg("source"), py::arg("computations") = py::none(), py::arg("checks") = true,
      py::arg("probe") = py::none(), py::arg("tidy_probe") = py::none(), py::arg("resolution") = py::none());

  m.def(
      "verify_json",
      [](const std::string& suite, std::optional<std::size_t> probe) {
        py::gil_scoped_release release;
        return suites::to_json(suite, suites::run(suite, options(probe, std::nullopt, std::nullopt)));
      },
      py::arg("suite") = "all", py::arg("probe") = py::none());
}
