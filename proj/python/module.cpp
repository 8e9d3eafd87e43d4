#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sasaki/report.hpp"

namespace py = pybind11;

namespace {

using namespace sasaki;

InstanceBundle bundle_from_fixture(const std::string& name) {
  auto fx = fixture_by_name(name);
  if (!fx) throw py::value_error("unknown fixture: " + name);
  return {manifest_from_fixture(*fx), fx};
}

InstanceBundle bundle_from_manifest(const std::string& json_text) {
  return {parse_manifest(json_text), std::nullopt};
}

Format to_format(const std::string& fmt) {
  if (fmt == "text") return Format::text;
  if (fmt == "json") return Format::json;
  throw py::value_error("format must be \"text\" or \"json\"");
}

py::tuple as_tuple(const CommandResult& res) {
  return py::make_tuple(res.output, res.exit_code);
}

}  // namespace

PYBIND11_MODULE(sasaki_audit, m) {
  m.doc() = "Exact-arithmetic audit of eta-Einstein solitons on "
            "trans-Sasakian 3-frames";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<InstanceBundle>(m, "Instance");

  m.def("fixture", &bundle_from_fixture, py::arg("name"),
        "Load a built-in fixture: hyp, paper_example, abl, su2(a), ken(c)");
  m.def("from_manifest", &bundle_from_manifest, py::arg("json_text"),
        "Parse a JSON manifest document");

  auto cmd = [](CommandResult (*fn)(const InstanceBundle&, Format)) {
    return [fn](const InstanceBundle& in, const std::string& fmt) {
      return as_tuple(fn(in, to_format(fmt)));
    };
  };
  m.def("validate", cmd(&cmd_validate), py::arg("instance"),
        py::arg("format") = "json");
  m.def("geometry", cmd(&cmd_geometry), py::arg("instance"),
        py::arg("format") = "json");
  m.def("detect", cmd(&cmd_detect), py::arg("instance"),
        py::arg("format") = "json");
  m.def("report", cmd(&cmd_report), py::arg("instance"),
        py::arg("format") = "json");
  m.def(
      "soliton_solve",
      [](const InstanceBundle& in, const std::string& fmt) {
        return as_tuple(cmd_soliton_solve(in, std::nullopt, to_format(fmt)));
      },
      py::arg("instance"), py::arg("format") = "json");
  m.def(
      "soliton_check",
      [](const InstanceBundle& in, const std::string& lambda,
         const std::string& mu, const std::string& fmt) {
        return as_tuple(cmd_soliton_check(in, parse_rational(lambda),
                                          parse_rational(mu), std::nullopt,
                                          to_format(fmt)));
      },
      py::arg("instance"), py::arg("lambda"), py::arg("mu"),
      py::arg("format") = "json");
  m.def(
      "theorems",
      [](const InstanceBundle& in, const std::string& id, const std::string& fmt) {
        std::optional<TheoremId> only;
        if (!id.empty()) {
          only = theorem_from_name(id);
          if (!only) throw py::value_error("unknown theorem id: " + id);
        }
        return as_tuple(cmd_theorems(in, only, to_format(fmt)));
      },
      py::arg("instance"), py::arg("id") = "", py::arg("format") = "json");
}
