// Python entry points.  Everything crosses the boundary as text: input
// files in, machine reports (JSON) out.

#include "taucrest/classify.hpp"
#include "taucrest/config_io.hpp"
#include "taucrest/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace taucrest;

namespace {

struct Run {
  InputFile in;
  Configuration c;
  EnumConfig cfg;
};

Run prepare(InputFile in, const std::optional<std::string>& field, std::optional<std::size_t> max_dim,
            std::optional<std::uint64_t> seed, bool parallel) {
  const std::string name = field ? *field : in.enumeration.field.value_or("2");
  const Field f = parse_field(name);
  Configuration c = instantiate(in, f);
  EnumConfig cfg;
  cfg.field = f;
  cfg.max_total_dim = max_dim ? *max_dim : in.enumeration.max_dim.value_or(cfg.max_total_dim);
  cfg.seed = seed ? *seed : in.enumeration.seed.value_or(0);
  cfg.parallel = parallel;
  if (cfg.max_total_dim == 0) throw InputError("max_dim must be at least 1");
  return {std::move(in), std::move(c), cfg};
}

InputFile input_of(const std::string& source, bool is_text) {
  if (!is_text) return load_input(source);
  return parse_input(source, "<text>");
}

}  // namespace

PYBIND11_MODULE(_taucrest, m) {
  m.doc() = "tau-tilting theory over trivial extensions, exact arithmetic";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<EnumError>(m, "EnumError", PyExc_ValueError);

  m.attr("REPORT_SCHEMA") = kReportSchema;
  m.def("builtin_names", &builtin_names);
  m.def("builtin_input", &builtin_input, py::arg("name"));

  m.def(
      "verify",
      [](const std::string& source, bool is_text, std::optional<std::string> field, std::optional<std::size_t> max_dim,
         std::optional<std::uint64_t> seed, bool parallel) {
        const Run r = prepare(input_of(source, is_text), field, max_dim, seed, parallel);
        py::gil_scoped_release release;
        return machine_report(verify_theorems(r.c.ext, r.cfg), {"verify", source, r.c.description});
      },
      py::arg("source"), py::arg("is_text") = false, py::arg("field") = py::none(), py::arg("max_dim") = py::none(),
      py::arg("seed") = py::none(), py::arg("parallel") = false);

  m.def(
      "classify",
      [](const std::string& source, bool is_text, std::optional<std::string> field, std::optional<std::size_t> max_dim,
         std::optional<std::uint64_t> seed, bool parallel) {
        const Run r = prepare(input_of(source, is_text), field, max_dim, seed, parallel);
        py::gil_scoped_release release;
        return machine_classification(classify(r.c.ext, r.cfg), {"classify", source, r.c.description});
      },
      py::arg("source"), py::arg("is_text") = false, py::arg("field") = py::none(), py::arg("max_dim") = py::none(),
      py::arg("seed") = py::none(), py::arg("parallel") = false);

  m.def(
      "analyze",
      [](const std::string& source, bool is_text, std::optional<std::string> field) {
        const Run r = prepare(input_of(source, is_text), field, std::nullopt, std::nullopt, false);
        if (!r.c.module) throw InputError(source + ": analyze needs a [module] section");
        return machine_analysis(analyze_module(r.c.ext, *r.c.module), {"analyze", source, r.c.description});
      },
      py::arg("source"), py::arg("is_text") = false, py::arg("field") = py::none());
}
