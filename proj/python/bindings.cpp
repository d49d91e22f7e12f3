#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ldlab/commands.hpp"

namespace py = pybind11;

namespace {

using ldlab::CommandOptions;
using ldlab::CommandResult;
using ldlab::Json;

using Outcome = std::tuple<int, std::string, std::optional<std::string>>;

Outcome wrap(const CommandResult& r) {
  std::optional<std::string> artifact;
  if (r.artifact) artifact = r.artifact->dump();
  return {r.exit_code, r.report.dump(), artifact};
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw py::value_error(std::string("instance is not valid JSON: ") + e.what());
  }
}

CommandOptions options(const std::optional<std::string>& scope, const std::vector<std::string>& axioms) {
  CommandOptions o;
  o.scope = scope;
  o.axioms = axioms;
  return o;
}

template <typename Fn>
Outcome run(Fn&& fn) {
  CommandResult r;
  {
    py::gil_scoped_release release;
    r = fn();
  }
  return wrap(r);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite checkers for linearly distributive and star-autonomous categories and their comonads";

  m.attr("SCHEMA_VERSION") = ldlab::kSchemaVersion;
  m.attr("EXIT_PASS") = static_cast<int>(ldlab::kPass);
  m.attr("EXIT_FAIL") = static_cast<int>(ldlab::kFail);
  m.attr("EXIT_SCHEMA") = static_cast<int>(ldlab::kSchema);
  m.attr("EXIT_PRECONDITION") = static_cast<int>(ldlab::kPrecondition);

  m.def(
      "validate",
      [](const std::string& instance, std::optional<std::string> scope, std::vector<std::string> axioms) {
        const Json j = parse(instance);
        return run([&] { return ldlab::cmd_validate(j, options(scope, axioms)); });
      },
      py::arg("instance"), py::arg("scope") = py::none(), py::arg("axioms") = std::vector<std::string>{});

  m.def(
      "lift",
      [](const std::string& instance, std::optional<std::string> scope) {
        const Json j = parse(instance);
        return run([&] { return ldlab::cmd_lift(j, options(scope, {})); });
      },
      py::arg("instance"), py::arg("scope") = py::none());

  m.def(
      "translate",
      [](const std::string& instance, const std::string& to, std::optional<std::string> scope) {
        const Json j = parse(instance);
        return run([&] { return ldlab::cmd_translate(j, to, options(scope, {})); });
      },
      py::arg("instance"), py::arg("to"), py::arg("scope") = py::none());

  auto simple = [&m](const char* name, CommandResult (*fn)(const Json&, const CommandOptions&)) {
    m.def(
        name,
        [fn](const std::string& instance, std::optional<std::string> scope) {
          const Json j = parse(instance);
          return run([&] { return fn(j, options(scope, {})); });
        },
        py::arg("instance"), py::arg("scope") = py::none());
  };
  simple("coincide", &ldlab::cmd_coincide);
  simple("compact", &ldlab::cmd_compact);
  simple("equivalence", &ldlab::cmd_equivalence);
  simple("search", &ldlab::cmd_search);

  m.def(
      "generate",
      [](const std::string& name, const std::map<std::string, std::string>& params) {
        return run([&] { return ldlab::cmd_generate(name, params); });
      },
      py::arg("name"), py::arg("params") = std::map<std::string, std::string>{});

  m.def(
      "mutate",
      [](const std::string& instance, const std::string& descriptor) {
        const Json j = parse(instance);
        const Json d = parse(descriptor);
        return run([&] { return ldlab::cmd_mutate(j, d); });
      },
      py::arg("instance"), py::arg("descriptor"));

  m.def(
      "seed_corpus", [](const std::string& dir) { return run([&] { return ldlab::cmd_seed_corpus(dir); }); },
      py::arg("directory"));

  m.def("summarize", [](const std::string& report) { return ldlab::summarize(parse(report)); },
        py::arg("report"));
}
