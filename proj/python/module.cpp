#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gnd/completeness.hpp"
#include "gnd/derived.hpp"
#include "gnd/hilbert.hpp"
#include "gnd/intuit.hpp"
#include "gnd/kernel.hpp"
#include "gnd/parse.hpp"
#include "gnd/semantics.hpp"
#include "gnd/translate.hpp"

namespace py = pybind11;
using namespace gnd;

namespace {

// The module works at the text level: scripts, sequents and formulas go in
// and come out as the same strings the CLI reads and writes.

SystemId system_arg(const std::string& name) {
  SystemId s;
  if (!parse_system_name(name, s)) throw py::value_error("unknown system '" + name + "'");
  return s;
}

Sequent sequent_arg(const std::string& text) {
  if (text.find("->") != std::string::npos) return parse_sequent(text);
  return Sequent{{}, parse_formula(text)};
}

py::dict report_dict(const CheckReport& r) {
  py::dict out;
  out["accepted"] = r.accepted;
  py::list vs;
  for (const auto& v : r.violations) {
    py::dict d;
    d["line"] = v.line;
    d["kind"] = v.kind;
    d["detail"] = v.detail;
    vs.append(d);
  }
  out["violations"] = vs;
  out["rule_counts"] = r.rule_counts;
  return out;
}

}  // namespace

PYBIND11_MODULE(_gnd, m) {
  m.doc() = "proof checking, synthesis and translation for sequent-style natural deduction";

  m.def("parse_formula", [](const std::string& t) { return print_formula(parse_formula(t)); },
        "normalize a formula through parse + minimal-parenthesization print");
  m.def("parse_sequent", [](const std::string& t) { return print_sequent(parse_sequent(t)); });

  m.def("check", [](const std::string& text) {
    if (script_is_hilbert(text)) return report_dict(check_hilbert(parse_hilbert_script(text)));
    return report_dict(check_script(parse_script(text)));
  }, "check a script (sequent or Hilbert, auto-detected); returns a report dict");

  m.def("prove", [](const std::string& sequent) -> py::object {
    ProveResult r = prove(sequent_arg(sequent));
    py::dict out;
    if (r.script) {
      out["script"] = print_script(*r.script);
    } else {
      out["countermodel"] = *r.countermodel;
    }
    return out;
  }, "prove a G sequent; returns {'script': ...} or {'countermodel': {...}}");

  m.def("elaborate", [](const std::string& text) {
    return print_script(elaborate_script(parse_script(text)));
  }, "expand derived-rule lines into primitives");

  m.def("translate", [](const std::string& text, const std::string& from_sys,
                        const std::string& to_sys) {
    TranslationId t;
    if (!translation_for(system_arg(from_sys), system_arg(to_sys), t))
      throw py::value_error("no translation " + from_sys + " -> " + to_sys);
    return print_script(translate_proof(t, parse_script(text)));
  });

  m.def("translate_formula", [](const std::string& text, const std::string& from_sys,
                                const std::string& to_sys) {
    TranslationId t;
    if (!translation_for(system_arg(from_sys), system_arg(to_sys), t))
      throw py::value_error("no translation " + from_sys + " -> " + to_sys);
    return print_formula(translate_formula(t, parse_formula(text)));
  });

  m.def("decide", [](const std::string& sequent) -> py::object {
    auto cm = sequent_valid(sequent_arg(sequent));
    if (!cm) return py::none();
    return py::cast(*cm);
  }, "classical validity: None if valid, else a countermodel dict");

  m.def("int_provable", [](const std::string& formula) {
    return int_provable(parse_formula(formula));
  }, "intuitionistic validity of a formula");

  m.def("deduction_theorem", [](const std::string& text) {
    return print_hilbert_script(deduction_theorem(parse_hilbert_script(text)));
  });

  py::register_exception<ParseError>(m, "GndParseError", PyExc_ValueError);
  py::register_exception<ElaborationError>(m, "GndElaborationError", PyExc_ValueError);
}
