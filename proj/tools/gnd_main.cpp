#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gnd/completeness.hpp"
#include "gnd/derived.hpp"
#include "gnd/hilbert.hpp"
#include "gnd/intuit.hpp"
#include "gnd/kernel.hpp"
#include "gnd/parse.hpp"
#include "gnd/semantics.hpp"
#include "gnd/translate.hpp"

namespace {

constexpr const char* kGeneratedBy = "# generated-by: gnd\n";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void put(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write '" + out_path + "'");
  out << text;
}

// A positional that reads either as a sequent or as a bare formula, the
// latter standing for the theorem sequent -> F.
gnd::Sequent read_sequent_arg(const std::string& text) {
  if (text.find("->") != std::string::npos) return gnd::parse_sequent(text);
  return gnd::Sequent{{}, gnd::parse_formula(text)};
}

int cmd_check(const std::string& input, bool strict, bool porcelain) {
  std::string text = slurp(input);
  if (gnd::script_is_hilbert(text)) {
    gnd::HilbertScript s = gnd::parse_hilbert_script(text);
    gnd::CheckReport r = gnd::check_hilbert(s);
    if (porcelain) {
      std::cout << "accepted=" << (r.accepted ? "true" : "false") << "\n"
                << "violations=" << r.violations.size() << "\n";
    } else {
      std::cout << r.render();
    }
    return r.accepted ? 0 : 1;
  }
  gnd::ProofScript s = gnd::parse_script(text);
  if (strict && s.mode != gnd::Mode::Strict) {
    std::cerr << "error: --strict requires a strict-mode script\n";
    return 1;
  }
  gnd::CheckReport r = gnd::check_script(s);
  if (porcelain) {
    std::cout << "accepted=" << (r.accepted ? "true" : "false") << "\n"
              << "violations=" << r.violations.size() << "\n";
    for (const auto& [rule, n] : r.rule_counts)
      std::cout << "rule." << rule << "=" << n << "\n";
  } else {
    std::cout << r.render();
  }
  return r.accepted ? 0 : 1;
}

int cmd_prove(const std::string& text, const std::string& system, const std::string& out,
              bool porcelain) {
  if (system != "G") throw UsageError("prove only synthesizes proofs in system G");
  gnd::Sequent s = read_sequent_arg(text);
  for (const auto& m : s.antecedent)
    if (!gnd::in_alphabet(gnd::SystemId::G, m)) throw UsageError("sequent outside the G alphabet");
  if (!gnd::in_alphabet(gnd::SystemId::G, s.succedent))
    throw UsageError("sequent outside the G alphabet");
  gnd::ProveResult r = gnd::prove(s);
  if (r.countermodel) {
    if (porcelain)
      std::cout << "result=countermodel\nvaluation=" << gnd::print_valuation(*r.countermodel)
                << "\n";
    else
      std::cout << "countermodel: " << gnd::print_valuation(*r.countermodel) << "\n";
    return 3;
  }
  put(out, kGeneratedBy + gnd::print_script(*r.script));
  if (porcelain && !out.empty() && out != "-") std::cout << "result=proved\n";
  return 0;
}

int cmd_elaborate(const std::string& input, const std::string& out) {
  gnd::ProofScript s = gnd::parse_script(slurp(input));
  gnd::ProofScript strict = gnd::elaborate_script(s);
  put(out, kGeneratedBy + gnd::print_script(strict));
  return 0;
}

int cmd_translate(const std::string& input, const std::string& from, const std::string& to,
                  const std::string& out) {
  gnd::SystemId src, dst;
  if (!gnd::parse_system_name(from, src) || !gnd::parse_system_name(to, dst))
    throw UsageError("unknown system name");
  gnd::TranslationId t;
  if (!gnd::translation_for(src, dst, t))
    throw UsageError("no translation from " + from + " to " + to);
  gnd::ProofScript s = gnd::parse_script(slurp(input));
  if (s.system != src) throw UsageError("script system does not match --from");
  gnd::ProofScript mapped = gnd::translate_proof(t, s);
  put(out, kGeneratedBy + gnd::print_script(mapped));
  return 0;
}

int cmd_decide(const std::string& text, bool intuitionistic, bool porcelain) {
  if (intuitionistic) {
    gnd::Fptr f = gnd::parse_formula(text);
    bool ok = gnd::int_provable(f);
    if (porcelain)
      std::cout << "result=" << (ok ? "int-valid" : "int-invalid") << "\n";
    else
      std::cout << (ok ? "int-valid" : "int-invalid") << "\n";
    return ok ? 0 : 3;
  }
  gnd::Sequent s = read_sequent_arg(text);
  auto cm = gnd::sequent_valid(s);
  if (!cm) {
    std::cout << (porcelain ? "result=valid\n" : "valid\n");
    return 0;
  }
  if (porcelain)
    std::cout << "result=countermodel\nvaluation=" << gnd::print_valuation(*cm) << "\n";
  else
    std::cout << "countermodel: " << gnd::print_valuation(*cm) << "\n";
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gnd: proof checking, synthesis and translation for sequent-style "
               "natural deduction"};
  app.require_subcommand(1);
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "line-oriented key=value output");

  std::string input, out, system = "G", from, to;
  bool strict = false, intu = false;

  auto* check = app.add_subcommand("check", "check a proof script");
  check->add_option("file", input, "script file ('-' for stdin)");
  check->add_flag("--strict", strict, "require a strict-mode script");

  auto* prv = app.add_subcommand("prove", "prove a sequent or report a countermodel");
  prv->add_option("sequent", input, "sequent or formula text");
  prv->allow_extras();  // sequent text may begin with '->'
  prv->add_option("--system", system, "target system (G)");
  prv->add_option("--out", out, "output file (default stdout)");

  auto* ela = app.add_subcommand("elaborate", "expand derived rules into primitives");
  ela->add_option("file", input, "script file ('-' for stdin)");
  ela->add_option("--out", out, "output file (default stdout)");

  auto* tra = app.add_subcommand("translate", "translate a proof between systems");
  tra->add_option("file", input, "script file ('-' for stdin)");
  tra->add_option("--from", from, "source system")->required();
  tra->add_option("--to", to, "target system")->required();
  tra->add_option("--out", out, "output file (default stdout)");

  auto* dec = app.add_subcommand("decide", "decide classical or intuitionistic validity");
  dec->add_option("input", input, "formula or sequent text");
  dec->allow_extras();
  dec->add_flag("--int", intu, "intuitionistic validity (formulas only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (CLI::App* sub : {prv, dec}) {
    if (sub->parsed() && input.empty()) {
      std::string joined;
      for (const auto& t : sub->remaining()) {
        if (!joined.empty()) joined += ' ';
        joined += t;
      }
      input = joined;
    }
  }
  if ((prv->parsed() || dec->parsed()) && input.empty()) {
    std::cerr << "error: missing sequent or formula argument\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(input, strict, porcelain);
    if (prv->parsed()) return cmd_prove(input, system, out, porcelain);
    if (ela->parsed()) return cmd_elaborate(input, out);
    if (tra->parsed()) return cmd_translate(input, from, to, out);
    if (dec->parsed()) return cmd_decide(input, intu, porcelain);
  } catch (const gnd::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gnd::ElaborationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
