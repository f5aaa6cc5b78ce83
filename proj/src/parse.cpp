#include "gnd/parse.hpp"

#include <cctype>
#include <sstream>

namespace gnd {

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  explicit Lexer(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, "column " + std::to_string(pos + 1));
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool try_eat(const std::string& tok) {
    skip_ws();
    if (text.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  void expect(const std::string& tok) {
    if (!try_eat(tok)) fail("expected '" + tok + "'");
  }

  std::string ident() {
    skip_ws();
    if (pos >= text.size() || !std::islower(static_cast<unsigned char>(text[pos])))
      fail("expected variable");
    size_t start = pos;
    while (pos < text.size() &&
           (std::islower(static_cast<unsigned char>(text[pos])) ||
            std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  Fptr formula() {
    Fptr left = conj();
    if (try_eat("=>")) return Formula::imp(left, formula());  // right-assoc
    return left;
  }

  Fptr conj() {
    Fptr f = unary();
    while (true) {
      skip_ws();
      // '.' and '&' are interchangeable; '->' must not be eaten as '-'.
      if (pos < text.size() && (text[pos] == '.' || text[pos] == '&')) {
        ++pos;
        f = Formula::conj(f, unary());
      } else {
        return f;
      }
    }
  }

  Fptr unary() {
    if (try_eat("~")) return Formula::neg(unary());
    return atom();
  }

  Fptr atom() {
    skip_ws();
    if (try_eat("#")) return Formula::falsum();
    if (try_eat("(")) {
      Fptr f = formula();
      expect(")");
      return f;
    }
    return Formula::var(ident());
  }

  Sequent sequent() {
    Sequent s;
    if (!try_eat("->")) {
      s.antecedent.push_back(formula());
      while (try_eat(",")) s.antecedent.push_back(formula());
      expect("->");
    }
    s.succedent = formula();
    return s;
  }
};

int precedence_of(const Fptr& f) {
  switch (f->kind) {
    case Conn::Imp: return 1;
    case Conn::Conj: return 2;
    default: return 3;  // Neg, Var, Falsum never need parentheses around them
  }
}

void print_rec(const Fptr& f, int min_prec, std::string& out) {
  int prec = precedence_of(f);
  bool paren = prec < min_prec;
  if (paren) out += '(';
  switch (f->kind) {
    case Conn::Var:
      out += f->name;
      break;
    case Conn::Falsum:
      out += '#';
      break;
    case Conn::Neg:
      out += '~';
      print_rec(f->lhs, 3, out);
      break;
    case Conn::Conj:
      // left-assoc: left child at same level, right child one tighter
      print_rec(f->lhs, 2, out);
      out += " . ";
      print_rec(f->rhs, 3, out);
      break;
    case Conn::Imp:
      print_rec(f->lhs, 2, out);
      out += " => ";
      print_rec(f->rhs, 1, out);
      break;
  }
  if (paren) out += ')';
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail_line(int lineno, const std::string& msg) {
  throw ParseError(msg, "line " + std::to_string(lineno));
}

// Splits a body line into sequent/formula text and justification text at the
// ';'; a '#' after the ';' starts a comment.
void split_body(int lineno, const std::string& body, std::string& head, std::string& just) {
  size_t semi = body.find(';');
  if (semi == std::string::npos) fail_line(lineno, "missing ';' before justification");
  head = trim(body.substr(0, semi));
  std::string j = body.substr(semi + 1);
  size_t hash = j.find('#');
  if (hash != std::string::npos) j = j.substr(0, hash);
  just = trim(j);
  if (just.empty()) fail_line(lineno, "empty justification");
}

// "N." prefix; returns the rest of the line.
std::string parse_number_prefix(int lineno, const std::string& line, int& number) {
  size_t i = 0;
  while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
  if (i == 0 || i >= line.size() || line[i] != '.')
    fail_line(lineno, "expected 'N.' line number prefix");
  number = std::stoi(line.substr(0, i));
  return trim(line.substr(i + 1));
}

struct ScriptReader {
  std::istringstream in;
  int lineno = 0;
  SystemId system = SystemId::G;
  Mode mode = Mode::Macro;
  std::vector<std::pair<int, std::string>> body;   // (file line, content)
  std::vector<std::pair<int, std::string>> hyps;   // Hilbert 'hyp:' lines

  explicit ScriptReader(const std::string& input) : in(input) {
    std::string raw;
    bool have_system = false;
    while (std::getline(in, raw)) {
      ++lineno;
      std::string line = trim(raw);
      if (line.empty() || line[0] == '#') continue;
      if (line.rfind("system:", 0) == 0) {
        if (have_system) fail_line(lineno, "duplicate system header");
        if (!parse_system_name(trim(line.substr(7)), system))
          fail_line(lineno, "unknown system '" + trim(line.substr(7)) + "'");
        have_system = true;
      } else if (line.rfind("mode:", 0) == 0) {
        std::string m = trim(line.substr(5));
        if (m == "strict") mode = Mode::Strict;
        else if (m == "macro") mode = Mode::Macro;
        else fail_line(lineno, "unknown mode '" + m + "'");
      } else if (line.rfind("hyp:", 0) == 0) {
        hyps.emplace_back(lineno, trim(line.substr(4)));
      } else {
        body.emplace_back(lineno, line);
      }
    }
    if (!have_system) throw ParseError("missing 'system:' header", "");
  }
};

Fptr parse_formula_at(int lineno, const std::string& text) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    fail_line(lineno, e.what());
  }
}

}  // namespace

Fptr parse_formula(const std::string& input) {
  Lexer lx(input);
  Fptr f = lx.formula();
  if (!lx.at_end()) lx.fail("trailing input");
  return f;
}

Sequent parse_sequent(const std::string& input) {
  Lexer lx(input);
  Sequent s = lx.sequent();
  if (!lx.at_end()) lx.fail("trailing input");
  return s;
}

std::string print_formula(const Fptr& f) {
  std::string out;
  print_rec(f, 1, out);
  return out;
}

std::string print_sequent(const Sequent& s) {
  std::string out;
  for (size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i) out += ", ";
    out += print_formula(s.antecedent[i]);
  }
  if (!s.antecedent.empty()) out += ' ';
  out += "-> ";
  out += print_formula(s.succedent);
  return out;
}

ProofScript parse_script(const std::string& input) {
  ScriptReader rd(input);
  if (!is_sequent_system(rd.system))
    throw ParseError("system " + std::string(system_name(rd.system)) +
                         " takes a Hilbert script, not a sequent script",
                     "");
  if (!rd.hyps.empty()) fail_line(rd.hyps[0].first, "hyp: header not allowed in sequent scripts");
  ProofScript script;
  script.system = rd.system;
  script.mode = rd.mode;
  int expected = 1;
  for (const auto& [lineno, text] : rd.body) {
    ProofLine pl;
    std::string rest = parse_number_prefix(lineno, text, pl.number);
    if (pl.number != expected)
      fail_line(lineno, "non-consecutive line number " + std::to_string(pl.number) +
                            " (expected " + std::to_string(expected) + ")");
    ++expected;
    std::string head, just;
    split_body(lineno, rest, head, just);
    try {
      pl.sequent = parse_sequent(head);
    } catch (const ParseError& e) {
      fail_line(lineno, e.what());
    }
    for (const auto& f : pl.sequent.antecedent)
      if (!in_alphabet(script.system, f))
        fail_line(lineno, "formula '" + print_formula(f) + "' not in alphabet of " +
                              system_name(script.system));
    if (!in_alphabet(script.system, pl.sequent.succedent))
      fail_line(lineno, "formula '" + print_formula(pl.sequent.succedent) +
                            "' not in alphabet of " + system_name(script.system));
    std::istringstream js(just);
    js >> pl.just.rule;
    int ref;
    while (js >> ref) {
      if (ref >= pl.number)
        fail_line(lineno, "forward reference to line " + std::to_string(ref));
      if (ref < 1) fail_line(lineno, "bad premise reference");
      pl.just.premises.push_back(ref);
    }
    if (!js.eof()) fail_line(lineno, "bad premise reference list");
    script.lines.push_back(std::move(pl));
  }
  return script;
}

std::string print_script(const ProofScript& s) {
  std::string out = "system: ";
  out += system_name(s.system);
  out += '\n';
  out += s.mode == Mode::Strict ? "mode: strict\n" : "mode: macro\n";
  for (const auto& l : s.lines) {
    out += std::to_string(l.number);
    out += ". ";
    out += print_sequent(l.sequent);
    out += " ; ";
    out += l.just.rule;
    for (int p : l.just.premises) {
      out += ' ';
      out += std::to_string(p);
    }
    out += '\n';
  }
  return out;
}

HilbertScript parse_hilbert_script(const std::string& input) {
  ScriptReader rd(input);
  if (is_sequent_system(rd.system))
    throw ParseError("system " + std::string(system_name(rd.system)) +
                         " takes a sequent script, not a Hilbert script",
                     "");
  HilbertScript script;
  script.system = rd.system;
  for (const auto& [lineno, text] : rd.hyps)
    script.hypotheses.push_back(parse_formula_at(lineno, text));
  int expected = 1;
  for (const auto& [lineno, text] : rd.body) {
    HilbertLine hl;
    std::string rest = parse_number_prefix(lineno, text, hl.number);
    if (hl.number != expected)
      fail_line(lineno, "non-consecutive line number " + std::to_string(hl.number));
    ++expected;
    std::string head, just;
    split_body(lineno, rest, head, just);
    hl.formula = parse_formula_at(lineno, head);
    if (!in_alphabet(script.system, hl.formula))
      fail_line(lineno, "formula not in alphabet of " + std::string(system_name(script.system)));
    std::istringstream js(just);
    std::string rule;
    js >> rule;
    if (rule == "ax1") hl.just.kind = HilbertJust::Ax1;
    else if (rule == "ax2") hl.just.kind = HilbertJust::Ax2;
    else if (rule == "ax3") hl.just.kind = HilbertJust::Ax3;
    else if (rule == "ax3'") hl.just.kind = HilbertJust::Ax3Prime;
    else if (rule == "hyp") {
      hl.just.kind = HilbertJust::Hyp;
      if (!(js >> hl.just.ref_a)) fail_line(lineno, "hyp needs an index");
      if (hl.just.ref_a < 1 || hl.just.ref_a > static_cast<int>(script.hypotheses.size()))
        fail_line(lineno, "hypothesis index out of range");
    } else if (rule == "mp") {
      hl.just.kind = HilbertJust::Mp;
      if (!(js >> hl.just.ref_a >> hl.just.ref_b)) fail_line(lineno, "mp needs two references");
      if (hl.just.ref_a >= hl.number || hl.just.ref_b >= hl.number || hl.just.ref_a < 1 ||
          hl.just.ref_b < 1)
        fail_line(lineno, "forward reference in mp");
    } else {
      fail_line(lineno, "unknown justification '" + rule + "'");
    }
    std::string extra;
    if (js >> extra) fail_line(lineno, "trailing justification tokens");
    script.lines.push_back(std::move(hl));
  }
  return script;
}

std::string print_hilbert_script(const HilbertScript& s) {
  std::string out = "system: ";
  out += system_name(s.system);
  out += '\n';
  for (const auto& h : s.hypotheses) {
    out += "hyp: ";
    out += print_formula(h);
    out += '\n';
  }
  for (const auto& l : s.lines) {
    out += std::to_string(l.number);
    out += ". ";
    out += print_formula(l.formula);
    out += " ; ";
    switch (l.just.kind) {
      case HilbertJust::Ax1: out += "ax1"; break;
      case HilbertJust::Ax2: out += "ax2"; break;
      case HilbertJust::Ax3: out += "ax3"; break;
      case HilbertJust::Ax3Prime: out += "ax3'"; break;
      case HilbertJust::Hyp: out += "hyp " + std::to_string(l.just.ref_a); break;
      case HilbertJust::Mp:
        out += "mp " + std::to_string(l.just.ref_a) + " " + std::to_string(l.just.ref_b);
        break;
    }
    out += '\n';
  }
  return out;
}

bool script_is_hilbert(const std::string& input) {
  std::istringstream in(input);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = trim(raw);
    if (line.rfind("system:", 0) == 0) {
      SystemId s;
      if (parse_system_name(trim(line.substr(7)), s)) return !is_sequent_system(s);
      return false;
    }
  }
  return false;
}

}  // namespace gnd
