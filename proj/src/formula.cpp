#include "gnd/formula.hpp"

#include <mutex>
#include <tuple>
#include <unordered_map>

namespace gnd {

namespace {

struct Key {
  Conn kind;
  std::string name;
  const Formula* lhs;
  const Formula* rhs;
  bool operator==(const Key& o) const {
    return kind == o.kind && lhs == o.lhs && rhs == o.rhs && name == o.name;
  }
};

struct KeyHash {
  size_t operator()(const Key& k) const {
    size_t h = std::hash<int>()(static_cast<int>(k.kind));
    h = h * 1000003u ^ std::hash<std::string>()(k.name);
    h = h * 1000003u ^ std::hash<const void*>()(k.lhs);
    h = h * 1000003u ^ std::hash<const void*>()(k.rhs);
    return h;
  }
};

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

std::unordered_map<Key, std::weak_ptr<const Formula>, KeyHash>& table() {
  static auto* t = new std::unordered_map<Key, std::weak_ptr<const Formula>, KeyHash>();
  return *t;
}

}  // namespace

Fptr Formula::intern(Conn k, const std::string& n, const Fptr& l, const Fptr& r) {
  Key key{k, n, l.get(), r.get()};
  std::lock_guard<std::mutex> lock(table_mutex());
  auto it = table().find(key);
  if (it != table().end()) {
    if (auto p = it->second.lock()) return p;
  }
  Fptr p(new Formula(k, n, l, r));
  table()[key] = p;
  return p;
}

Fptr Formula::var(const std::string& name) { return intern(Conn::Var, name, nullptr, nullptr); }
Fptr Formula::neg(Fptr body) { return intern(Conn::Neg, "", body, nullptr); }
Fptr Formula::imp(Fptr left, Fptr right) { return intern(Conn::Imp, "", left, right); }
Fptr Formula::conj(Fptr left, Fptr right) { return intern(Conn::Conj, "", left, right); }
Fptr Formula::falsum() { return intern(Conn::Falsum, "", nullptr, nullptr); }

void collect_vars(const Fptr& f, std::vector<std::string>& out) {
  if (!f) return;
  switch (f->kind) {
    case Conn::Var: {
      for (const auto& v : out)
        if (v == f->name) return;
      out.push_back(f->name);
      break;
    }
    case Conn::Neg:
      collect_vars(f->lhs, out);
      break;
    case Conn::Imp:
    case Conn::Conj:
      collect_vars(f->lhs, out);
      collect_vars(f->rhs, out);
      break;
    case Conn::Falsum:
      break;
  }
}

std::vector<std::string> vars_of(const Fptr& f) {
  std::vector<std::string> out;
  collect_vars(f, out);
  return out;
}

int node_count(const Fptr& f) {
  if (!f) return 0;
  return 1 + node_count(f->lhs) + node_count(f->rhs);
}

const char* system_name(SystemId s) {
  switch (s) {
    case SystemId::G: return "G";
    case SystemId::GBot: return "GBot";
    case SystemId::C: return "C";
    case SystemId::HLT: return "HLT";
    case SystemId::HL3: return "HL3";
  }
  return "?";
}

bool parse_system_name(const std::string& text, SystemId& out) {
  if (text == "G") out = SystemId::G;
  else if (text == "GBot") out = SystemId::GBot;
  else if (text == "C") out = SystemId::C;
  else if (text == "HLT") out = SystemId::HLT;
  else if (text == "HL3") out = SystemId::HL3;
  else return false;
  return true;
}

bool is_sequent_system(SystemId s) {
  return s == SystemId::G || s == SystemId::GBot || s == SystemId::C;
}

bool in_alphabet(SystemId s, const Fptr& f) {
  if (!f) return false;
  bool ok = false;
  switch (f->kind) {
    case Conn::Var: ok = true; break;
    case Conn::Neg: ok = s != SystemId::GBot; break;
    case Conn::Imp: ok = s != SystemId::C; break;
    case Conn::Conj: ok = s == SystemId::C; break;
    case Conn::Falsum: ok = s == SystemId::GBot; break;
  }
  if (!ok) return false;
  if (f->lhs && !in_alphabet(s, f->lhs)) return false;
  if (f->rhs && !in_alphabet(s, f->rhs)) return false;
  return true;
}

}  // namespace gnd
