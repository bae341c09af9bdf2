#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include "pql/coeffs/coeffs.hpp"

namespace pql::coeffs {

Corpus Corpus::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cas::Error("cannot open formula file " + path);
  Corpus c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto sep = line.find(":=");
    if (sep == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw cas::Error(path + ":" + std::to_string(lineno) + ": expected NAME := expression");
      continue;
    }
    std::string name = line.substr(0, sep);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    std::string rhs = line.substr(sep + 2);
    try {
      c.defs_.insert_or_assign(name, cas::parse_expr(rhs, &c.defs_));
    } catch (const cas::ParseError& e) {
      throw cas::Error(path + ":" + std::to_string(lineno) + ": " + name + ": " + e.what());
    }
    c.text_[name] = rhs;
    c.order_.push_back(name);
  }
  return c;
}

std::string Corpus::default_path() {
  if (const char* env = std::getenv("PQL_FORMULA_FILE"); env && *env) return env;
  return std::string(PQL_FORMULA_DIR) + "/appendixA.txt";
}

const Corpus& Corpus::bundled() {
  static std::once_flag once;
  static Corpus c;
  std::call_once(once, [] { c = load(default_path()); });
  return c;
}

const RatExpr& Corpus::get(const std::string& name) const {
  auto it = defs_.find(name);
  if (it == defs_.end()) throw cas::Error("formula corpus has no definition for " + name);
  return it->second;
}

std::string system_label(SystemName name, std::size_t index) {
  switch (name) {
    case SystemName::S_full:
      return "SF" + std::to_string(index + 1);
    case SystemName::S_reduced:
      return "S" + std::to_string(index + 1);
    case SystemName::I_full:
      return "I" + std::to_string(index + 1);
  }
  return "?";
}

CoeffSystem corpus_system(const Corpus& c, SystemName name) {
  std::size_t count = name == SystemName::S_full ? 6 : name == SystemName::S_reduced ? 3 : 10;
  CoeffSystem s{name, {}};
  for (std::size_t i = 0; i < count; ++i) s.entries.push_back(c.get(system_label(name, i)));
  return s;
}

}  // namespace pql::coeffs
