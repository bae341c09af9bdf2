#include "pql/cas/symbol.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace pql::cas {
namespace {

struct SymbolTable {
  std::mutex mu;
  std::deque<std::string> names;  // deque: stable references
  std::unordered_map<std::string, SymbolId> ids;

  SymbolTable() {
    for (const char* s : {"n", "q", "p", "l", "beta", "gamma", "k", "d", "sigma", "tau",
                          "delta", "epsilon", "rho", "theta", "H", "L", "x", "y", "z"}) {
      ids.emplace(s, static_cast<SymbolId>(names.size()));
      names.emplace_back(s);
    }
  }
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

}  // namespace

SymbolId intern(std::string_view name) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  std::string key(name);
  if (auto it = t.ids.find(key); it != t.ids.end()) return it->second;
  if (t.names.size() >= kMaxSymbols)
    throw AlgebraError("symbol table full (" + std::to_string(kMaxSymbols) + " symbols)");
  auto id = static_cast<SymbolId>(t.names.size());
  t.names.push_back(key);
  t.ids.emplace(std::move(key), id);
  return id;
}

const std::string& symbol_name(SymbolId id) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  return t.names.at(id);
}

std::size_t symbol_count() {
  auto& t = table();
  std::lock_guard lock(t.mu);
  return t.names.size();
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational r;
  if (r.set_str(std::string(text), 10) != 0)
    throw Error("invalid rational literal '" + std::string(text) + "'");
  if (r.get_den() == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

}  // namespace pql::cas
