#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "pql/atlas/atlas.hpp"

namespace pql::atlas {

using domains::FeasSet;
using domains::SupTable;
using json = nlohmann::json;

namespace {

// %.17g round-trips every finite binary64; strtod reads inf/-inf back.
std::string exact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const json& j, const char* key) {
  const std::string s = j.at(key).get<std::string>();
  char* end = nullptr;
  double x = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0') throw std::runtime_error(std::string("bad number in '") + key + "'");
  return x;
}

}  // namespace

std::string default_cache_path() {
  const char* env = std::getenv("PQL_CACHE");
  return env && *env ? env : ".pql_cache.jsonl";
}

std::string record_to_line(const SupTable::Record& r) {
  json j;
  j["set"] = domains::to_string(r.set);
  j["n"] = r.n;
  j["q"] = exact(r.q);
  j["tol"] = exact(r.tol);
  j["sup"] = exact(r.sup.value);
  j["argmax_y"] = exact(r.sup.argmax_y);
  j["attained"] = r.sup.attained;
  j["plus_infinity"] = r.sup.plus_infinity;
  j["empty"] = r.sup.empty;
  j["cells"] = r.sup.grid_cells_feasible;
  return j.dump();
}

SupTable::Record record_from_line(const std::string& line) {
  json j = json::parse(line);  // throws json::parse_error, a std::exception
  SupTable::Record r;
  const std::string set = j.at("set").get<std::string>();
  if (set == "D")
    r.set = FeasSet::D;
  else if (set == "E")
    r.set = FeasSet::E;
  else
    throw std::runtime_error("unknown set '" + set + "'");
  r.n = j.at("n").get<int>();
  r.q = parse_double(j, "q");
  r.tol = parse_double(j, "tol");
  r.sup.value = parse_double(j, "sup");
  r.sup.argmax_y = parse_double(j, "argmax_y");
  r.sup.attained = j.at("attained").get<bool>();
  r.sup.plus_infinity = j.at("plus_infinity").get<bool>();
  r.sup.empty = j.at("empty").get<bool>();
  r.sup.grid_cells_feasible = j.at("cells").get<int>();
  if (r.n < 3 || !(r.tol > 0)) throw std::runtime_error("record out of domain");
  return r;
}

CacheLoad load_cache(const std::string& path) {
  CacheLoad out;
  std::ifstream f(path);
  if (!f) return out;
  std::string line;
  for (int lineno = 1; std::getline(f, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.records.push_back(record_from_line(line));
    } catch (const std::exception& e) {
      out.warnings.push_back(path + ":" + std::to_string(lineno) + ": skipped corrupt record (" + e.what() + ")");
    }
  }
  return out;
}

void save_cache(const std::string& path, const std::vector<SupTable::Record>& records) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open cache '" + path + "' for writing");
  for (const auto& r : records) f << record_to_line(r) << '\n';
  f.close();
  if (!f) throw std::runtime_error("write to cache '" + path + "' failed");
}

std::vector<SupTable::Record> cache_roundtrip(const std::vector<SupTable::Record>& records) {
  std::vector<SupTable::Record> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(record_from_line(record_to_line(r)));
  return out;
}

}  // namespace pql::atlas
