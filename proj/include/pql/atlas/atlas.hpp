#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pql/domains/domains.hpp"

namespace pql::atlas {

struct Range {
  double lo = 0, hi = 0;
};
Range parse_range(const std::string& text);  // "LO:HI"

struct Polyline {
  std::string name;
  std::vector<std::pair<double, double>> pts;  // (p, q)
};

struct GridScan {
  int n = 0;
  bool bounded = false;
  Range p_range, q_range;
  int res_p = 0, res_q = 0;
  std::vector<domains::Verdict> cells;  // row-major, row index = q
  std::vector<Polyline> overlays;
  int disjointness_violations = 0;
  std::vector<std::string> violations;

  double p_at(int j) const { return p_range.lo + (j + 0.5) * (p_range.hi - p_range.lo) / res_p; }
  double q_at(int i) const { return q_range.lo + (i + 0.5) * (q_range.hi - q_range.lo) / res_q; }
  const domains::Verdict& at(int i, int j) const { return cells[std::size_t(i) * res_p + j]; }
};

struct ScanOptions {
  unsigned threads = 0;                // 0: hardware concurrency
  domains::SupTable* memo = nullptr;   // shared suprema; a private table is used when null
};

GridScan scan_grid(int n, Range p_range, Range q_range, int res_p, int res_q, bool bounded,
                   const ScanOptions& opt = {});

std::vector<Polyline> curve_overlays(int n, Range p_range, Range q_range, domains::SupTable* memo = nullptr);

void emit_csv(const GridScan& scan, std::ostream& os);
void emit_csv(const GridScan& scan, const std::string& path);
void emit_svg(const GridScan& scan, std::ostream& os);
void emit_svg(const GridScan& scan, const std::string& path);

// JSON-lines persistence of SupTable records.
std::string default_cache_path();  // $PQL_CACHE or ".pql_cache.jsonl"
std::string record_to_line(const domains::SupTable::Record& r);
domains::SupTable::Record record_from_line(const std::string& line);  // throws std::runtime_error

struct CacheLoad {
  std::vector<domains::SupTable::Record> records;
  std::vector<std::string> warnings;
};
CacheLoad load_cache(const std::string& path);  // a missing file is an empty cache
void save_cache(const std::string& path, const std::vector<domains::SupTable::Record>& records);
std::vector<domains::SupTable::Record> cache_roundtrip(const std::vector<domains::SupTable::Record>& records);

}  // namespace pql::atlas
