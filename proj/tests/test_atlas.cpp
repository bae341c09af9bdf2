#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <set>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pql/atlas/atlas.hpp"

using namespace pql::atlas;
using pql::domains::Status;

namespace {
std::string csv_of(const GridScan& s) {
  std::ostringstream os;
  emit_csv(s, os);
  return os.str();
}
std::filesystem::path tmp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }
}  // namespace

TEST_CASE("ranges") {
  Range r = parse_range("-1:4");
  CHECK(r.lo == -1);
  CHECK(r.hi == 4);
  CHECK_THROWS_AS(parse_range("1-4"), pql::PreconditionError);
  CHECK_THROWS_AS(parse_range("a:b"), pql::PreconditionError);
  CHECK_THROWS_AS(parse_range("1:2x"), pql::PreconditionError);
}

TEST_CASE("scan preconditions") {
  CHECK_THROWS_AS(scan_grid(6, {0, 1}, {0, 1}, 1, 4, false), pql::PreconditionError);
  CHECK_THROWS_AS(scan_grid(6, {1, 1}, {0, 1}, 4, 4, false), pql::PreconditionError);
  CHECK_THROWS_AS(scan_grid(6, {0, 1}, {-1, 1}, 4, 4, false), pql::PreconditionError);
}

TEST_CASE("csv format") {
  GridScan s = scan_grid(6, {0.5, 1.5}, {0, 0.01}, 2, 2, false);
  std::string text = csv_of(s);
  CHECK(text.rfind("p,q,status,criteria\n", 0) == 0);
  CHECK(text.find("0.750000000,0.002500000,liouville,cond3\n") != std::string::npos);
  GridScan rad = scan_grid(6, {3, 4}, {0.4, 0.5}, 2, 2, false);
  CHECK(csv_of(rad).find("3.250000000,0.425000000,radial_exists,\n") != std::string::npos);
}

TEST_CASE("scan is deterministic across thread counts") {
  ScanOptions one, many;
  one.threads = 1;
  many.threads = 8;
  GridScan a = scan_grid(5, {-1, 5}, {0, 2}, 60, 50, false, one);
  GridScan b = scan_grid(5, {-1, 5}, {0, 2}, 60, 50, false, many);
  CHECK(csv_of(a) == csv_of(b));
  CHECK(a.cells.size() == 3000);
  CHECK(a.disjointness_violations == 0);
}

TEST_CASE("overlays") {
  GridScan s = scan_grid(6, {-1, 4}, {0, 2}, 4, 4, false);
  std::set<std::string> names;
  for (const auto& pl : s.overlays) names.insert(pl.name);
  for (const char* want : {"V", "G=0", "H=0", "p+q=(n+2)/(n-2)", "q=1-1/sqrt(n-1)", "q=1", "q=3/2", "q=5/3", "q=2"})
    CHECK_MESSAGE(names.count(want) == 1, want);
  for (const auto& pl : s.overlays)
    for (auto [p, q] : pl.pts) {
      CHECK(p >= -1);
      CHECK(p <= 4);
    }
}

TEST_CASE("svg") {
  GridScan s = scan_grid(6, {0, 1}, {0, 1}, 2, 2, false);
  std::ostringstream os;
  emit_svg(s, os);
  std::string svg = os.str();
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  std::ostringstream again;
  emit_svg(s, again);
  CHECK(again.str() == svg);
  CHECK_THROWS(emit_svg(s, std::string("/nonexistent-dir/x.svg")));
}

TEST_CASE("svg with distinct cells") {
  GridScan s = scan_grid(6, {0, 4}, {0, 2}, 2, 2, false);
  std::ostringstream os;
  emit_svg(s, os);
  std::string svg = os.str();
  std::size_t rects = 0;
  for (std::size_t at = svg.find("<g shape-rendering"); (at = svg.find("<rect", at + 1)) != std::string::npos &&
                                                        at < svg.find("</g>");)
    ++rects;
  CHECK(rects >= 2);
  CHECK(rects <= 4);
}

TEST_CASE("cache round trip") {
  pql::domains::SupTable t;
  t.get(pql::domains::FeasSet::D, 6, 1.2);
  t.get(pql::domains::FeasSet::E, 6, 1.5);
  t.get(pql::domains::FeasSet::D, 4, 0.5);
  auto recs = t.records();
  auto back = cache_roundtrip(recs);
  REQUIRE(back.size() == recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(back[i].sup.value == recs[i].sup.value);
    CHECK(back[i].sup.argmax_y == recs[i].sup.argmax_y);
    CHECK(back[i].q == recs[i].q);
    CHECK(back[i].tol == recs[i].tol);
    CHECK(back[i].set == recs[i].set);
  }
  CHECK(cache_roundtrip({}).empty());

  pql::domains::SupTable::Record inf{pql::domains::FeasSet::D, 5, 0.9, 1e-9, {}};
  inf.sup.plus_infinity = true;
  inf.sup.value = INFINITY;
  CHECK(std::isinf(cache_roundtrip({inf}).front().sup.value));
}

TEST_CASE("corrupt cache lines are skipped") {
  auto path = tmp("pql_cache_test.jsonl").string();
  pql::domains::SupTable t;
  for (int k = 0; k < 9; ++k) t.get(pql::domains::FeasSet::D, 6, 0.6 + 0.05 * k);
  save_cache(path, t.records());
  {
    std::ofstream f(path, std::ios::app);
    f << "{\"set\":\"D\",\"n\":6,\"q\":\"oops\"}\n";
  }
  CacheLoad l = load_cache(path);
  CHECK(l.records.size() == 9);
  CHECK(l.warnings.size() == 1);
  std::filesystem::remove(path);
  CHECK(load_cache(path).records.empty());
}

TEST_CASE("default cache path honours PQL_CACHE") {
  setenv("PQL_CACHE", "/tmp/elsewhere.jsonl", 1);
  CHECK(default_cache_path() == "/tmp/elsewhere.jsonl");
  unsetenv("PQL_CACHE");
  CHECK(default_cache_path() == ".pql_cache.jsonl");
}
