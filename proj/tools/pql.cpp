// Command-line front end.  Exit codes: 0 success, 1 verification failure, 2 usage error.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pql/atlas/atlas.hpp"
#include "pql/coeffs/coeffs.hpp"
#include "pql/domains/domains.hpp"
#include "pql/radial/radial.hpp"

namespace {

namespace dom = pql::domains;
namespace rad = pql::radial;
namespace cf = pql::coeffs;
using pql::cas::Rational;

constexpr int kOk = 0, kFail = 1, kUsage = 2;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

int cmd_classify(int n, double p, double q, bool bounded) {
  dom::Verdict v = dom::classify({n, p, q}, bounded);
  std::cout << "status: " << dom::status_id(v.status) << "\n"
            << "criterion: " << v.criterion << "\n"
            << "fired:";
  for (const auto& c : v.fired) std::cout << ' ' << c;
  std::cout << "\n";
  if (v.boundary) std::cout << "note: a frontier test fell inside the boundary band\n";
  return kOk;
}

double rational_arg(const std::string& text) {
  try {
    return pql::cas::parse_rational(text).get_d();
  } catch (const pql::cas::Error& e) {
    throw pql::PreconditionError(e.what());
  }
}

std::string opt_num(const std::optional<double>& x) { return x ? num(*x) : ""; }

std::pair<std::optional<double>, std::optional<double>> quad_roots(double a, double b, double c) {
  double disc = b * b - 4 * a * c;
  if (a == 0 || disc < 0) return {};
  double s = std::sqrt(disc);
  return {(-b - s) / (2 * a), (-b + s) / (2 * a)};
}

int cmd_curves(int n, double q_min, double q_max, double step, const std::string& out) {
  if (n < 3) throw pql::PreconditionError("curves need n >= 3");
  if (!(step > 0) || !(q_min <= q_max) || q_min < 0) throw pql::PreconditionError("need 0 <= q-min <= q-max and step > 0");
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot open '" + out + "'");
  f << "q,l_V,p_V,G_root_lo,G_root_hi,H_root_lo,H_root_hi\n";
  for (long k = 0;; ++k) {
    double q = q_min + k * step;
    if (q > q_max + 1e-12 * std::max(1.0, std::abs(q_max))) break;
    std::optional<double> lv;
    if (q < 1) lv = dom::curve_V(n, q);
    auto g = quad_roots((n - 1.0) * (n - 1) * q + n - 2, n * (n - 1.0) * q * q - (n * n + n - 1.0) * q - n - 2, -n * q * q);
    auto h = quad_roots(1, (n - 1.0) / (n - 2) * q - (n * n - 3.0) / ((n - 2.0) * (n - 2)),
                        (1 - (n - 1.0) * q) / ((n - 2.0) * (n - 2)));
    f << num(q) << ',' << opt_num(lv) << ',' << opt_num(lv ? std::optional(*lv + 1 - q) : std::nullopt) << ','
      << opt_num(g.first) << ',' << opt_num(g.second) << ',' << opt_num(h.first) << ',' << opt_num(h.second) << '\n';
  }
  return kOk;
}

int cmd_domain_sup(const std::string& set, int n, double q, double tol) {
  dom::FeasSet s = set == "L" ? dom::FeasSet::D : dom::FeasSet::E;
  dom::SupResult r = dom::sup_phi(s, n, q, tol);
  std::cout << "set: " << set << " (feasibility set " << dom::to_string(s) << ")\n";
  if (r.empty)
    std::cout << "value: -inf (no feasible y)\n";
  else if (r.plus_infinity)
    std::cout << "value: +inf (feasible y accumulate at 2)\n";
  else
    std::cout << "value: " << num(r.value) << "\nargmax_y: " << num(r.argmax_y) << "\n";
  std::cout << "feasible_grid_cells: " << r.grid_cells_feasible << "\n";
  return kOk;
}

int cmd_atlas(int n, const std::string& pr, const std::string& qr, int res, bool bounded, const std::string& csv,
              const std::string& svg, std::string cache) {
  if (cache.empty()) cache = pql::atlas::default_cache_path();
  dom::SupTable memo;
  auto loaded = pql::atlas::load_cache(cache);
  for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& r : loaded.records) memo.insert(r);

  pql::atlas::ScanOptions opt;
  opt.memo = &memo;
  auto scan = pql::atlas::scan_grid(n, pql::atlas::parse_range(pr), pql::atlas::parse_range(qr), res, res, bounded, opt);
  pql::atlas::emit_csv(scan, csv);
  if (!svg.empty()) pql::atlas::emit_svg(scan, svg);
  try {
    pql::atlas::save_cache(cache, memo.records());
  } catch (const std::exception& e) {
    std::cerr << "warning: " << e.what() << "\n";
  }
  std::cout << "cells: " << scan.cells.size() << "\ndisjointness violations: " << scan.disjointness_violations
            << "\n";
  for (const auto& v : scan.violations) std::cerr << "violation: " << v << "\n";
  return scan.disjointness_violations ? kFail : kOk;
}

int cmd_verify_algebra(const std::string& lemma, const std::string& json_out) {
  const auto& c = cf::Corpus::bundled();
  std::vector<cf::Report> reports;
  bool all = lemma == "all";
  if (all || lemma == "cl") {
    reports.push_back(cf::verify_transcription(c));
    reports.push_back(cf::verify_S_reduction(c));
  }
  if (all || lemma == "a3") reports.push_back(cf::verify_I_asymptotics(c, cf::Expansion::rho));
  if (all || lemma == "a4") reports.push_back(cf::verify_I_asymptotics(c, cf::Expansion::epsilon));
  if (all || lemma == "opt") {
    std::vector<int> ns;
    for (int n = 3; n <= 12; ++n) ns.push_back(n);
    std::vector<Rational> qs;
    for (int k = 1; k <= 9; ++k) qs.emplace_back(k, 10);
    reports.push_back(cf::critical_vanishing_report(ns, qs));
  }
  if (all || lemma == "s3quad") reports.push_back(cf::s3_quadratic_check());
  bool ok = true;
  std::string json = "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    std::cout << reports[i].text() << "\n";
    ok = ok && reports[i].ok();
    json += (i ? "," : "") + reports[i].json();
  }
  json += "]";
  if (!json_out.empty()) {
    std::ofstream f(json_out);
    if (!f) throw std::runtime_error("cannot open '" + json_out + "'");
    f << json << "\n";
  }
  std::cout << (ok ? "all checks passed" : "VERIFICATION FAILED") << "\n";
  return ok ? kOk : kFail;
}

int cmd_verify_identity(int n, const std::string& q_text, const std::string& beta_text, const std::string& sigma_text,
                        int samples) {
  if (samples < 1) throw pql::PreconditionError("--samples must be positive");
  const double q = rational_arg(q_text);
  const double beta = beta_text.empty() ? 2.0 / (n - 2) : rational_arg(beta_text);
  const double sigma = sigma_text.empty() ? -q / (n - (n - 1) * q) : rational_arg(sigma_text);
  const auto gs = rad::ClosedForm::ground_state(n, q);
  double worst_id = 0, worst_pde = 0, worst_dev = 0;
  std::vector<double> rs;
  for (int i = 0; i < samples; ++i) {
    double r = samples == 1 ? 1.0 : 0.1 * std::pow(100.0, double(i) / (samples - 1));
    rs.push_back(r);
    worst_id = std::max(worst_id, rad::deltaH_sides(n, q, beta, sigma, r).relative());
    worst_pde = std::max(worst_pde, rad::pde_residual_relative(gs, r));
    worst_dev = std::max(worst_dev, rad::tensor_deviation(n, q, beta, sigma, r));
  }
  double spread = rad::relative_spread(rad::aux_F_profile(n, q, rs));
  std::cout << "ground state n=" << n << " q=" << q_text << " (p=" << num(gs.p) << ", K=" << num(gs.K) << ")\n"
            << "beta=" << num(beta) << " sigma=" << num(sigma) << " radii in [0.1, 10]: " << samples << "\n"
            << "max relative PDE residual:      " << num(worst_pde) << "\n"
            << "max relative DeltaH residual:   " << num(worst_id) << "\n"
            << "max tensor deviation:           " << num(worst_dev) << "\n"
            << "F relative spread (critical d): " << num(spread) << "\n";
  bool ok = worst_id <= 1e-8 && worst_pde <= 1e-10;
  std::cout << (ok ? "identity verified" : "VERIFICATION FAILED") << "\n";
  return ok ? kOk : kFail;
}

int cmd_shoot(int n, double p, double q, double u0, double rmax, double tol) {
  auto o = rad::shoot(n, p, q, u0, rmax, tol);
  std::cout << "status: " << rad::to_string(o.status) << "\n";
  if (o.status == rad::RadialOutcome::Status::HitsZero) std::cout << "radius: " << num(o.radius) << "\n";
  if (!o.reason.empty()) std::cout << "reason: " << o.reason << "\n";
  std::cout << "steps: " << o.steps << "\nfinal_r: " << num(o.final_r) << "\nfinal_u: " << num(o.final_u)
            << "\nfinal_du: " << num(o.final_du) << "\n";
  return kOk;
}

int cmd_threshold(int n, double q, double lo, double hi, double ptol) {
  auto r = rad::existence_threshold_run(n, q, lo, hi, ptol);
  std::cout << "p*: " << num(r.p_star) << "\nbracket: [" << num(r.p_lo) << ", " << num(r.p_hi) << "]\nshots: " << r.shots
            << "\n";
  if (n >= 3) std::cout << "predicted (l_V + 1 - q): " << num(dom::curve_V(n, q) + 1 - q) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Liouville regions and radial solutions of  Lap u + |grad u|^q u^p = 0"};
  app.set_config("--config", "", "key=value configuration file (flags override it)");
  app.require_subcommand(1);
  int rc = kOk;

  int n = 3;
  double p = 0, q = 0;
  bool bounded = false;
  auto* c_classify = app.add_subcommand("classify", "classify one (n,p,q) point");
  c_classify->add_option("--n", n)->required();
  c_classify->add_option("--p", p)->required();
  c_classify->add_option("--q", q)->required();
  c_classify->add_flag("--bounded", bounded, "assume the solution is bounded");
  c_classify->callback([&] { rc = cmd_classify(n, p, q, bounded); });

  double q_min = 0, q_max = 0, step = 0;
  std::string out;
  auto* c_curves = app.add_subcommand("curves", "CSV of l_V, G roots and H roots per q");
  c_curves->add_option("--n", n)->required();
  c_curves->add_option("--q-min", q_min)->required();
  c_curves->add_option("--q-max", q_max)->required();
  c_curves->add_option("--step", step)->required();
  c_curves->add_option("--out", out)->required();
  c_curves->callback([&] { rc = cmd_curves(n, q_min, q_max, step, out); });

  std::string set;
  double tol = 1e-9;
  auto* c_sup = app.add_subcommand("domain-sup", "supremum L(n,q) or H(n,q)");
  c_sup->add_option("--set", set)->required()->check(CLI::IsMember({"L", "H"}));
  c_sup->add_option("--n", n)->required();
  c_sup->add_option("--q", q)->required();
  c_sup->add_option("--tol", tol)->required();
  c_sup->callback([&] { rc = cmd_domain_sup(set, n, q, tol); });

  std::string p_range, q_range, csv, svg, cache;
  int res = 0;
  auto* c_atlas = app.add_subcommand("atlas", "classify a (p,q) grid and write CSV/SVG");
  c_atlas->add_option("--n", n)->required();
  c_atlas->add_option("--p-range", p_range, "LO:HI")->required();
  c_atlas->add_option("--q-range", q_range, "LO:HI")->required();
  c_atlas->add_option("--res", res, "cells per axis")->required();
  c_atlas->add_flag("--bounded", bounded);
  c_atlas->add_option("--csv", csv)->required();
  c_atlas->add_option("--svg", svg);
  c_atlas->add_option("--cache", cache, "suprema cache (default: $PQL_CACHE or .pql_cache.jsonl)");
  c_atlas->callback([&] { rc = cmd_atlas(n, p_range, q_range, res, bounded, csv, svg, cache); });

  std::string lemma = "all", json_out;
  auto* c_alg = app.add_subcommand("verify-algebra", "exact checks of the coefficient systems");
  c_alg->add_option("--lemma", lemma)->check(CLI::IsMember({"cl", "a3", "a4", "opt", "s3quad", "all"}));
  c_alg->add_option("--json", json_out, "also write the reports as JSON");
  c_alg->callback([&] { rc = cmd_verify_algebra(lemma, json_out); });

  std::string q_text, beta_text, sigma_text;
  int samples = 0;
  auto* c_id = app.add_subcommand("verify-identity", "residual checks on the explicit ground state");
  c_id->add_option("--n", n)->required();
  c_id->add_option("--q", q_text, "rational, e.g. 1/2")->required();
  auto* ob = c_id->add_option("--beta", beta_text);
  auto* os = c_id->add_option("--sigma", sigma_text);
  ob->needs(os);
  os->needs(ob);
  c_id->add_option("--samples", samples)->required();
  c_id->callback([&] { rc = cmd_verify_identity(n, q_text, beta_text, sigma_text, samples); });

  double u0 = 1, rmax = 0;
  auto* c_shoot = app.add_subcommand("shoot", "integrate the radial ODE from the centre");
  c_shoot->add_option("--n", n)->required();
  c_shoot->add_option("--p", p)->required();
  c_shoot->add_option("--q", q)->required();
  c_shoot->add_option("--u0", u0)->required();
  c_shoot->add_option("--rmax", rmax)->required();
  c_shoot->add_option("--tol", tol)->required();
  c_shoot->callback([&] { rc = cmd_shoot(n, p, q, u0, rmax, tol); });

  double p_lo = 0, p_hi = 0, ptol = 0;
  auto* c_thr = app.add_subcommand("threshold", "bisect the radial existence threshold in p");
  c_thr->add_option("--n", n)->required();
  c_thr->add_option("--q", q)->required();
  c_thr->add_option("--p-lo", p_lo)->required();
  c_thr->add_option("--p-hi", p_hi)->required();
  c_thr->add_option("--ptol", ptol)->required();
  c_thr->callback([&] { rc = cmd_threshold(n, q, p_lo, p_hi, ptol); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const pql::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return rc;
}
