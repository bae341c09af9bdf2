#include <mutex>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "pql/coeffs/coeffs.hpp"

namespace pql::coeffs {
namespace {

std::string clip(const std::string& s) {
  constexpr std::size_t kMax = 400;
  return s.size() > kMax ? s.substr(0, kMax) + "..." : s;
}

std::string residual_of(const RatExpr& diff) {
  return clip(RatExpr::from_ratfunc(diff.canon()).str());
}

Check identity(const std::string& name, const RatExpr& lhs, const RatExpr& rhs) {
  RatExpr diff = lhs - rhs;
  Check c{name, diff.is_zero(), ""};
  if (!c.ok) c.residual = residual_of(diff);
  return c;
}

// gamma = -1, k = -(1 - q/2) beta.
std::map<cas::SymbolId, RatExpr> reduction() {
  RatExpr q = RatExpr::var("q"), beta = RatExpr::var("beta");
  return {{cas::intern("gamma"), RatExpr(-1L)}, {cas::intern("k"), -((1L - q / 2L) * beta)}};
}

const CoeffSystem& cached_full() {
  static std::once_flag once;
  static CoeffSystem s;
  std::call_once(once, [] { s = handcoded_system(SystemName::S_full); });
  return s;
}

const CoeffSystem& cached_reduced() {
  static std::once_flag once;
  static CoeffSystem s;
  std::call_once(once, [] { s = handcoded_system(SystemName::S_reduced); });
  return s;
}

}  // namespace

bool Report::ok() const {
  for (const auto& c : checks)
    if (!c.info && !c.ok) return false;
  return true;
}

std::string Report::text() const {
  std::ostringstream os;
  os << title << "\n";
  for (const auto& c : checks) {
    const char* tag = c.info ? (c.ok ? "match" : "MISMATCH (noted)") : (c.ok ? "pass" : "FAIL");
    os << "  [" << tag << "] " << c.name << "\n";
    if (!c.residual.empty()) os << "      " << c.residual << "\n";
  }
  os << (ok() ? "  => all checks passed\n" : "  => FAILED\n");
  return os.str();
}

std::string Report::json() const {
  nlohmann::json j;
  j["title"] = title;
  j["ok"] = ok();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e{{"identity_name", c.name},
                     {"status", c.info ? (c.ok ? "info-match" : "info-mismatch") : (c.ok ? "pass" : "fail")}};
    if (!c.residual.empty()) e["residual_expr"] = c.residual;
    j["checks"].push_back(e);
  }
  return j.dump();
}

Report verify_transcription(const Corpus& c) {
  Report r{"two-source transcription (formula file vs hand-coded)", {}};
  for (auto name : {SystemName::S_full, SystemName::S_reduced, SystemName::I_full}) {
    CoeffSystem a = corpus_system(c, name), b = handcoded_system(name);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
      r.checks.push_back(identity(system_label(name, i), a.entries[i], b.entries[i]));
  }
  return r;
}

Report verify_S_reduction(const Corpus& c) {
  Report r{"reduction gamma=-1, k=-(1-q/2)beta of SF1..SF6", {}};
  auto red = reduction();
  RatExpr h3 = pow(1L - RatExpr::var("q") / 2L, 3);
  for (int i = 4; i <= 6; ++i) {
    std::string nm = "SF" + std::to_string(i);
    r.checks.push_back(identity(nm + " == 0", substitute(c.get(nm), red), RatExpr(0L)));
  }
  for (int i = 1; i <= 3; ++i) {
    std::string nm = "SF" + std::to_string(i), s = "S" + std::to_string(i);
    r.checks.push_back(identity(nm + " == (1-q/2)^3*" + s, substitute(c.get(nm), red), h3 * c.get(s)));
  }
  return r;
}

Report verify_I_asymptotics(const Corpus& c, Expansion var) {
  const bool rho = var == Expansion::rho;
  const std::string vname = rho ? "rho" : "epsilon";
  const unsigned max_deg = rho ? 3 : 4;
  Report r{"expansion of I1..I10 in " + vname, {}};
  auto red = reduction();

  std::map<int, std::vector<RatExpr>> coeffs;
  for (int j = 1; j <= 10; ++j) {
    std::string nm = "I" + std::to_string(j);
    Check deg{nm + " is polynomial in " + vname + " of degree <= " + std::to_string(max_deg), true, ""};
    try {
      coeffs[j] = cas::poly_coeffs_in(substitute(c.get(nm), red), vname, max_deg);
    } catch (const cas::AlgebraError& e) {
      deg.ok = false;
      deg.residual = e.what();
    }
    r.checks.push_back(deg);
  }

  const std::regex claim(std::string(rho ? "RHO" : "EPS") + "_I([0-9]+)_([0-9]+)");
  for (const auto& name : c.names()) {
    std::smatch m;
    if (!std::regex_match(name, m, claim)) continue;
    int j = std::stoi(m[1]);
    unsigned order = static_cast<unsigned>(std::stoi(m[2]));
    auto it = coeffs.find(j);
    if (it == coeffs.end()) continue;
    for (unsigned i = 0; i < order; ++i)
      r.checks.push_back(identity("I" + std::to_string(j) + ": " + vname + "^" + std::to_string(i) + " coefficient vanishes",
                                  it->second[i], RatExpr(0L)));
    r.checks.push_back(identity("I" + std::to_string(j) + ": " + vname + "^" + std::to_string(order) + " coefficient",
                                it->second[order], substitute(c.get(name), red)));
  }
  if (c.has("EXACT_I10"))
    r.checks.push_back(identity("I10 is a single monomial term", substitute(c.get("I10"), red),
                                substitute(c.get("EXACT_I10"), red)));
  return r;
}

Rational critical_d(int n, const Rational& q) {
  Rational r = (1 - q) * (n - 2) / (n - (n - 1) * q);
  return r;
}

Rational variant_critical_d(int n, const Rational& q) {
  Rational r = Rational(n - 2) / ((1 - q) * (n - (n - 1) * q));
  return r;
}

std::vector<Rational> critical_values(int n, const Rational& q, const Rational& d) {
  if (n < 3 || q <= 0 || q >= 1 || n - (n - 1) * q <= 0)
    throw PreconditionError("critical point needs n >= 3, 0 < q < 1, n-(n-1)q > 0");
  Rational beta(2, n - 2);
  beta.canonicalize();
  Rational sig = -q / (n - (n - 1) * q);
  Rational l = (2 - q) * (2 - q) / ((1 - q) * (n - 2));
  cas::VarBindings b{{cas::intern("n"), Rational(n)},
                     {cas::intern("q"), q},
                     {cas::intern("l"), l},
                     {cas::intern("beta"), beta},
                     {cas::intern("delta"), beta},
                     {cas::intern("gamma"), Rational(-1)},
                     {cas::intern("k"), -(1 - q / 2) * beta},
                     {cas::intern("d"), d},
                     {cas::intern("sigma"), sig},
                     {cas::intern("tau"), sig}};
  std::vector<Rational> out;
  for (const auto& e : cached_full().entries) out.push_back(cas::eval_rational(e, b));
  return out;
}

bool critical_vanishing(int n, const Rational& q) {
  for (const auto& v : critical_values(n, q, critical_d(n, q)))
    if (v != 0) return false;
  return true;
}

Report critical_vanishing_report(const std::vector<int>& ns, const std::vector<Rational>& qs) {
  Report r{"SF1..SF6 vanish at the critical parameters", {}};
  for (int n : ns) {
    for (const auto& q : qs) {
      if (n - (n - 1) * q <= 0) continue;
      auto vals = critical_values(n, q, critical_d(n, q));
      Check c{"n=" + std::to_string(n) + " q=" + q.get_str(), true, ""};
      for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] != 0) {
          c.ok = false;
          c.residual += "SF" + std::to_string(i + 1) + "=" + vals[i].get_str() + " ";
        }
      }
      r.checks.push_back(c);
    }
  }
  // The variant weight does not annihilate SF2, SF3.
  Rational q(1, 2);
  auto vals = critical_values(3, q, variant_critical_d(3, q));
  Check info{"variant weight d=(n-2)/((1-q)(n-(n-1)q)) at n=3 q=1/2", true, "", true};
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] != 0) {
      info.ok = false;
      info.residual += "SF" + std::to_string(i + 1) + "=" + vals[i].get_str() + " ";
    }
  }
  r.checks.push_back(info);
  return r;
}

std::vector<Rational> reduced_S(int n, const Rational& l, const Rational& q, const Rational& beta,
                                const Rational& d, const Rational& sigma) {
  cas::VarBindings b{{cas::intern("n"), Rational(n)}, {cas::intern("q"), q},    {cas::intern("l"), l},
                     {cas::intern("beta"), beta},     {cas::intern("d"), d},    {cas::intern("sigma"), sigma}};
  std::vector<Rational> out;
  for (const auto& e : cached_reduced().entries) out.push_back(cas::eval_rational(e, b));
  return out;
}

}  // namespace pql::coeffs
