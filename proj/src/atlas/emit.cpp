#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "pql/atlas/atlas.hpp"

namespace pql::atlas {
namespace {

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  return f;
}

void close_out(std::ofstream& f, const std::string& path) {
  f.close();
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

const char* fill_of(domains::Status s) {
  switch (s) {
    case domains::Status::LiouvilleProven:
      return "#8e5bb5";
    case domains::Status::LiouvilleBoundedOnly:
      return "#4a78d0";
    case domains::Status::RadialSolutionsExist:
      return "#ffffff";
    case domains::Status::Unknown:
      return "#c4c4c4";
  }
  return "#c4c4c4";
}

const char* stroke_of(const std::string& name) {
  static const std::map<std::string, const char*> colors = {
      {"V", "#d62728"},          {"G=0", "#2ca02c"},         {"H=0", "#ff7f0e"},
      {"p+q=(n+2)/(n-2)", "#17becf"}, {"L-frontier", "#e6b800"}, {"H-frontier", "#b8860b"}};
  auto it = colors.find(name);
  return it == colors.end() ? "#555555" : it->second;
}

}  // namespace

void emit_csv(const GridScan& scan, std::ostream& os) {
  os << "p,q,status,criteria\n";
  for (int i = 0; i < scan.res_q; ++i) {
    const std::string q = fmt("%.9f", scan.q_at(i));
    for (int j = 0; j < scan.res_p; ++j) {
      const auto& v = scan.at(i, j);
      os << fmt("%.9f", scan.p_at(j)) << ',' << q << ',' << domains::status_id(v.status) << ',' << v.criterion << '\n';
    }
  }
}

void emit_csv(const GridScan& scan, const std::string& path) {
  auto f = open_out(path);
  emit_csv(scan, f);
  close_out(f, path);
}

void emit_svg(const GridScan& scan, std::ostream& os) {
  const double W = 720, H = 560, ml = 60, mr = 170, mt = 30, mb = 50;
  const Range pr = scan.p_range, qr = scan.q_range;
  auto X = [&](double p) { return ml + (p - pr.lo) / (pr.hi - pr.lo) * W; };
  auto Y = [&](double q) { return mt + H - (q - qr.lo) / (qr.hi - qr.lo) * H; };
  auto c = [](double v) { return fmt("%.3f", v); };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << c(ml + W + mr) << "\" height=\""
     << c(mt + H + mb) << "\" viewBox=\"0 0 " << c(ml + W + mr) << ' ' << c(mt + H + mb) << "\">\n"
     << "<title>n=" << scan.n << (scan.bounded ? ", bounded" : "") << "</title>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << c(ml + W + mr) << "\" height=\"" << c(mt + H + mb)
     << "\" fill=\"#ffffff\"/>\n";

  // cells, merged into horizontal runs of equal status
  const double dp = (pr.hi - pr.lo) / scan.res_p, dq = (qr.hi - qr.lo) / scan.res_q;
  os << "<g shape-rendering=\"crispEdges\" stroke=\"none\">\n";
  for (int i = 0; i < scan.res_q; ++i) {
    double y0 = Y(qr.lo + (i + 1) * dq), y1 = Y(qr.lo + i * dq);
    for (int j = 0; j < scan.res_p;) {
      domains::Status s = scan.at(i, j).status;
      int k = j + 1;
      while (k < scan.res_p && scan.at(i, k).status == s) ++k;
      os << "<rect x=\"" << c(X(pr.lo + j * dp)) << "\" y=\"" << c(y0) << "\" width=\""
         << c(X(pr.lo + k * dp) - X(pr.lo + j * dp)) << "\" height=\"" << c(y1 - y0) << "\" fill=\"" << fill_of(s)
         << "\"/>\n";
      j = k;
    }
  }
  os << "</g>\n";

  // frame and integer ticks
  os << "<rect x=\"" << c(ml) << "\" y=\"" << c(mt) << "\" width=\"" << c(W) << "\" height=\"" << c(H)
     << "\" fill=\"none\" stroke=\"#000000\"/>\n<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (long t = std::lround(std::ceil(pr.lo)); t <= std::floor(pr.hi); ++t) {
    double x = X(double(t));
    os << "<line x1=\"" << c(x) << "\" y1=\"" << c(mt + H) << "\" x2=\"" << c(x) << "\" y2=\"" << c(mt + H + 6)
       << "\" stroke=\"#000000\"/><text x=\"" << c(x) << "\" y=\"" << c(mt + H + 20) << "\" text-anchor=\"middle\">" << t
       << "</text>\n";
  }
  for (long t = std::lround(std::ceil(qr.lo)); t <= std::floor(qr.hi); ++t) {
    double y = Y(double(t));
    os << "<line x1=\"" << c(ml - 6) << "\" y1=\"" << c(y) << "\" x2=\"" << c(ml) << "\" y2=\"" << c(y)
       << "\" stroke=\"#000000\"/><text x=\"" << c(ml - 10) << "\" y=\"" << c(y + 4) << "\" text-anchor=\"end\">" << t
       << "</text>\n";
  }
  os << "<text x=\"" << c(ml + W / 2) << "\" y=\"" << c(mt + H + 40) << "\" text-anchor=\"middle\">p</text>\n"
     << "<text x=\"" << c(ml - 40) << "\" y=\"" << c(mt + H / 2) << "\" text-anchor=\"middle\">q</text>\n";

  // overlays, each name labelled once at its last point
  std::set<std::string> labelled;
  for (const auto& pl : scan.overlays) {
    os << "<polyline fill=\"none\" stroke=\"" << stroke_of(pl.name) << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < pl.pts.size(); ++k)
      os << (k ? " " : "") << c(X(pl.pts[k].first)) << ',' << c(Y(pl.pts[k].second));
    os << "\"/>\n";
    if (labelled.insert(pl.name).second && !pl.pts.empty()) {
      auto [p, q] = pl.pts.back();
      os << "<text x=\"" << c(X(p) + 4) << "\" y=\"" << c(Y(q) - 3) << "\" fill=\"" << stroke_of(pl.name)
         << "\" font-size=\"10\">" << pl.name << "</text>\n";
    }
  }

  // legend
  const std::pair<domains::Status, const char*> legend[] = {{domains::Status::LiouvilleProven, "Liouville"},
                                                            {domains::Status::LiouvilleBoundedOnly, "bounded only"},
                                                            {domains::Status::RadialSolutionsExist, "radial solutions"},
                                                            {domains::Status::Unknown, "unknown"}};
  double ly = mt + 10;
  for (auto [s, label] : legend) {
    os << "<rect x=\"" << c(ml + W + 20) << "\" y=\"" << c(ly) << "\" width=\"14\" height=\"14\" fill=\"" << fill_of(s)
       << "\" stroke=\"#000000\"/><text x=\"" << c(ml + W + 40) << "\" y=\"" << c(ly + 11) << "\">" << label
       << "</text>\n";
    ly += 22;
  }
  os << "</g>\n</svg>\n";
}

void emit_svg(const GridScan& scan, const std::string& path) {
  auto f = open_out(path);
  emit_svg(scan, f);
  close_out(f, path);
}

}  // namespace pql::atlas
