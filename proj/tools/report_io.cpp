#include "report_io.hpp"

#include <algorithm>
#include <sstream>

#include "bic/schemes.hpp"
#include "bic/verifier.hpp"
#include "json.hpp"

namespace bic::tool {

using nlohmann::json;

RegionReport compute_region_report(Setup setup, unsigned M, unsigned L, unsigned n,
                                   unsigned k, bool include_conjectured) {
  RegionReport r;
  r.setup = setup;
  r.M = M;
  r.L = L;
  r.n = n;
  r.k = k;
  r.alpha = Rational(k, n);
  r.regime = classify_regime(M, L, r.alpha);
  r.corners = inner_corners(setup, M, L, n, k);
  r.bounds = outer_halfplanes(setup, M, L, n, k, include_conjectured);
  r.tightness = tightness_report(setup, M, L, n, k);
  r.include_conjectured = include_conjectured;
  return r;
}

namespace {

json point_json(const RatePoint& p) {
  return json::array({p.x.str(), p.y.str()});
}

json regime_json(const RegimeId& regime) {
  json bands = json::array();
  for (const auto& [lo, hi] : regime.alpha_bands) bands.push_back(lo.str() + ".." + hi.str());
  const char* side = regime.l_side == RegimeId::LSide::low    ? "low"
                     : regime.l_side == RegimeId::LSide::high ? "high"
                                                              : "boundary";
  return json{{"l_side", side}, {"alpha_bands", bands}};
}

const char* axis_x_name(Setup s) { return s == Setup::r0rl ? "R_L" : "R_M"; }
const char* axis_y_name(Setup s) { return s == Setup::r0rl ? "R_0" : "R_L"; }

}  // namespace

std::string region_to_json(const RegionReport& r) {
  json j;
  j["setup"] = setup_name(r.setup);
  j["M"] = r.M;
  j["L"] = r.L;
  j["n"] = r.n;
  j["k"] = r.k;
  j["alpha"] = r.alpha.str();
  j["axes"] = json{{"x", axis_x_name(r.setup)}, {"y", axis_y_name(r.setup)}};
  j["regime"] = regime_json(r.regime);
  json corners = json::array();
  for (const auto& c : r.corners) {
    corners.push_back(json{{"corner", corner_name(c.id)},
                           {"payload", msg_class_name(c.payload)},
                           {"x", c.point.x.str()},
                           {"y", c.point.y.str()},
                           {"x_symbols_per_use", (c.point.x * Rational(r.n)).str()},
                           {"y_symbols_per_use", (c.point.y * Rational(r.n)).str()}});
  }
  j["corners"] = corners;
  json bounds = json::array();
  for (const auto& h : r.bounds) {
    bounds.push_back(json{{"label", h.label},
                          {"status", h.status == BoundStatus::proven ? "proven" : "conjectured"},
                          {"a", h.a.str()},
                          {"b", h.b.str()},
                          {"c", h.c.str()}});
  }
  j["bounds"] = bounds;
  j["verdict"] = tightness_name(r.tightness.verdict);
  json gaps = json::array();
  for (const auto& v : r.tightness.gap_vertices) gaps.push_back(point_json(v));
  j["gap_vertices"] = gaps;
  json inner = json::array();
  for (const auto& v : r.tightness.inner.vertices) inner.push_back(point_json(v));
  j["inner_vertices"] = inner;
  json outer = json::array();
  for (const auto& v : r.tightness.outer_proven.vertices) outer.push_back(point_json(v));
  j["outer_proven_vertices"] = outer;
  return j.dump(2) + "\n";
}

std::string region_to_csv(const RegionReport& r) {
  std::ostringstream os;
  os << "kind,label,status,x_or_a,y_or_b,c\n";
  for (const auto& c : r.corners)
    os << "corner," << corner_name(c.id) << "," << msg_class_name(c.payload) << ","
       << c.point.x << "," << c.point.y << ",\n";
  for (const auto& h : r.bounds)
    os << "bound," << h.label << ","
       << (h.status == BoundStatus::proven ? "proven" : "conjectured") << "," << h.a << ","
       << h.b << "," << h.c << "\n";
  os << "verdict," << tightness_name(r.tightness.verdict) << ",,,,\n";
  for (const auto& v : r.tightness.gap_vertices)
    os << "gap_vertex,,," << v.x << "," << v.y << ",\n";
  return os.str();
}

std::string region_to_text(const RegionReport& r) {
  std::ostringstream os;
  os << "setup " << setup_name(r.setup) << " M=" << r.M << " L=" << r.L << " n=" << r.n
     << " k=" << r.k << " alpha=" << r.alpha << "\n";
  os << "regime: " << r.regime.str() << "\n";
  os << "axes: x=" << axis_x_name(r.setup) << " y=" << axis_y_name(r.setup)
     << " (per-n)\n";
  for (const auto& c : r.corners)
    os << "corner " << corner_name(c.id) << " payload=" << msg_class_name(c.payload)
       << " (" << c.point.x << ", " << c.point.y << ")\n";
  for (const auto& h : r.bounds)
    os << "bound " << h.label << " ["
       << (h.status == BoundStatus::proven ? "proven" : "conjectured") << "] " << h.a
       << "*x + " << h.b << "*y <= " << h.c << "\n";
  os << "verdict: " << tightness_name(r.tightness.verdict) << "\n";
  for (const auto& v : r.tightness.gap_vertices)
    os << "gap vertex (" << v.x << ", " << v.y << ")\n";
  return os.str();
}

std::string region_to_svg(const RegionReport& r) {
  const double W = 640, H = 520, ML = 70, MR = 30, MT = 40, MB = 60;
  Rational max_x(1), max_y(1);
  auto stretch = [&](const std::vector<RatePoint>& pts) {
    for (const auto& p : pts) {
      max_x = std::max(max_x, p.x);
      max_y = std::max(max_y, p.y);
    }
  };
  stretch(r.tightness.outer_proven.vertices);
  stretch(r.tightness.outer_with_conjectured.vertices);
  stretch(r.tightness.inner.vertices);
  const double xmax = max_x.to_double() * 1.15;
  const double ymax = max_y.to_double() * 1.15;
  auto px = [&](double x) { return ML + x / xmax * (W - ML - MR); };
  auto py = [&](double y) { return H - MB - y / ymax * (H - MT - MB); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";

  // inner hull, blue fill and dots
  os << "<polygon points=\"";
  for (const auto& v : r.tightness.inner.vertices)
    os << px(v.x.to_double()) << "," << py(v.y.to_double()) << " ";
  os << "\" fill=\"#2b83ba\" fill-opacity=\"0.18\" stroke=\"#2b83ba\" stroke-width=\"1\"/>\n";

  // bounds: green proven, red conjectured, clipped to the plot box
  for (const auto& h : r.bounds) {
    const double a = h.a.to_double(), b = h.b.to_double(), c = h.c.to_double();
    std::vector<std::pair<double, double>> ends;
    auto push = [&](double x, double y) {
      if (x >= -1e-9 && x <= xmax + 1e-9 && y >= -1e-9 && y <= ymax + 1e-9)
        ends.push_back({x, y});
    };
    if (b != 0) {
      push(0, c / b);
      push(xmax, (c - a * xmax) / b);
    }
    if (a != 0) {
      push(c / a, 0);
      push((c - b * ymax) / a, ymax);
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end(),
                           [](auto& p, auto& q) {
                             return std::abs(p.first - q.first) < 1e-9 &&
                                    std::abs(p.second - q.second) < 1e-9;
                           }),
               ends.end());
    if (ends.size() < 2) continue;
    const char* color = h.status == BoundStatus::proven ? "#1a9641" : "#d7191c";
    const char* dash = h.status == BoundStatus::proven ? "" : " stroke-dasharray=\"6,4\"";
    os << "<line x1=\"" << px(ends.front().first) << "\" y1=\"" << py(ends.front().second)
       << "\" x2=\"" << px(ends.back().first) << "\" y2=\"" << py(ends.back().second)
       << "\" stroke=\"" << color << "\" stroke-width=\"2\"" << dash << "/>\n";
  }

  // axes with integer ticks
  os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(xmax)
     << "\" y2=\"" << py(0) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\""
     << py(ymax) << "\" stroke=\"black\"/>\n";
  for (int t = 1; t <= static_cast<int>(xmax); ++t) {
    os << "<line x1=\"" << px(t) << "\" y1=\"" << py(0) - 4 << "\" x2=\"" << px(t)
       << "\" y2=\"" << py(0) + 4 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << px(t) << "\" y=\"" << py(0) + 18
       << "\" font-size=\"11\" text-anchor=\"middle\">" << t << "</text>\n";
  }
  for (int t = 1; t <= static_cast<int>(ymax); ++t) {
    os << "<line x1=\"" << px(0) - 4 << "\" y1=\"" << py(t) << "\" x2=\"" << px(0) + 4
       << "\" y2=\"" << py(t) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << px(0) - 10 << "\" y=\"" << py(t) + 4
       << "\" font-size=\"11\" text-anchor=\"end\">" << t << "</text>\n";
  }

  // corner dots on top
  for (const auto& c : r.corners) {
    os << "<circle cx=\"" << px(c.point.x.to_double()) << "\" cy=\""
       << py(c.point.y.to_double()) << "\" r=\"4\" fill=\"#2b83ba\"/>\n";
    os << "<text x=\"" << px(c.point.x.to_double()) + 7 << "\" y=\""
       << py(c.point.y.to_double()) - 6 << "\" font-size=\"11\">(" << c.point.x.str()
       << ", " << c.point.y.str() << ")</text>\n";
  }

  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 16
     << "\" font-size=\"13\" text-anchor=\"middle\">" << axis_x_name(r.setup)
     << " / n</text>\n";
  os << "<text x=\"18\" y=\"" << H / 2
     << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << H / 2
     << ")\">" << axis_y_name(r.setup) << " / n</text>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"24\" font-size=\"14\" text-anchor=\"middle\">"
     << setup_name(r.setup) << "  M=" << r.M << " L=" << r.L << " alpha=" << r.alpha.str()
     << "  [" << tightness_name(r.tightness.verdict) << "]</text>\n";
  os << "</svg>\n";
  return os.str();
}

SweepRow compute_sweep_row(Setup setup, unsigned M, unsigned L, const Rational& alpha,
                           std::uint64_t seed) {
  SweepRow row;
  row.setup = setup;
  row.M = M;
  row.L = L;
  row.alpha = alpha;
  row.n = static_cast<unsigned>(alpha.den());
  row.k = static_cast<unsigned>(alpha.num());
  row.regime = classify_regime(M, L, alpha).str();

  TightnessReport t = tightness_report(setup, M, L, row.n, row.k);
  row.verdict = tightness_name(t.verdict);
  row.sound = true;
  for (const auto& v : t.inner.vertices) {
    if (!contains(t.outer_proven, v)) {
      row.sound = false;
      row.offending_vertex = "(" + v.x.str() + "," + v.y.str() + ")";
      break;
    }
  }
  row.gap_area_proven = region_area(t.outer_proven) - region_area(t.inner);
  row.gap_area_conjectured = region_area(t.outer_with_conjectured) - region_area(t.inner);

  const ChannelParams p = ChannelParams::make(row.n, row.k, M, L, 8);
  auto corners = inner_corners(setup, M, L, row.n, row.k);
  row.corners = static_cast<unsigned>(corners.size());
  row.schemes_total = row.corners;
  for (const auto& c : corners) {
    try {
      LinearScheme s = build_corner_scheme(p, setup, c, seed);
      Rational x = setup == Setup::r0rl ? s.rate_per_n(MsgClass::wl)
                                        : s.rate_per_n(MsgClass::wm);
      Rational y = setup == Setup::r0rl ? s.rate_per_n(MsgClass::w0)
                                        : s.rate_per_n(MsgClass::wl);
      if (x == c.point.x && y == c.point.y) ++row.schemes_pass;
      else row.scheme_errors += std::string(corner_name(c.id)) + "(rate)";
    } catch (const std::exception&) {
      if (!row.scheme_errors.empty()) row.scheme_errors += ";";
      row.scheme_errors += corner_name(c.id);
    }
  }

  if (M % 2 == 0) {
    try {
      LinearScheme s = split_scheme(p, MsgClass::wl);
      row.split_rl_per_n = s.rate_per_n(MsgClass::wl).str();
    } catch (const std::exception&) {
      row.split_rl_per_n = "";
    }
  }
  Rational erasure = alpha <= Rational(1)
                         ? Rational(M) - Rational(L) * alpha
                         : Rational(M) - Rational(L) * (Rational(2) - alpha);
  row.erasure_rl_per_n = erasure.str();
  return row;
}

std::string sweep_csv_header() {
  return "setup,M,L,alpha,n,k,regime,verdict,sound,offending_vertex,gap_area_proven,"
         "gap_area_conjectured,corners,schemes_pass,schemes_total,scheme_errors,"
         "split_rl_per_n,erasure_rl_per_n\n";
}

std::string sweep_row_to_csv(const SweepRow& r) {
  std::ostringstream os;
  os << setup_name(r.setup) << "," << r.M << "," << r.L << "," << r.alpha << "," << r.n
     << "," << r.k << "," << r.regime << "," << r.verdict << "," << (r.sound ? 1 : 0)
     << "," << r.offending_vertex << "," << r.gap_area_proven << ","
     << r.gap_area_conjectured << "," << r.corners << "," << r.schemes_pass << ","
     << r.schemes_total << "," << r.scheme_errors << "," << r.split_rl_per_n << ","
     << r.erasure_rl_per_n << "\n";
  return os.str();
}

}  // namespace bic::tool
