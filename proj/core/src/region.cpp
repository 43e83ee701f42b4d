#include "bic/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace bic {

const char* setup_name(Setup s) { return s == Setup::r0rl ? "r0rl" : "rlrm"; }

std::optional<Setup> setup_from_name(const std::string& name) {
  if (name == "r0rl") return Setup::r0rl;
  if (name == "rlrm") return Setup::rlrm;
  return std::nullopt;
}

const char* corner_name(CornerId id) {
  switch (id) {
    case CornerId::r0rl_top: return "top";
    case CornerId::r0rl_private_split: return "private-split";
    case CornerId::r0rl_erasure_all: return "erasure-all";
    case CornerId::r0rl_alignment: return "alignment";
    case CornerId::r0rl_alignment_erasure: return "alignment-erasure";
    case CornerId::r0rl_han_kobayashi: return "han-kobayashi";
    case CornerId::r0rl_strong_align: return "strong-align";
    case CornerId::r0rl_strong_align_erasure: return "strong-align-erasure";
    case CornerId::r0rl_strong_orthogonal: return "strong-orthogonal";
    case CornerId::rlrm_m_split: return "m-split";
    case CornerId::rlrm_erasure_all: return "erasure-all";
    case CornerId::rlrm_alignment: return "alignment";
    case CornerId::rlrm_alignment_erasure: return "alignment-erasure";
    case CornerId::rlrm_han_kobayashi: return "han-kobayashi";
    case CornerId::rlrm_strong_align: return "strong-align";
    case CornerId::rlrm_strong_align_erasure: return "strong-align-erasure";
    case CornerId::rlrm_strong_orthogonal: return "strong-orthogonal";
  }
  return "?";
}

const char* tightness_name(Tightness t) {
  switch (t) {
    case Tightness::tight_proven: return "tight_proven";
    case Tightness::tight_if_conjecture: return "tight_if_conjecture";
    case Tightness::gap: return "gap";
  }
  return "?";
}

namespace {

const Rational kZero(0), kOne(1), kTwo(2);
const Rational kHalf(1, 2), kTwoThirds(2, 3);

// max(1, a) + max(1 - a, 0): the per-carrier clean-plus-cross level count.
Rational direct_cross_levels(const Rational& a) {
  return a <= kOne ? kTwo - a : a;
}

// max(1 - a, a): the per-carrier interference-limited level count.
Rational interference_limited_levels(const Rational& a) {
  return a <= kHalf ? kOne - a : a;
}

void check_alpha(const Rational& alpha) {
  if (alpha < kZero || alpha > kTwo)
    throw std::invalid_argument("alpha must lie in [0, 2]");
}

struct Candidate {
  CornerId id;
  MsgClass payload;
  Rational lo, hi;  // valid alpha range
  RatePoint (*point)(unsigned M, unsigned L, const Rational& a);
};

RatePoint pt(Rational x, Rational y) { return RatePoint{std::move(x), std::move(y)}; }

const Candidate kR0rlCandidates[] = {
    {CornerId::r0rl_top, MsgClass::w0, kZero, kTwo,
     [](unsigned M, unsigned, const Rational&) { return pt(0, Rational(M)); }},
    {CornerId::r0rl_private_split, MsgClass::wl, kZero, kOne,
     [](unsigned M, unsigned, const Rational& a) {
       return pt(Rational(M) * (kOne - a), Rational(M) * a);
     }},
    {CornerId::r0rl_erasure_all, MsgClass::wl, kZero, kOne,
     [](unsigned M, unsigned L, const Rational& a) {
       return pt(Rational(M) - Rational(L) * a, 0);
     }},
    {CornerId::r0rl_alignment, MsgClass::wl, kHalf, kTwoThirds,
     [](unsigned M, unsigned, const Rational& a) {
       return pt(Rational(M) * a, Rational(M) * (kTwo - Rational(3) * a));
     }},
    {CornerId::r0rl_alignment_erasure, MsgClass::wl, kHalf, kTwoThirds,
     [](unsigned M, unsigned L, const Rational& a) {
       return pt(Rational(M) * a + Rational(M - L) * (kTwo - Rational(3) * a), 0);
     }},
    {CornerId::r0rl_han_kobayashi, MsgClass::wl, kTwoThirds, kOne,
     [](unsigned M, unsigned, const Rational& a) {
       return pt(Rational(M) * (kOne - a / kTwo), 0);
     }},
    {CornerId::r0rl_strong_align, MsgClass::wl, kOne, kTwo,
     [](unsigned M, unsigned, const Rational& a) {
       return pt(Rational(M) * (a - kOne), Rational(M) * (kTwo - a));
     }},
    {CornerId::r0rl_strong_align_erasure, MsgClass::wl, kOne, kTwo,
     [](unsigned M, unsigned L, const Rational& a) {
       return pt(Rational(M) - Rational(L) * (kTwo - a), 0);
     }},
    {CornerId::r0rl_strong_orthogonal, MsgClass::wl, kOne, kTwo,
     [](unsigned M, unsigned, const Rational& a) {
       return pt(Rational(M) * a / kTwo, 0);
     }},
};

const Candidate kRlrmCandidates[] = {
    {CornerId::rlrm_m_split, MsgClass::wm, kZero, kOne,
     [](unsigned M, unsigned L, const Rational& a) {
       return pt(Rational(M) * (kOne - a), Rational(M - L) * a);
     }},
    {CornerId::rlrm_erasure_all, MsgClass::wl, kZero, kOne,
     [](unsigned M, unsigned L, const Rational& a) {
       return pt(0, Rational(M) - Rational(L) * a);
     }},
    {CornerId::rlrm_alignment, MsgClass::wm, kHalf, kTwoThirds,
     [](unsigned M, unsigned L, const Rational& a) {
       return pt(Rational(M) * a, Rational(M - L) * (kTwo - Rational(3) * a));
     }},
    {CornerId::rlrm_alignment_erasure, MsgClass::wl, kHalf, kTwoThirds,
     [](unsigned M, unsigned L, const Rational& a) {
       return pt(0, Rational(M) * a + Rational(M - L) * (kTwo - Rational(3) * a));
     }},
    {CornerId::rlrm_han_kobayashi, MsgClass::wm, kTwoThirds, kOne,
     [](unsigned M, unsigned, const Rational& a) {
       return pt(Rational(M) * (kOne - a / kTwo), 0);
     }},
    {CornerId::rlrm_han_kobayashi, MsgClass::wl, kTwoThirds, kOne,
     [](unsigned M, unsigned, const Rational& a) {
       return pt(0, Rational(M) * (kOne - a / kTwo));
     }},
    {CornerId::rlrm_strong_align, MsgClass::wm, kOne, kTwo,
     [](unsigned M, unsigned L, const Rational& a) {
       return pt(Rational(M) * (a - kOne), Rational(M - L) * (kTwo - a));
     }},
    {CornerId::rlrm_strong_align_erasure, MsgClass::wl, kOne, kTwo,
     [](unsigned M, unsigned L, const Rational& a) {
       return pt(0, Rational(M) - Rational(L) * (kTwo - a));
     }},
    {CornerId::rlrm_strong_orthogonal, MsgClass::wm, kOne, kTwo,
     [](unsigned M, unsigned, const Rational& a) {
       return pt(Rational(M) * a / kTwo, 0);
     }},
    {CornerId::rlrm_strong_orthogonal, MsgClass::wl, kOne, kTwo,
     [](unsigned M, unsigned, const Rational& a) {
       return pt(0, Rational(M) * a / kTwo);
     }},
};

std::vector<Corner> corners_for_alpha(Setup setup, unsigned M, unsigned L,
                                      const Rational& alpha) {
  check_alpha(alpha);
  if (L < 1 || L > M) throw std::invalid_argument("need 1 <= L <= M");
  std::vector<Corner> cands;
  auto consider = [&](const Candidate& c) {
    if (alpha < c.lo || alpha > c.hi) return;
    RatePoint p = c.point(M, L, alpha);
    if (p.x.sign() < 0 || p.y.sign() < 0) return;
    for (const auto& seen : cands)
      if (seen.point == p) return;  // keep the first family realizing a point
    cands.push_back(Corner{c.id, c.payload, p});
  };
  if (setup == Setup::r0rl)
    for (const auto& c : kR0rlCandidates) consider(c);
  else
    for (const auto& c : kRlrmCandidates) consider(c);

  // Pareto-maximal points only: a corner strictly inside another's shadow is
  // not a corner of the region.
  std::vector<Corner> out;
  for (const auto& c : cands) {
    bool dominated = false;
    for (const auto& d : cands) {
      if (d.point == c.point) continue;
      if (d.point.x >= c.point.x && d.point.y >= c.point.y) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const Corner& a, const Corner& b) {
    if (a.point.x != b.point.x) return a.point.x < b.point.x;
    return b.point.y < a.point.y;
  });
  return out;
}

HalfPlane plane(Rational a, Rational b, Rational c, BoundStatus st, std::string label) {
  return HalfPlane{std::move(a), std::move(b), std::move(c), st, std::move(label)};
}

// Scale so the leading nonzero coefficient is 1; used to spot coincident
// planes coming from the two L-side families.
HalfPlane normalized(const HalfPlane& h) {
  Rational s = h.a != kZero ? h.a : h.b;
  return HalfPlane{h.a / s, h.b / s, h.c / s, h.status, h.label};
}

bool same_plane(const HalfPlane& x, const HalfPlane& y) {
  HalfPlane a = normalized(x), b = normalized(y);
  return a.a == b.a && a.b == b.b && a.c == b.c;
}

std::vector<HalfPlane> halfplanes_side(Setup setup, unsigned M, unsigned L,
                                       const Rational& alpha, bool high_side) {
  const Rational phi = direct_cross_levels(alpha);
  const Rational psi = interference_limited_levels(alpha);
  const Rational rM(M), rL(L), rMmL(M - L);
  std::vector<HalfPlane> out;
  if (setup == Setup::r0rl) {
    if (!high_side) {
      out.push_back(plane(rM, rMmL, rM * (Rational(M - 2 * L) + rL * phi),
                          BoundStatus::proven, "weighted-sum"));
      out.push_back(plane(1, 1, rM, BoundStatus::proven, "sum"));
    } else {
      out.push_back(plane(rM, rMmL,
                          rM * (rMmL * phi + Rational(2 * L - M) * psi),
                          BoundStatus::proven, "weighted-sum"));
      out.push_back(plane(1, 1, rM, BoundStatus::proven, "sum"));
      out.push_back(plane(2, 1, rM * phi, BoundStatus::conjectured, "double-payload-sum"));
    }
  } else {
    if (!high_side) {
      out.push_back(plane(1, 1, Rational(M - 2 * L) + rL * phi, BoundStatus::proven, "sum"));
      out.push_back(plane(1, 0, rM * psi, BoundStatus::proven, "peak"));
      out.push_back(plane(kTwo * rMmL, rM, rM * rMmL * phi, BoundStatus::conjectured,
                          "weighted-sum"));
    } else {
      out.push_back(plane(1, 1, rMmL * phi + Rational(2 * L - M) * psi,
                          BoundStatus::proven, "sum"));
      out.push_back(plane(1, 0, rM * psi, BoundStatus::proven, "peak"));
      out.push_back(plane(1, 1, rM / kTwo * phi, BoundStatus::conjectured, "half-sum"));
    }
  }
  return out;
}

std::vector<HalfPlane> halfplanes_for_alpha(Setup setup, unsigned M, unsigned L,
                                            const Rational& alpha,
                                            bool include_conjectured) {
  check_alpha(alpha);
  if (L < 1 || L > M) throw std::invalid_argument("need 1 <= L <= M");
  std::vector<HalfPlane> planes;
  if (2 * L < M) {
    planes = halfplanes_side(setup, M, L, alpha, false);
  } else if (2 * L > M) {
    planes = halfplanes_side(setup, M, L, alpha, true);
  } else {
    // Both families apply at L = M/2 and their proven planes must coincide.
    auto low = halfplanes_side(setup, M, L, alpha, false);
    auto high = halfplanes_side(setup, M, L, alpha, true);
    for (const auto& h : low) {
      if (h.status != BoundStatus::proven) continue;
      bool matched = false;
      for (const auto& g : high)
        if (g.status == BoundStatus::proven && g.label == h.label)
          matched = matched || same_plane(g, h);
      if (!matched)
        throw std::logic_error("L = M/2 bound families disagree on " + h.label);
    }
    planes = high;
    for (const auto& h : low) {
      bool dup = false;
      for (const auto& g : planes) dup = dup || same_plane(g, h);
      if (!dup) planes.push_back(h);
    }
  }
  if (!include_conjectured) {
    std::erase_if(planes,
                  [](const HalfPlane& h) { return h.status == BoundStatus::conjectured; });
  }
  return planes;
}

Rational cross(const RatePoint& o, const RatePoint& a, const RatePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<RatePoint> convex_hull(std::vector<RatePoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const RatePoint& a, const RatePoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<RatePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {  // lower hull
    while (k >= 2 && cross(h[k - 2], h[k - 1], p).sign() <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {  // upper hull
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);  // last point equals the first
  return h;
}

// Rotate so the lexicographically smallest vertex comes first; hull output
// is already counterclockwise.
std::vector<RatePoint> canonical(std::vector<RatePoint> v) {
  if (v.empty()) return v;
  auto it = std::min_element(v.begin(), v.end(), [](const RatePoint& a, const RatePoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  std::rotate(v.begin(), it, v.end());
  return v;
}

}  // namespace

std::string RegimeId::str() const {
  std::string s;
  switch (l_side) {
    case LSide::low: s = "L<M/2"; break;
    case LSide::high: s = "L>M/2"; break;
    case LSide::boundary: s = "L=M/2"; break;
  }
  s += " alpha:";
  for (std::size_t i = 0; i < alpha_bands.size(); ++i) {
    if (i) s += "|";
    s += "[" + alpha_bands[i].first.str() + ".." + alpha_bands[i].second.str() + "]";
  }
  return s;
}

RegimeId classify_regime(unsigned M, unsigned L, const Rational& alpha) {
  check_alpha(alpha);
  if (L < 1 || L > M) throw std::invalid_argument("need 1 <= L <= M");
  RegimeId r;
  if (2 * L < M) r.l_side = RegimeId::LSide::low;
  else if (2 * L > M) r.l_side = RegimeId::LSide::high;
  else r.l_side = RegimeId::LSide::boundary;
  const Rational breaks[] = {kZero, kHalf, kTwoThirds, kOne, kTwo};
  for (int i = 0; i + 1 < 5; ++i)
    if (breaks[i] <= alpha && alpha <= breaks[i + 1])
      r.alpha_bands.emplace_back(breaks[i], breaks[i + 1]);
  return r;
}

std::vector<Corner> inner_corners(Setup setup, unsigned M, unsigned L, unsigned n,
                                  unsigned k) {
  return corners_for_alpha(setup, M, L, Rational(k, n));
}

std::vector<HalfPlane> outer_halfplanes(Setup setup, unsigned M, unsigned L, unsigned n,
                                        unsigned k, bool include_conjectured) {
  return halfplanes_for_alpha(setup, M, L, Rational(k, n), include_conjectured);
}

RateRegion2D hull(const std::vector<RatePoint>& points) {
  std::vector<RatePoint> pts = points;
  Rational max_x(0), max_y(0);
  for (const auto& p : points) {
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  pts.push_back(RatePoint{kZero, kZero});
  pts.push_back(RatePoint{max_x, kZero});
  pts.push_back(RatePoint{kZero, max_y});
  return RateRegion2D{canonical(convex_hull(std::move(pts)))};
}

RateRegion2D intersect(const std::vector<HalfPlane>& planes) {
  std::vector<HalfPlane> all = planes;
  all.push_back(plane(-1, 0, 0, BoundStatus::proven, "x-axis"));
  all.push_back(plane(0, -1, 0, BoundStatus::proven, "y-axis"));

  std::vector<RatePoint> feasible;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Rational det = all[i].a * all[j].b - all[j].a * all[i].b;
      if (det == kZero) continue;
      RatePoint p{(all[i].c * all[j].b - all[j].c * all[i].b) / det,
                  (all[i].a * all[j].c - all[j].a * all[i].c) / det};
      bool inside = true;
      for (const auto& h : all) inside = inside && h.satisfied(p);
      if (inside) feasible.push_back(p);
    }
  }
  if (feasible.empty()) return RateRegion2D{{RatePoint{kZero, kZero}}};
  return RateRegion2D{canonical(convex_hull(std::move(feasible)))};
}

bool region_equal(const RateRegion2D& a, const RateRegion2D& b) {
  return a.vertices == b.vertices;
}

bool contains(const RateRegion2D& region, const RatePoint& p) {
  const auto& v = region.vertices;
  if (v.empty()) return false;
  if (v.size() == 1) return v[0] == p;
  if (v.size() == 2) {
    // Degenerate segment: collinear and within the bounding box.
    if (cross(v[0], v[1], p) != kZero) return false;
    return std::min(v[0].x, v[1].x) <= p.x && p.x <= std::max(v[0].x, v[1].x) &&
           std::min(v[0].y, v[1].y) <= p.y && p.y <= std::max(v[0].y, v[1].y);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RatePoint& a = v[i];
    const RatePoint& b = v[(i + 1) % v.size()];
    if (cross(a, b, p).sign() < 0) return false;
  }
  return true;
}

bool region_subset(const RateRegion2D& inner, const RateRegion2D& outer) {
  for (const auto& p : inner.vertices)
    if (!contains(outer, p)) return false;
  return true;
}

Rational region_area(const RateRegion2D& region) {
  const auto& v = region.vertices;
  if (v.size() < 3) return kZero;
  Rational twice(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RatePoint& a = v[i];
    const RatePoint& b = v[(i + 1) % v.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / kTwo;
}

TightnessReport tightness_report(Setup setup, unsigned M, unsigned L, unsigned n,
                                 unsigned k) {
  TightnessReport rep;
  std::vector<RatePoint> pts;
  for (const auto& c : inner_corners(setup, M, L, n, k)) pts.push_back(c.point);
  rep.inner = hull(pts);
  rep.outer_proven = intersect(outer_halfplanes(setup, M, L, n, k, false));
  rep.outer_with_conjectured = intersect(outer_halfplanes(setup, M, L, n, k, true));

  if (region_equal(rep.inner, rep.outer_proven)) {
    rep.verdict = Tightness::tight_proven;
  } else {
    rep.verdict = region_equal(rep.inner, rep.outer_with_conjectured)
                      ? Tightness::tight_if_conjecture
                      : Tightness::gap;
    for (const auto& v : rep.outer_proven.vertices)
      if (!contains(rep.inner, v)) rep.gap_vertices.push_back(v);
  }
  return rep;
}

DominanceResult dominance_check(Setup setup, unsigned M, unsigned L,
                                const Rational& alpha) {
  auto all = halfplanes_for_alpha(setup, M, L, alpha, true);
  std::vector<HalfPlane> proven, conjectured;
  for (const auto& h : all)
    (h.status == BoundStatus::proven ? proven : conjectured).push_back(h);

  DominanceResult res;
  res.redundant = true;
  RateRegion2D base = intersect(proven);
  for (const auto& h : conjectured)
    for (const auto& v : base.vertices) res.redundant = res.redundant && h.satisfied(v);

  const bool high = 2 * L >= M;
  const bool low = 2 * L <= M;
  if (setup == Setup::r0rl)
    res.in_certified_range = high && alpha <= kHalf;
  else
    res.in_certified_range = (low && alpha <= kHalf) || (high && alpha <= kTwoThirds);
  return res;
}

std::vector<GapEntry> conjecture_gap(Setup setup, unsigned M, unsigned L, unsigned n,
                                     unsigned k) {
  auto all = outer_halfplanes(setup, M, L, n, k, true);
  std::vector<HalfPlane> proven, conjectured;
  for (const auto& h : all)
    (h.status == BoundStatus::proven ? proven : conjectured).push_back(h);

  std::vector<GapEntry> out;
  RateRegion2D base = intersect(proven);
  for (const auto& v : base.vertices) {
    for (const auto& h : conjectured) {
      Rational ex = h.excess(v);
      if (ex.sign() > 0) out.push_back(GapEntry{v, h, ex});
    }
  }
  return out;
}

}  // namespace bic
