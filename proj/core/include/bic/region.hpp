#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bic/rational.hpp"
#include "bic/scheme.hpp"

namespace bic {

/// The two 2D rate setups. In r0rl the point is (R_L, R_0); in rlrm it is
/// (R_M, R_L). All region coordinates are normalized by n.
enum class Setup { r0rl, rlrm };

const char* setup_name(Setup s);
std::optional<Setup> setup_from_name(const std::string& name);

struct RatePoint {
  Rational x, y;
  friend bool operator==(const RatePoint&, const RatePoint&) = default;
};

enum class BoundStatus { proven, conjectured };

/// Half-plane a*x + b*y <= c in per-n rate space.
struct HalfPlane {
  Rational a, b, c;
  BoundStatus status = BoundStatus::proven;
  std::string label;

  bool satisfied(const RatePoint& p) const { return a * p.x + b * p.y <= c; }
  Rational excess(const RatePoint& p) const { return a * p.x + b * p.y - c; }
};

/// Convex polygon, counterclockwise, downward closed toward the origin
/// (every region here contains (0,0) and its axis projections).
struct RateRegion2D {
  std::vector<RatePoint> vertices;
};

/// Achievable corner families. The same family may realize either an
/// (x-axis) or (y-axis) point in the rlrm setup depending on which message
/// class carries the payload.
enum class CornerId {
  // (R_0, R_L) setup
  r0rl_top,
  r0rl_private_split,
  r0rl_erasure_all,
  r0rl_alignment,
  r0rl_alignment_erasure,
  r0rl_han_kobayashi,
  r0rl_strong_align,
  r0rl_strong_align_erasure,
  r0rl_strong_orthogonal,
  // (R_L, R_M) setup
  rlrm_m_split,
  rlrm_erasure_all,
  rlrm_alignment,
  rlrm_alignment_erasure,
  rlrm_han_kobayashi,
  rlrm_strong_align,
  rlrm_strong_align_erasure,
  rlrm_strong_orthogonal,
};

const char* corner_name(CornerId id);

struct Corner {
  CornerId id;
  /// Which message class carries the scheme's single-axis payload for the
  /// han-kobayashi / strong-orthogonal families in the rlrm setup (wm for
  /// the x-axis point, wl for the y-axis point); ignored elsewhere.
  MsgClass payload = MsgClass::wl;
  RatePoint point;  // per-n
};

/// L side relative to M/2 plus the alpha band(s) the instance belongs to;
/// breakpoint values of alpha are members of both adjacent bands.
struct RegimeId {
  enum class LSide { low, high, boundary } l_side;
  std::vector<std::pair<Rational, Rational>> alpha_bands;
  std::string str() const;
};

RegimeId classify_regime(unsigned M, unsigned L, const Rational& alpha);

/// The deduplicated, Pareto-maximal corner list for the regime, per-n.
std::vector<Corner> inner_corners(Setup setup, unsigned M, unsigned L, unsigned n,
                                  unsigned k);

/// All outer bounds for the regime, per-n, with proven/conjectured status.
/// Conjectured planes are present only when `include_conjectured` is set.
/// At L = M/2 both L-side families are evaluated and must agree.
std::vector<HalfPlane> outer_halfplanes(Setup setup, unsigned M, unsigned L, unsigned n,
                                        unsigned k, bool include_conjectured);

/// Time-sharing closure of a point set with the origin and the axis
/// projections of the extreme points.
RateRegion2D hull(const std::vector<RatePoint>& points);

/// Bounded intersection of half-planes with x >= 0, y >= 0. Returns the
/// degenerate origin region when infeasible.
RateRegion2D intersect(const std::vector<HalfPlane>& planes);

bool region_equal(const RateRegion2D& a, const RateRegion2D& b);
bool contains(const RateRegion2D& region, const RatePoint& p);
/// True iff every vertex of `inner` lies in `outer`.
bool region_subset(const RateRegion2D& inner, const RateRegion2D& outer);
Rational region_area(const RateRegion2D& region);

enum class Tightness { tight_proven, tight_if_conjecture, gap };
const char* tightness_name(Tightness t);

struct TightnessReport {
  Tightness verdict;
  /// Vertices of the proven-outer region outside the inner hull (empty when
  /// tight_proven).
  std::vector<RatePoint> gap_vertices;
  RateRegion2D inner;
  RateRegion2D outer_proven;
  RateRegion2D outer_with_conjectured;
};

TightnessReport tightness_report(Setup setup, unsigned M, unsigned L, unsigned n,
                                 unsigned k);

struct DominanceResult {
  bool redundant;           // conjectured plane redundant given proven planes
  bool in_certified_range;  // inside the (L, alpha) range where redundancy is guaranteed
};

/// Whether the regime's conjectured plane is redundant with respect to the
/// proven planes over the nonnegative quadrant. Outside the certified range
/// the literal redundancy answer is still returned, flagged accordingly.
DominanceResult dominance_check(Setup setup, unsigned M, unsigned L,
                                const Rational& alpha);

struct GapEntry {
  RatePoint vertex;
  HalfPlane plane;
  Rational margin;  // positive amount by which the vertex violates the plane
};

/// Vertices of the proven-outer region that violate a conjectured plane.
std::vector<GapEntry> conjecture_gap(Setup setup, unsigned M, unsigned L, unsigned n,
                                     unsigned k);

}  // namespace bic
