#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bic/region.hpp"

#include <algorithm>

using namespace bic;

namespace {

RatePoint pt(const Rational& x, const Rational& y) { return RatePoint{x, y}; }

bool has_corner(const std::vector<Corner>& cs, const Rational& x, const Rational& y) {
  return std::any_of(cs.begin(), cs.end(),
                     [&](const Corner& c) { return c.point == pt(x, y); });
}

const HalfPlane* find_bound(const std::vector<HalfPlane>& hs, const std::string& label) {
  for (const auto& h : hs)
    if (h.label == label) return &h;
  return nullptr;
}

}  // namespace

TEST_CASE("regime classification") {
  auto r = classify_regime(2, 1, Rational(1));
  CHECK(r.l_side == RegimeId::LSide::boundary);
  REQUIRE(r.alpha_bands.size() == 2);  // breakpoint belongs to both bands
  CHECK(r.alpha_bands[0].first == Rational(2, 3));
  CHECK(r.alpha_bands[1].second == Rational(2));

  auto low = classify_regime(4, 1, Rational(1, 4));
  CHECK(low.l_side == RegimeId::LSide::low);
  REQUIRE(low.alpha_bands.size() == 1);
  CHECK(low.alpha_bands[0].second == Rational(1, 2));

  auto high = classify_regime(4, 3, Rational(3, 5));
  CHECK(high.l_side == RegimeId::LSide::high);
  REQUIRE(high.alpha_bands.size() == 1);
  CHECK(high.alpha_bands[0].first == Rational(1, 2));

  CHECK_THROWS_AS(classify_regime(4, 1, Rational(5, 2)), std::invalid_argument);
}

TEST_CASE("inner corners: binary toy instance") {
  auto cs = inner_corners(Setup::r0rl, 2, 1, 1, 1);
  REQUIRE(cs.size() == 2);
  CHECK(has_corner(cs, Rational(0), Rational(2)));
  CHECK(has_corner(cs, Rational(1), Rational(0)));
}

TEST_CASE("inner corners: weak interference with three corners") {
  auto cs = inner_corners(Setup::r0rl, 3, 1, 3, 1);  // alpha = 1/3
  REQUIRE(cs.size() == 3);
  CHECK(has_corner(cs, Rational(0), Rational(3)));
  CHECK(has_corner(cs, Rational(2), Rational(1)));
  CHECK(has_corner(cs, Rational(8, 3), Rational(0)));
}

TEST_CASE("inner corners: rlrm coincidence at alpha = 1/2") {
  auto cs = inner_corners(Setup::rlrm, 4, 1, 2, 1);
  REQUIRE(cs.size() == 2);  // alignment corners coincide with the split corners
  CHECK(has_corner(cs, Rational(2), Rational(3, 2)));
  CHECK(has_corner(cs, Rational(0), Rational(7, 2)));
}

TEST_CASE("outer halfplanes: toy instance") {
  auto hs = outer_halfplanes(Setup::r0rl, 2, 1, 1, 1, true);
  const auto* weighted = find_bound(hs, "weighted-sum");
  REQUIRE(weighted != nullptr);
  CHECK(weighted->a == Rational(2));
  CHECK(weighted->b == Rational(1));
  CHECK(weighted->c == Rational(2));
  CHECK(weighted->status == BoundStatus::proven);
  const auto* sum = find_bound(hs, "sum");
  REQUIRE(sum != nullptr);
  CHECK(sum->c == Rational(2));
}

TEST_CASE("outer halfplanes: weighted sum evaluates by hand at alpha = 1/2") {
  auto hs = outer_halfplanes(Setup::r0rl, 4, 1, 2, 1, false);
  const auto* weighted = find_bound(hs, "weighted-sum");
  REQUIRE(weighted != nullptr);
  // 4 R_L + 3 R_0 <= 4 (2 + 3/2) = 14 per n
  CHECK(weighted->a == Rational(4));
  CHECK(weighted->b == Rational(3));
  CHECK(weighted->c == Rational(14));
}

TEST_CASE("outer halfplanes: interference-limited peak in the rlrm setup") {
  auto hs = outer_halfplanes(Setup::rlrm, 2, 2, 2, 1, false);
  const auto* peak = find_bound(hs, "peak");
  REQUIRE(peak != nullptr);
  CHECK(peak->a == Rational(1));
  CHECK(peak->b == Rational(0));
  CHECK(peak->c == Rational(1));  // M max(1-alpha, alpha) at alpha = 1/2
}

TEST_CASE("conjectured planes appear only on request, with status") {
  auto without = outer_halfplanes(Setup::rlrm, 4, 3, 1, 1, false);
  for (const auto& h : without) CHECK(h.status == BoundStatus::proven);
  auto with = outer_halfplanes(Setup::rlrm, 4, 3, 1, 1, true);
  CHECK(with.size() == without.size() + 1);
  const auto* conj = find_bound(with, "half-sum");
  REQUIRE(conj != nullptr);
  CHECK(conj->status == BoundStatus::conjectured);
  CHECK(conj->c == Rational(2));  // (M/2)(2 - alpha) at alpha = 1
}

TEST_CASE("hull adds the origin and axis projections") {
  auto region = hull({pt(1, 0), pt(0, 2)});
  REQUIRE(region.vertices.size() == 3);
  CHECK(region.vertices[0] == pt(0, 0));
  CHECK(region.vertices[1] == pt(1, 0));
  CHECK(region.vertices[2] == pt(0, 2));

  auto deeper = hull({pt(2, 1)});  // single interior-style point
  CHECK(deeper.vertices.size() == 4);  // (0,0), (2,0), (2,1), (0,1)
}

TEST_CASE("intersection of the toy bounds gives the toy triangle") {
  std::vector<HalfPlane> planes = {
      {Rational(2), Rational(1), Rational(2), BoundStatus::proven, "a"},
      {Rational(1), Rational(1), Rational(2), BoundStatus::proven, "b"},
  };
  auto region = intersect(planes);
  auto tri = hull({pt(1, 0), pt(0, 2)});
  CHECK(region_equal(region, tri));
}

TEST_CASE("toy region is tight with matching hull and intersection") {
  auto rep = tightness_report(Setup::r0rl, 2, 1, 1, 1);
  CHECK(rep.verdict == Tightness::tight_proven);
  CHECK(region_equal(rep.inner, rep.outer_proven));
  CHECK(rep.gap_vertices.empty());
}

TEST_CASE("low-L r0rl cells are always tight") {
  struct Cell { unsigned M, L, n, k; };
  for (auto c : {Cell{4, 1, 2, 1}, Cell{4, 2, 4, 3}, Cell{5, 2, 5, 3}, Cell{4, 1, 1, 2},
                 Cell{5, 1, 3, 2}, Cell{4, 2, 2, 3}}) {
    auto rep = tightness_report(Setup::r0rl, c.M, c.L, c.n, c.k);
    CHECK(rep.verdict == Tightness::tight_proven);
  }
}

TEST_CASE("conjecture-dependent cells report tight_if_conjecture with the axis vertex") {
  auto rep = tightness_report(Setup::r0rl, 4, 3, 1, 1);
  CHECK(rep.verdict == Tightness::tight_if_conjecture);
  CHECK(contains(rep.inner, pt(2, 0)));
  CHECK_FALSE(rep.gap_vertices.empty());

  auto rep2 = tightness_report(Setup::rlrm, 4, 3, 1, 1);
  CHECK(rep2.verdict == Tightness::tight_if_conjecture);
  CHECK(contains(rep2.inner, pt(2, 0)));
  CHECK(contains(rep2.inner, pt(0, 2)));
}

TEST_CASE("dominance: certified regimes") {
  // high-L weak interference: the doubled bound is implied
  auto d1 = dominance_check(Setup::r0rl, 4, 3, Rational(1, 2));
  CHECK(d1.redundant);
  CHECK(d1.in_certified_range);
  // out of range at alpha = 1 the same plane is active
  auto d2 = dominance_check(Setup::r0rl, 4, 3, Rational(1));
  CHECK_FALSE(d2.redundant);
  CHECK_FALSE(d2.in_certified_range);
  // boundary L = M/2 at alpha = 3/5: equality case
  auto d3 = dominance_check(Setup::rlrm, 4, 2, Rational(3, 5));
  CHECK(d3.redundant);
  CHECK(d3.in_certified_range);
}

TEST_CASE("dominance holds across the certified grids at step 1/24") {
  for (unsigned M = 2; M <= 5; ++M) {
    for (unsigned L = 1; L <= M; ++L) {
      const bool high = 2 * L >= M, low = 2 * L <= M;
      for (int j = 0; j <= 48; ++j) {
        Rational alpha(j, 24);
        if (high && alpha <= Rational(1, 2))
          CHECK(dominance_check(Setup::r0rl, M, L, alpha).redundant);
        if (low && alpha <= Rational(1, 2))
          CHECK(dominance_check(Setup::rlrm, M, L, alpha).redundant);
        if (high && alpha <= Rational(2, 3))
          CHECK(dominance_check(Setup::rlrm, M, L, alpha).redundant);
      }
    }
  }
}

TEST_CASE("conjecture gap vertices and margins") {
  auto gap = conjecture_gap(Setup::rlrm, 4, 3, 1, 1);
  REQUIRE(gap.size() == 2);
  for (const auto& e : gap) CHECK(e.margin == Rational(1));

  CHECK(conjecture_gap(Setup::r0rl, 2, 1, 4, 1).empty());  // certified-redundancy regime

  auto g3 = conjecture_gap(Setup::r0rl, 4, 4, 1, 1);
  REQUIRE_FALSE(g3.empty());
  // proven planes allow R_L = 4 while the conjecture caps 2 R_L at 4
  CHECK(g3[0].vertex == pt(4, 0));
  CHECK(g3[0].margin == Rational(4));
}

TEST_CASE("soundness: inner hull inside the proven outer region, exact") {
  const Rational alphas[] = {Rational(0),    Rational(1, 4), Rational(1, 2),
                             Rational(3, 5), Rational(2, 3), Rational(3, 4),
                             Rational(1),    Rational(3, 2), Rational(2)};
  for (unsigned M = 2; M <= 5; ++M)
    for (unsigned L = 1; L <= M; ++L)
      for (const Rational& a : alphas)
        for (Setup s : {Setup::r0rl, Setup::rlrm}) {
          unsigned n = static_cast<unsigned>(a.den());
          unsigned k = static_cast<unsigned>(a.num());
          auto rep = tightness_report(s, M, L, n, k);
          CHECK(region_subset(rep.inner, rep.outer_proven));
        }
}

TEST_CASE("alpha = 0: one sum constraint, region is the simplex") {
  for (Setup s : {Setup::r0rl, Setup::rlrm}) {
    for (unsigned M = 2; M <= 4; ++M) {
      auto rep = tightness_report(s, M, 1, 1, 0);
      CHECK(rep.verdict == Tightness::tight_proven);
      CHECK(contains(rep.inner, pt(Rational(M), Rational(0))));
      CHECK(contains(rep.inner, pt(Rational(0), Rational(M))));
    }
  }
}

TEST_CASE("regions are scale equivariant in (n, k)") {
  for (unsigned c = 2; c <= 4; ++c) {
    auto a = tightness_report(Setup::rlrm, 4, 3, 5, 3);
    auto b = tightness_report(Setup::rlrm, 4, 3, 5 * c, 3 * c);
    CHECK(region_equal(a.inner, b.inner));
    CHECK(region_equal(a.outer_proven, b.outer_proven));
    CHECK(a.verdict == b.verdict);
  }
}

TEST_CASE("boundary L = M/2 evaluates both families consistently") {
  // would throw std::logic_error if the two bound families disagreed
  for (unsigned M : {2u, 4u}) {
    for (const Rational& a :
         {Rational(1, 4), Rational(3, 5), Rational(3, 4), Rational(3, 2)}) {
      unsigned n = static_cast<unsigned>(a.den()), k = static_cast<unsigned>(a.num());
      CHECK_NOTHROW(outer_halfplanes(Setup::r0rl, M, M / 2, n, k, true));
      CHECK_NOTHROW(outer_halfplanes(Setup::rlrm, M, M / 2, n, k, true));
      // and the conjectured plane is implied exactly at the boundary
      CHECK(dominance_check(Setup::r0rl, M, M / 2, a).redundant);
      CHECK(dominance_check(Setup::rlrm, M, M / 2, a).redundant);
    }
  }
}

TEST_CASE("region area is exact") {
  auto tri = hull({pt(1, 0), pt(0, 2)});
  CHECK(region_area(tri) == Rational(1));
  auto rep = tightness_report(Setup::rlrm, 4, 3, 1, 1);
  CHECK(region_area(rep.outer_proven) - region_area(rep.inner) == Rational(5, 2));
}
