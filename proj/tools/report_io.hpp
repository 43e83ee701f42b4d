#pragma once

#include <string>
#include <vector>

#include "bic/region.hpp"

namespace bic::tool {

/// Everything one `region` invocation computes, per-n normalized.
struct RegionReport {
  Setup setup;
  unsigned M, L, n, k;
  Rational alpha;
  RegimeId regime;
  std::vector<Corner> corners;
  std::vector<HalfPlane> bounds;
  TightnessReport tightness;
  bool include_conjectured = false;
};

RegionReport compute_region_report(Setup setup, unsigned M, unsigned L, unsigned n,
                                   unsigned k, bool include_conjectured);

std::string region_to_json(const RegionReport& r);
std::string region_to_csv(const RegionReport& r);
std::string region_to_text(const RegionReport& r);
std::string region_to_svg(const RegionReport& r);

struct SweepRow {
  Setup setup;
  unsigned M, L, n, k;
  Rational alpha;
  std::string regime;
  std::string verdict;
  bool sound = false;              // inner subset of proven outer, exact
  std::string offending_vertex;    // set when !sound
  Rational gap_area_proven;        // area(proven outer) - area(inner)
  Rational gap_area_conjectured;   // area(outer with conjectured) - area(inner)
  unsigned corners = 0;
  unsigned schemes_pass = 0;
  unsigned schemes_total = 0;
  std::string scheme_errors;       // ';'-joined corner names that failed to build
  std::string split_rl_per_n;      // subcarrier-split payload rate, when M is even
  std::string erasure_rl_per_n;    // erasure-family axis corner, per-n
};

SweepRow compute_sweep_row(Setup setup, unsigned M, unsigned L, const Rational& alpha,
                           std::uint64_t seed);

std::string sweep_csv_header();
std::string sweep_row_to_csv(const SweepRow& r);

}  // namespace bic::tool
