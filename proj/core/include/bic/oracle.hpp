#pragma once

#include <optional>
#include <set>
#include <utility>

#include "bic/region.hpp"
#include "bic/scheme.hpp"

namespace bic {

/// Exhaustive search over symmetric linear encoders for the two-subcarrier
/// binary instance (M = 2, n = k = 1, GF(2)), up to max_T slots per block
/// and d0 + dL <= 2T message symbols. Encoders are enumerated modulo
/// column-space equivalence. Returns every verifier-passing (R1, R0) rate
/// pair; the whole set is guaranteed to satisfy 2 R1 + R0 <= 2. max_T > 2
/// is rejected to keep the search space bounded.
std::set<std::pair<Rational, Rational>> toy_oracle(unsigned max_T = 2);

struct RateSearchOptions {
  unsigned max_T = 2;
  unsigned draws_per_dim = 48;  // random generator draws per (T, d) cell
  unsigned budget = 512;        // total verifier invocations allowed
};

struct RateSearchResult {
  bool found = false;
  Rational best_rate;  // symbols per channel use for the target class
  bool budget_exceeded = false;
  std::optional<LinearScheme> scheme;
};

/// Best verifier-passing rate for `target` found over the closed corner
/// constructions plus seeded random generator draws, holding the other
/// class rates fixed (exact symbols per channel use). Never claimed
/// optimal. Rejects instances with more than 24 GF(2)-equivalent unknown
/// symbols per block.
RateSearchResult max_rate_search(const ChannelParams& p, Setup setup, MsgClass target,
                                 const std::array<Rational, 3>& fixed_rates,
                                 std::uint64_t seed,
                                 const RateSearchOptions& opts = {});

}  // namespace bic
