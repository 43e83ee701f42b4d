#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bic/region.hpp"
#include "bic/scheme.hpp"
#include "bic/verifier.hpp"

namespace bic {

/// The four level bands of the mid-range alignment construction, top to
/// bottom, in levels. Defined for 1/2 <= alpha <= 2/3; the bands sum to n.
/// Silencing band l2 keeps l4 clean: the other user's l1 lands on l2+l3 and
/// their l2 lands on l4, everything below falls off the channel.
struct BandLayout {
  unsigned l1 = 0;  // (1-alpha) n
  unsigned l2 = 0;  // (2 alpha - 1) n, kept silent
  unsigned l3 = 0;  // (2 - 3 alpha) n
  unsigned l4 = 0;  // (2 alpha - 1) n
};

BandLayout alignment_bands(const ChannelParams& p);

/// Systematic (M, M-L) generator over GF(2^m) whose every (M-L)-row square
/// submatrix is invertible, so any L erased rows can be tolerated. Row i is
/// the share sent on subcarrier i. Requires 2^m >= M unless L or M-L is 1.
Matrix mds_generator(unsigned M, unsigned L, unsigned degree);

/// Construction failure: parameters outside the corner's regime, or the
/// seeded search exhausted its budget without a verifier-passing scheme.
class SchemeBuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds the scheme realizing a corner at its exact rate pair and runs the
/// verifier on it; the construction is not trusted without the check.
/// `payload` selects the message class carrying the single-axis rate for
/// the rlrm han-kobayashi / strong-orthogonal families. The seed feeds the
/// randomized searches those same families use.
LinearScheme build_corner_scheme(const ChannelParams& p, Setup setup, CornerId corner,
                                 MsgClass payload = MsgClass::wl,
                                 std::uint64_t seed = 0);

LinearScheme build_corner_scheme(const ChannelParams& p, Setup setup, const Corner& c,
                                 std::uint64_t seed = 0);

/// Subcarrier division: user 1 transmits fresh symbols on subcarriers
/// 1..M/2 only, user 2 on the other half. Needs M even; delivers
/// (M/2) n symbols per slot in `payload` under every configuration.
LinearScheme split_scheme(const ChannelParams& p, MsgClass payload = MsgClass::wl);

}  // namespace bic
