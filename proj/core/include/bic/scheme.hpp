#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bic/channel.hpp"
#include "bic/rational.hpp"

namespace bic {

/// The three message classes of the degraded set. w_m must survive full
/// interference, w_l any L interfered subcarriers, w_0 only the clean
/// configuration; required sets are nested.
enum class MsgClass { w0 = 0, wl = 1, wm = 2 };

inline const char* msg_class_name(MsgClass c) {
  switch (c) {
    case MsgClass::w0: return "w0";
    case MsgClass::wl: return "wl";
    case MsgClass::wm: return "wm";
  }
  return "?";
}

/// A linear block scheme: for each subcarrier and message class, a
/// (q*T) x d generator mapping message symbols into the transmit signal.
/// Row index within a subcarrier is slot*q + level (level 0 = top).
///
/// Both users transmit the same generators unless `other_gens` is set, in
/// which case user 2 uses that set; rate requirements stay symmetric and
/// verification covers both directions.
struct LinearScheme {
  ChannelParams params;
  unsigned T = 1;                                // slots per block
  std::array<unsigned, 3> dims = {0, 0, 0};      // d0, dL, dM symbols/block
  std::vector<std::array<Matrix, 3>> gens;       // [subcarrier][class]
  std::optional<std::vector<std::array<Matrix, 3>>> other_gens;

  bool symmetric() const { return !other_gens.has_value(); }

  unsigned dim(MsgClass c) const { return dims[static_cast<int>(c)]; }
  const Matrix& gen(unsigned subcarrier, MsgClass c) const {
    return gens[subcarrier][static_cast<int>(c)];
  }

  /// Symbols per channel use; Fig-style normalization divides by n.
  Rational rate_symbols(MsgClass c) const { return Rational(dim(c), T); }
  Rational rate_per_n(MsgClass c) const { return Rational(dim(c), T) / Rational(params.n); }
  Rational rate_bits(MsgClass c) const {
    return Rational(static_cast<std::int64_t>(dim(c)) * params.degree, T);
  }

  /// Shape consistency: every generator is (q*T) x d with the scheme field.
  void validate() const;
};

}  // namespace bic
