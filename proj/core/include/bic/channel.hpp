#pragma once

#include <string>
#include <vector>

#include "bic/matrix.hpp"
#include "bic/rational.hpp"

namespace bic {

/// Parameters of one problem instance: a 2-user parallel linear
/// deterministic interference channel with M subcarriers per user, direct
/// strength n, cross strength k, and q = max(n, k) signal levels.
struct ChannelParams {
  unsigned n = 1;       // direct link strength in levels
  unsigned k = 1;       // cross link strength in levels
  unsigned q = 1;       // q = max(n, k), enforced by make()
  unsigned M = 1;       // subcarriers per user
  unsigned L = 1;       // interfered subcarriers in the middle decode class
  unsigned degree = 8;  // field extension degree m

  /// Validates 1 <= n, 0 <= k <= 2n (alpha in [0,2]), 1 <= L <= M.
  static ChannelParams make(unsigned n, unsigned k, unsigned M, unsigned L,
                            unsigned degree = 8);

  Rational alpha() const { return Rational(k, n); }
};

/// Which of one user's M subcarriers are interfered for a whole block:
/// mask[j] == 1 means subcarrier j is interference free, 0 means interfered.
struct ReceiverConfig {
  std::vector<std::uint8_t> mask;

  unsigned size() const { return static_cast<unsigned>(mask.size()); }
  bool interfered(unsigned j) const { return mask[j] == 0; }
  unsigned interfered_count() const;
  std::string str() const;  // e.g. "110"

  static ReceiverConfig from_string(const std::string& bits);
  static ReceiverConfig all_free(unsigned M);
  static ReceiverConfig all_interfered(unsigned M);

  friend bool operator==(const ReceiverConfig&, const ReceiverConfig&) = default;
};

/// A subcarrier signal is a q x T matrix: rows are levels (0 = top),
/// columns are time slots.
using SubcarrierSignal = Matrix;

/// One subcarrier of the channel: G^{q-n} x_own, plus G^{q-k} x_other when
/// the subcarrier is interfered. Signals must be q x T.
SubcarrierSignal apply_channel(const ChannelParams& p, const SubcarrierSignal& x_own,
                               const SubcarrierSignal& x_other, bool interfered);

/// All M subcarriers under one receiver configuration. The configuration is
/// static across the block.
std::vector<SubcarrierSignal> receive(const ChannelParams& p, const ReceiverConfig& cfg,
                                      const std::vector<SubcarrierSignal>& x_own,
                                      const std::vector<SubcarrierSignal>& x_other);

/// The M cyclic configurations with L interfered subcarriers: row j is the
/// right rotation of (M-L ones, L zeros) by j positions.
std::vector<ReceiverConfig> circulant_configs(unsigned M, unsigned L);

/// Every mask with exactly L interfered subcarriers, in lexicographic order
/// of the mask string. 0 <= L <= M.
std::vector<ReceiverConfig> all_configs(unsigned M, unsigned L);

/// A level width that must come out integral for a given construction,
/// expressed per-n (width = per_n * n).
struct LevelRequirement {
  Rational per_n;
  std::string name;
};

/// Throws std::invalid_argument with a diagnostic naming the first
/// non-integral width and the minimal multiplier for n that fixes all of
/// them. No-op when every width is integral.
void require_integer_levels(const ChannelParams& p,
                            const std::vector<LevelRequirement>& widths);

}  // namespace bic
