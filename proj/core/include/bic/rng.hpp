#pragma once

#include <cstdint>

namespace bic {

/// splitmix64. Pinned here rather than using <random> engines/distributions
/// so seeded runs are byte-identical across standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1): the top 53 bits of one draw.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform field value of the given extension degree.
  std::uint16_t field_value(unsigned degree) {
    return static_cast<std::uint16_t>(next() & ((1u << degree) - 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace bic
