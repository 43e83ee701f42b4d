#include "bic/channel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bic {

ChannelParams ChannelParams::make(unsigned n, unsigned k, unsigned M, unsigned L,
                                  unsigned degree) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (k > 2 * n) throw std::invalid_argument("need k <= 2n (alpha <= 2)");
  if (M < 1) throw std::invalid_argument("need M >= 1");
  if (L < 1 || L > M) throw std::invalid_argument("need 1 <= L <= M");
  Gf::modulus(degree);
  ChannelParams p;
  p.n = n;
  p.k = k;
  p.q = std::max(n, k);
  p.M = M;
  p.L = L;
  p.degree = degree;
  return p;
}

unsigned ReceiverConfig::interfered_count() const {
  unsigned c = 0;
  for (auto b : mask) c += (b == 0);
  return c;
}

std::string ReceiverConfig::str() const {
  std::string s;
  s.reserve(mask.size());
  for (auto b : mask) s += (b ? '1' : '0');
  return s;
}

ReceiverConfig ReceiverConfig::from_string(const std::string& bits) {
  ReceiverConfig c;
  c.mask.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("mask must be 0/1 bits");
    c.mask.push_back(ch == '1');
  }
  return c;
}

ReceiverConfig ReceiverConfig::all_free(unsigned M) {
  return ReceiverConfig{std::vector<std::uint8_t>(M, 1)};
}

ReceiverConfig ReceiverConfig::all_interfered(unsigned M) {
  return ReceiverConfig{std::vector<std::uint8_t>(M, 0)};
}

SubcarrierSignal apply_channel(const ChannelParams& p, const SubcarrierSignal& x_own,
                               const SubcarrierSignal& x_other, bool interfered) {
  if (x_own.rows() != p.q || x_other.rows() != p.q || x_own.cols() != x_other.cols())
    throw std::invalid_argument("signals must be q x T");
  Matrix g_dir = Matrix::shift(p.q, p.q - p.n, p.degree);
  Matrix y = g_dir * x_own;
  if (interfered) {
    Matrix g_cross = Matrix::shift(p.q, p.q - p.k, p.degree);
    y = y + g_cross * x_other;
  }
  return y;
}

std::vector<SubcarrierSignal> receive(const ChannelParams& p, const ReceiverConfig& cfg,
                                      const std::vector<SubcarrierSignal>& x_own,
                                      const std::vector<SubcarrierSignal>& x_other) {
  if (cfg.size() != p.M || x_own.size() != p.M || x_other.size() != p.M)
    throw std::invalid_argument("need M signals per user and an M-bit mask");
  std::vector<SubcarrierSignal> y;
  y.reserve(p.M);
  for (unsigned j = 0; j < p.M; ++j)
    y.push_back(apply_channel(p, x_own[j], x_other[j], cfg.interfered(j)));
  return y;
}

std::vector<ReceiverConfig> circulant_configs(unsigned M, unsigned L) {
  if (L < 1 || L > M) throw std::invalid_argument("need 1 <= L <= M");
  std::vector<ReceiverConfig> rows;
  rows.reserve(M);
  std::vector<std::uint8_t> first(M, 0);
  for (unsigned j = 0; j + L < M; ++j) first[j] = 1;  // M-L ones, then L zeros
  for (unsigned shift = 0; shift < M; ++shift) {
    std::vector<std::uint8_t> row(M);
    for (unsigned j = 0; j < M; ++j) row[(j + shift) % M] = first[j];
    rows.push_back(ReceiverConfig{std::move(row)});
  }
  return rows;
}

std::vector<ReceiverConfig> all_configs(unsigned M, unsigned L) {
  if (L > M) throw std::invalid_argument("need L <= M");
  std::vector<ReceiverConfig> out;
  // Lexicographic over mask strings; '0' < '1' so interfered-first sorts low.
  std::vector<std::uint8_t> mask(M, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned zeros_left) -> void {
    if (pos == M) {
      if (zeros_left == 0) out.push_back(ReceiverConfig{mask});
      return;
    }
    unsigned remaining = M - pos;
    if (zeros_left > 0) {
      mask[pos] = 0;
      self(self, pos + 1, zeros_left - 1);
    }
    if (remaining - 1 >= zeros_left) {
      mask[pos] = 1;
      self(self, pos + 1, zeros_left);
    }
  };
  rec(rec, 0, L);
  return out;
}

void require_integer_levels(const ChannelParams& p,
                            const std::vector<LevelRequirement>& widths) {
  std::int64_t mult = 1;
  const LevelRequirement* first_bad = nullptr;
  for (const auto& w : widths) {
    Rational v = w.per_n * Rational(p.n);
    if (v.sign() < 0)
      throw std::invalid_argument("negative level width for " + w.name);
    if (!v.is_integer()) {
      if (!first_bad) first_bad = &w;
      mult = std::lcm(mult, v.den());
    }
  }
  if (first_bad) {
    throw std::invalid_argument(
        "level width " + first_bad->name + " = " +
        (first_bad->per_n * Rational(p.n)).str() +
        " is not an integer; use n = " + std::to_string(p.n * mult) +
        " (k = " + std::to_string(p.k * mult) + ") instead");
  }
}

}  // namespace bic
