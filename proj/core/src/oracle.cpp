#include "bic/oracle.hpp"

#include <array>
#include <stdexcept>
#include <unordered_set>

#include "bic/rng.hpp"
#include "bic/schemes.hpp"
#include "bic/verifier.hpp"

namespace bic {

namespace {

// Column-space canonical form of a binary matrix with <= 4 rows and <= 4
// columns, packed into 16 bits: the reduced row echelon form of the
// transpose. Schemes whose class blocks share column spaces verify
// identically, so one representative per space suffices.
std::uint32_t canonical_span(const std::array<std::uint8_t, 4>& cols, unsigned ncols) {
  std::array<std::uint8_t, 4> rows{};
  unsigned cnt = 0;
  for (unsigned i = 0; i < ncols; ++i) rows[cnt++] = cols[i];
  // Gauss-Jordan over GF(2) on 4-bit rows.
  unsigned rank = 0;
  for (int bit = 3; bit >= 0 && rank < cnt; --bit) {
    unsigned piv = rank;
    while (piv < cnt && !(rows[piv] >> bit & 1)) ++piv;
    if (piv == cnt) continue;
    std::swap(rows[piv], rows[rank]);
    for (unsigned r = 0; r < cnt; ++r)
      if (r != rank && (rows[r] >> bit & 1)) rows[r] ^= rows[rank];
    ++rank;
  }
  if (rank < ncols) return 0xFFFFFFFFu;  // dependent columns: cannot verify
  std::uint32_t key = 0;
  for (unsigned i = 0; i < rank; ++i) key = key << 4 | rows[i];
  return key;
}

LinearScheme toy_scheme(const ChannelParams& p, unsigned T, unsigned d0, unsigned dl,
                        std::uint32_t bits) {
  LinearScheme s;
  s.params = p;
  s.T = T;
  s.dims = {d0, dl, 0};
  s.gens.assign(2, {});
  for (unsigned j = 0; j < 2; ++j) {
    s.gens[j][0] = Matrix(T, d0, 1);
    s.gens[j][1] = Matrix(T, dl, 1);
    s.gens[j][2] = Matrix(T, 0, 1);
  }
  unsigned pos = 0;
  for (unsigned c = 0; c < d0 + dl; ++c) {
    const MsgClass cls = c < d0 ? MsgClass::w0 : MsgClass::wl;
    const unsigned cc = c < d0 ? c : c - d0;
    for (unsigned j = 0; j < 2; ++j)
      for (unsigned t = 0; t < T; ++t)
        s.gens[j][static_cast<int>(cls)].set(t, cc, bits >> pos++ & 1);
  }
  return s;
}

}  // namespace

std::set<std::pair<Rational, Rational>> toy_oracle(unsigned max_T) {
  if (max_T < 1 || max_T > 2)
    throw std::invalid_argument("toy oracle supports 1 <= max_T <= 2");
  const ChannelParams p = ChannelParams::make(1, 1, 2, 1, 1);

  std::set<std::pair<Rational, Rational>> out;
  for (unsigned T = 1; T <= max_T; ++T) {
    for (unsigned d0 = 0; d0 <= 2 * T; ++d0) {
      for (unsigned dl = 0; d0 + dl <= 2 * T; ++dl) {
        const Rational pair_r1(dl, T), pair_r0(d0, T);
        if (out.count({pair_r1, pair_r0})) continue;
        const unsigned cells = 2 * T * (d0 + dl);
        std::unordered_set<std::uint64_t> seen;
        bool achieved = false;
        for (std::uint32_t bits = 0; bits < (1u << cells) && !achieved; ++bits) {
          LinearScheme s = toy_scheme(p, T, d0, dl, bits);
          // Canonicalize each class block by its column space.
          std::array<std::uint8_t, 4> c0{}, cl{};
          for (unsigned c = 0; c < d0; ++c)
            for (unsigned j = 0; j < 2; ++j)
              for (unsigned t = 0; t < T; ++t)
                c0[c] |= static_cast<std::uint8_t>(s.gens[j][0].at(t, c) << (j * T + t));
          for (unsigned c = 0; c < dl; ++c)
            for (unsigned j = 0; j < 2; ++j)
              for (unsigned t = 0; t < T; ++t)
                cl[c] |= static_cast<std::uint8_t>(s.gens[j][1].at(t, c) << (j * T + t));
          const std::uint32_t k0 = canonical_span(c0, d0);
          const std::uint32_t kl = canonical_span(cl, dl);
          if (k0 == 0xFFFFFFFFu || kl == 0xFFFFFFFFu) continue;
          if (!seen.insert(static_cast<std::uint64_t>(k0) << 32 | kl).second) continue;
          if (verify(s).overall) {
            out.insert({pair_r1, pair_r0});
            achieved = true;
          }
        }
      }
    }
  }
  for (const auto& [r1, r0] : out)
    if (Rational(2) * r1 + r0 > Rational(2))
      throw std::logic_error("toy oracle produced a rate pair outside 2R1+R0 <= 2");
  return out;
}

namespace {

LinearScheme random_scheme(const ChannelParams& p, unsigned T,
                           const std::array<unsigned, 3>& dims, SplitMix64& rng) {
  LinearScheme s;
  s.params = p;
  s.T = T;
  s.dims = dims;
  s.gens.assign(p.M, {});
  for (unsigned j = 0; j < p.M; ++j)
    for (int c = 0; c < 3; ++c) s.gens[j][c] = Matrix(p.q * T, dims[c], p.degree);
  // Columns may span subcarriers; only levels that reach a receiver are used.
  for (int c = 0; c < 3; ++c)
    for (unsigned col = 0; col < dims[c]; ++col)
      for (unsigned j = 0; j < p.M; ++j)
        for (unsigned t = 0; t < T; ++t)
          for (unsigned l = 0; l < p.n; ++l)
            s.gens[j][c].set(t * p.q + l, col, rng.field_value(p.degree));
  return s;
}

}  // namespace

RateSearchResult max_rate_search(const ChannelParams& p, Setup setup, MsgClass target,
                                 const std::array<Rational, 3>& fixed_rates,
                                 std::uint64_t seed, const RateSearchOptions& opts) {
  RateSearchResult res;
  unsigned budget = opts.budget;

  auto consider = [&](const LinearScheme& s) {
    for (MsgClass c : {MsgClass::w0, MsgClass::wl, MsgClass::wm}) {
      if (c == target) continue;
      if (s.rate_symbols(c) != fixed_rates[static_cast<int>(c)]) return;
    }
    const Rational r = s.rate_symbols(target);
    if (!res.found || r > res.best_rate) {
      res.found = true;
      res.best_rate = r;
      res.scheme = s;
    }
  };

  // Closed constructions first: every corner of the regime plus the
  // subcarrier split when M is even.
  for (const Corner& c : inner_corners(setup, p.M, p.L, p.n, p.k)) {
    if (budget == 0) { res.budget_exceeded = true; return res; }
    --budget;
    try {
      consider(build_corner_scheme(p, setup, c, seed));
    } catch (const SchemeBuildError&) {
    }
  }
  if (p.M % 2 == 0) {
    try {
      consider(split_scheme(p, target));
    } catch (const SchemeBuildError&) {
    }
  }

  const unsigned max_symbols = 24 / p.degree;
  SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  for (unsigned T = 1; T <= opts.max_T; ++T) {
    std::array<unsigned, 3> dims = {0, 0, 0};
    bool feasible = true;
    unsigned fixed_total = 0;
    for (MsgClass c : {MsgClass::w0, MsgClass::wl, MsgClass::wm}) {
      if (c == target) continue;
      Rational per_block = fixed_rates[static_cast<int>(c)] * Rational(T);
      if (!per_block.is_integer() || per_block.sign() < 0) {
        feasible = false;
        break;
      }
      dims[static_cast<int>(c)] = static_cast<unsigned>(per_block.num());
      fixed_total += dims[static_cast<int>(c)];
    }
    if (!feasible) continue;
    if (fixed_total > max_symbols)
      throw std::invalid_argument(
          "instance exceeds the 24 GF(2)-symbol search guard");

    const unsigned ub = std::min(max_symbols - fixed_total, p.M * p.n * T);
    for (unsigned d = ub;; --d) {
      if (res.found && Rational(d, T) <= res.best_rate) break;
      dims[static_cast<int>(target)] = d;
      for (unsigned draw = 0; draw < opts.draws_per_dim; ++draw) {
        if (budget == 0) { res.budget_exceeded = true; return res; }
        --budget;
        LinearScheme s = random_scheme(p, T, dims, rng);
        if (verify(s).overall) {
          consider(s);
          break;
        }
      }
      if (d == 0) break;
    }
  }
  return res;
}

}  // namespace bic
