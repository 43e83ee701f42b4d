#include <benchmark/benchmark.h>

#include "bic/entropy.hpp"
#include "bic/oracle.hpp"
#include "bic/rng.hpp"
#include "bic/schemes.hpp"

using namespace bic;

namespace {

Matrix random_matrix(unsigned rows, unsigned cols, unsigned degree, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Matrix m(rows, cols, degree);
  for (unsigned r = 0; r < rows; ++r)
    for (unsigned c = 0; c < cols; ++c) m.set(r, c, rng.field_value(degree));
  return m;
}

void BM_rank_gf256(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  Matrix m = random_matrix(n, n, 8, 42);
  for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_rank_gf256)->Arg(32)->Arg(64)->Arg(128);

void BM_verify_alignment(benchmark::State& state) {
  const unsigned M = static_cast<unsigned>(state.range(0));
  auto p = ChannelParams::make(5, 3, M, 2, 8);
  auto s = build_corner_scheme(p, Setup::r0rl, CornerId::r0rl_alignment_erasure);
  for (auto _ : state) benchmark::DoNotOptimize(verify(s).overall);
}
BENCHMARK(BM_verify_alignment)->Arg(3)->Arg(5)->Arg(7);

void BM_tightness_cell(benchmark::State& state) {
  for (auto _ : state) {
    auto rep = tightness_report(Setup::rlrm, 5, 3, 5, 3);
    benchmark::DoNotOptimize(rep.verdict);
  }
}
BENCHMARK(BM_tightness_cell);

void BM_toy_oracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(toy_oracle(2).size());
}
BENCHMARK(BM_toy_oracle);

void BM_sliding_window(benchmark::State& state) {
  auto pmf = random_pmf({3, 3, 3, 3}, 7);
  for (auto _ : state) benchmark::DoNotOptimize(sliding_window_check(pmf).holds);
}
BENCHMARK(BM_sliding_window);

}  // namespace

BENCHMARK_MAIN();
