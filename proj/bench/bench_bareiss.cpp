// Serial versus OpenMP fraction-free elimination on random integer matrices
// and on the D^n matrix of the wink1 derivation.

#include <benchmark/benchmark.h>

#include <random>

#include "lnd/linalg.hpp"
#include "lnd/oracle.hpp"

namespace {

lnd::linalg::IntMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  lnd::linalg::IntMatrix m(rows, cols);
  for (auto& x : m.data) x = dist(rng);
  return m;
}

template <auto Kernel>
void BM_random(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto base = random_matrix(n, n + 1, 7);
  for (auto _ : state) {
    auto m = base;
    benchmark::DoNotOptimize(Kernel(m, n));
  }
  state.SetComplexityN(state.range(0));
}

void BM_wink1_rank(benchmark::State& state) {
  const auto ring = lnd::PolyRing::make({"a", "b"}, {"X", "Y", "Z"});
  const lnd::Derivation d(ring, {lnd::parse_poly(ring, "a"), lnd::parse_poly(ring, "b"),
                                 lnd::parse_poly(ring, "b*X - a*Y")});
  const auto mat = lnd::oracle::matrix_of_power(d, 1, lnd::oracle::DegreeSlice(ring, {3, 3}));
  lnd::linalg::Config cfg;
  cfg.exec = state.range(0) ? lnd::linalg::Exec::parallel : lnd::linalg::Exec::serial;
  cfg.entry_cap = 1u << 24;
  for (auto _ : state) benchmark::DoNotOptimize(lnd::linalg::rank(mat.entries, cfg));
}

}  // namespace

BENCHMARK(BM_random<lnd::linalg::bareiss_serial>)->Name("bareiss_serial")->RangeMultiplier(2)->Range(16, 64);
BENCHMARK(BM_random<lnd::linalg::bareiss_parallel>)->Name("bareiss_parallel")->RangeMultiplier(2)->Range(16, 64);
BENCHMARK(BM_wink1_rank)->Name("wink1_rank")->Arg(0)->Arg(1);

BENCHMARK_MAIN();
