// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "ured/arith.hpp"
#include "ured/matrixlab.hpp"

namespace {

using namespace ured;

constexpr std::uint64_t kSegment = 65536;

void BM_HistogramSerial(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(omega_histogram_serial(x, kSegment));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_HistogramParallel(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(omega_histogram(x, kSegment));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MatvecSerial(benchmark::State& state) {
  const auto m = build_rstar(static_cast<std::uint64_t>(state.range(0)));
  std::vector<double> v(m.size(), 1.0), y(m.size());
  for (auto _ : state) {
    matvec_serial(m, v, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.entry_count()));
}

void BM_MatvecParallel(benchmark::State& state) {
  const auto m = build_rstar(static_cast<std::uint64_t>(state.range(0)));
  std::vector<double> v(m.size(), 1.0), y(m.size());
  for (auto _ : state) {
    matvec(m, v, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.entry_count()));
}

void BM_CharpolyOracle(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_oracle(n));
}

}  // namespace

BENCHMARK(BM_HistogramSerial)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramParallel)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatvecSerial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MatvecParallel)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CharpolyOracle)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
