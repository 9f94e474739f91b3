// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "fds/io.hpp"
#include "fds/kernels.hpp"
#include "fds/sampling.hpp"
#include "fds/schedules.hpp"

using namespace fds;

namespace {

std::vector<int> letters(int n, int length) {
  std::vector<int> w(length);
  for (int k = 0; k < length; ++k) w[k] = 1 + k % n;
  return w;
}

void BM_ComposeBitsliced(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(kDefaultSeed);
  const System f = sample_psi(random_graph(n, rng), rng);
  const auto w = letters(n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::compose_bitsliced(n, f.updates(), w));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ComposeBitsliced)->DenseRange(8, 16, 4);

void BM_ComposePointwise(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(kDefaultSeed);
  const System f = sample_psi(random_graph(n, rng), rng);
  const auto w = letters(n, 2 * n);
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::compose_pointwise(n, f.updates(), w));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ComposePointwise)->DenseRange(8, 16, 4);

void BM_MoebiusKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  std::vector<std::uint64_t> words(std::max<std::size_t>(1, (std::size_t{1} << n) / 64));
  for (auto& w : words) w = rng();
  for (auto _ : state) {
    kernels::moebius_transform(words, n);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_MoebiusKernel)->DenseRange(8, 20, 4);

void BM_MoebiusReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  std::vector<std::uint8_t> values(std::size_t{1} << n);
  for (auto& v : values) v = rng() & 1u;
  for (auto _ : state) benchmark::DoNotOptimize(reference::moebius_transform(values, n));
}
BENCHMARK(BM_MoebiusReference)->DenseRange(8, 12, 4);

void BM_BoundReport(benchmark::State& state) {
  const System f = parse_system("vars: 4\nf1 = x2*x3\nf2 = x1 + x4\nf3 = x3\nf4 = 1 + x1*x2\n");
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bound_report(f, {.length = t}));
}
BENCHMARK(BM_BoundReport)->DenseRange(4, 7, 1);

void BM_BoundReportReference(benchmark::State& state) {
  const System f = parse_system("vars: 4\nf1 = x2*x3\nf2 = x1 + x4\nf3 = x3\nf4 = 1 + x1*x2\n");
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::bound_report(f, {.length = t}));
}
BENCHMARK(BM_BoundReportReference)->DenseRange(4, 7, 1);

}  // namespace

BENCHMARK_MAIN();
