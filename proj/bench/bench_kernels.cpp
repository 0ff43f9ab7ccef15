#include <benchmark/benchmark.h>

#include <omp.h>

#include <map>

#include "yf/corpus.hpp"
#include "yf/universe.hpp"

namespace {

const std::vector<yf::Word>& words_of(std::size_t n) {
  static std::map<std::size_t, yf::Universe> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, yf::Universe::build(n)).first;
  return it->second.words();
}

void BM_DownSetsParallel(benchmark::State& state) {
  const auto& w = words_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(yf::kernels::down_sets_by_leq(w));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_DownSetsSerial(benchmark::State& state) {
  const auto& w = words_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(yf::kernels::down_sets_by_leq_serial(w));
}

void BM_Verify(benchmark::State& state) {
  yf::corpus::VerifyOptions opts;
  opts.workers = static_cast<std::size_t>(state.range(0));
  opts.universe_rank = 10;
  opts.tuple_rank = 4;
  for (auto _ : state) benchmark::DoNotOptimize(yf::corpus::verify_all("phi_", opts));
}

}  // namespace

BENCHMARK(BM_DownSetsParallel)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DownSetsSerial)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verify)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
