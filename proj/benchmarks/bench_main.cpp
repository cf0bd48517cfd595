#include <benchmark/benchmark.h>

#include "charprime/beta.hpp"
#include "charprime/exclusion.hpp"
#include "charprime/logmethod.hpp"
#include "charprime/primes.hpp"
#include "charprime/tables.hpp"

namespace {

using namespace charprime;

void BM_Sieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sieve_odd_primes(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_Sieve)->Arg(10000)->Arg(1000000);

void BM_BetaClosed(benchmark::State& state) {
  const Precision prec{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(beta_closed(13, prec));
}
BENCHMARK(BM_BetaClosed)->Arg(50)->Arg(500);

void BM_ExclusionRun(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(exclusion::run(3, static_cast<std::size_t>(state.range(0)), Precision{50}));
  }
}
BENCHMARK(BM_ExclusionRun)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_AssembleO(benchmark::State& state) {
  logmethod::AssemblyOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(logmethod::assemble_O_uncertified(10, opts));
}
BENCHMARK(BM_AssembleO)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ReproduceAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tables::build_all());
}
BENCHMARK(BM_ReproduceAll)->Unit(benchmark::kMillisecond);

void BM_ClosedFormScan(benchmark::State& state) {
  const auto o = logmethod::assemble_O_uncertified(10).o.value;
  for (auto _ : state) {
    benchmark::DoNotOptimize(logmethod::closed_form_scan(o, static_cast<std::uint64_t>(state.range(0)), 1e-7));
  }
}
BENCHMARK(BM_ClosedFormScan)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
