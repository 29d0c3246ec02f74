// Serial reference vs OpenMP kernels. The parallel paths must produce
// bit-identical results, so this only measures throughput.

#include <benchmark/benchmark.h>

#include "lorentzvol/entropy.hpp"
#include "lorentzvol/volume_exact.hpp"
#include "lorentzvol/volume_mc.hpp"

using namespace lorentzvol;

namespace {

const McConfig kMcConfig{500'000, 7, 0.99};
const Params kWeak{1.0, kInf};

void BM_mc_hits_serial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(mc_count_hits_serial(n, kWeak, kMcConfig, false));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(kMcConfig.samples));
}

void BM_mc_hits_parallel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mc_count_hits(n, kWeak, kMcConfig, false));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(kMcConfig.samples));
}

PackingFamily packing_fixture() {
  static PackingFamily fam = build_packing(192, 1, 2, 3);
  return fam;
}

void BM_packing_verify_serial(benchmark::State& state) {
  PackingFamily fam = packing_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(verify_packing_exact_serial(fam));
}

void BM_packing_verify_parallel(benchmark::State& state) {
  PackingFamily fam = packing_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(verify_packing_exact(fam));
}

IndexSetFamily code_fixture() {
  static IndexSetFamily fam = construct_code(192, 16, 1);
  return fam;
}

void BM_code_verify_serial(benchmark::State& state) {
  IndexSetFamily fam = code_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(verify_code_serial(fam));
}

void BM_code_verify_parallel(benchmark::State& state) {
  IndexSetFamily fam = code_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(verify_code(fam));
}

void BM_recursion_table(benchmark::State& state) {
  PrecisionContext ctx(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(vol_weak_positive_recursive_all(30, 2.0, ctx));
}

}  // namespace

BENCHMARK(BM_mc_hits_serial)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mc_hits_parallel)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_packing_verify_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_packing_verify_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_code_verify_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_code_verify_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_recursion_table)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
