#include "spinforge/compose.hpp"
#include "spinforge/kernels.hpp"
#include "spinforge/verify.hpp"

#include <benchmark/benchmark.h>

using namespace spinforge;

namespace {

const ElementBatch& batch() {
  static const ElementBatch b = random_spin4_batch(100'000, 42);
  return b;
}

template <class F>
void compose_bench(benchmark::State& state, F&& f) {
  for (auto _ : state) benchmark::DoNotOptimize(f());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch().mat8.size()));
}

void BM_ComposeMat8Serial(benchmark::State& s) { compose_bench(s, [] { return compose_serial(batch().mat8); }); }
void BM_ComposeMat8Parallel(benchmark::State& s) { compose_bench(s, [] { return compose_parallel(batch().mat8); }); }
void BM_ComposeMat4CSerial(benchmark::State& s) { compose_bench(s, [] { return compose_serial(batch().mat4c); }); }
void BM_ComposeMat4CParallel(benchmark::State& s) { compose_bench(s, [] { return compose_parallel(batch().mat4c); }); }
void BM_ComposeQuatPairSerial(benchmark::State& s) { compose_bench(s, [] { return compose_serial(batch().quatpair); }); }
void BM_ComposeQuatPairParallel(benchmark::State& s) { compose_bench(s, [] { return compose_parallel(batch().quatpair); }); }

void BM_AssociativitySerial(benchmark::State& state) {
  auto t = star_table(Variant::B2);
  for (auto _ : state) benchmark::DoNotOptimize(associativity_failures_serial(t));
}

void BM_AssociativityParallel(benchmark::State& state) {
  auto t = star_table(Variant::B2);
  for (auto _ : state) benchmark::DoNotOptimize(associativity_failures(t));
}

void BM_RepairSerial(benchmark::State& state) {
  auto spec = ProductSpec::from_variant(Variant::Spin4);
  for (auto _ : state) benchmark::DoNotOptimize(repair_search_serial(spec));
}

void BM_RepairParallel(benchmark::State& state) {
  auto spec = ProductSpec::from_variant(Variant::Spin4);
  for (auto _ : state) benchmark::DoNotOptimize(repair_search_parallel(spec));
}

void BM_DefaultVerification(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(default_verification(42));
}

}  // namespace

BENCHMARK(BM_ComposeMat8Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComposeMat8Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComposeMat4CSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComposeMat4CParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComposeQuatPairSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComposeQuatPairParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssociativitySerial);
BENCHMARK(BM_AssociativityParallel);
BENCHMARK(BM_RepairSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RepairParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DefaultVerification)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
