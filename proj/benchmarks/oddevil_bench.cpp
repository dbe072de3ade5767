#include <benchmark/benchmark.h>

#include "oddevil/characterization.hpp"
#include "oddevil/digits.hpp"
#include "oddevil/morphic.hpp"
#include "oddevil/sequences.hpp"
#include "oddevil/summation.hpp"

using namespace oddevil;

static void BM_ThueMorseDigitLoop(benchmark::State& state) {
  const Radix d(state.range(0));
  std::int64_t n = 0;
  for (auto _ : state) benchmark::DoNotOptimize(thue_morse(n++, d));
}
BENCHMARK(BM_ThueMorseDigitLoop)->Arg(2)->Arg(3)->Arg(8);

static void BM_StreamLetter(benchmark::State& state) {
  LetterStream s{Radix(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(s.next());
}
BENCHMARK(BM_StreamLetter)->Arg(2)->Arg(3)->Arg(8);

static void BM_Prefix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prefix(Radix(2), state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Prefix)->Range(1 << 10, 1 << 20);

static void BM_Term(benchmark::State& state) {
  const SequenceSpec spec = SequenceSpec::odious();
  std::int64_t n = 1'000'000'007;
  for (auto _ : state) benchmark::DoNotOptimize(term(spec, n++));
}
BENCHMARK(BM_Term);

static void BM_Summatory(benchmark::State& state) {
  const SequenceSpec spec(2, Radix(5));
  std::int64_t n = std::int64_t{1} << 40;
  for (auto _ : state) benchmark::DoNotOptimize(summatory(spec, n++));
}
BENCHMARK(BM_Summatory);

static void BM_ConstructParity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(construct_parity(state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConstructParity)->Range(1 << 10, 1 << 18);

static void BM_PartitionSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_partition_solutions(state.range(0)));
}
BENCHMARK(BM_PartitionSearch)->DenseRange(8, 24, 8);
BENCHMARK_MAIN();
