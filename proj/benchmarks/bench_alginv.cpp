#include <benchmark/benchmark.h>

#include "alginv/algebra/catalog.hpp"
#include "alginv/autsolve/autsolve.hpp"
#include "alginv/group/group_catalog.hpp"
#include "alginv/invariants/invariants.hpp"
#include "alginv/invariants/trace_algebra.hpp"
#include "alginv/structure/structure.hpp"
#include "alginv/traces/traces.hpp"
#include "alginv/traces/word.hpp"

namespace {

using namespace alginv;

void BM_TraceOfWordOctonions(benchmark::State& state) {
  const Algebra a = catalog("oct");
  const Word w = parse_word("((x1*x2)*(x3*x0))");
  for (auto _ : state) benchmark::DoNotOptimize(trace_of_word(a, w, 3));
}
BENCHMARK(BM_TraceOfWordOctonions)->Unit(benchmark::kMillisecond);

// Every word of multidegree (1,...,1) with `range(0)` leaves over a formal E1.
void BM_TraceWordsFormalE1(benchmark::State& state) {
  const Algebra a = catalog("E1");
  const int m = static_cast<int>(state.range(0));
  const auto words = enumerate_words(m, std::vector<int>(static_cast<std::size_t>(m) + 1, 1));
  for (auto _ : state)
    for (const Word& w : words) benchmark::DoNotOptimize(trace_of_word(a, w, m));
  state.counters["words"] = static_cast<double>(words.size());
}
BENCHMARK(BM_TraceWordsFormalE1)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_FixedSubspaceS3(benchmark::State& state) {
  const GroupSpec g = builtin_group("table1aut:E1S3");
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fixed_subspace(g, 2, {d, d}));
}
BENCHMARK(BM_FixedSubspaceS3)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_MinimalGenerators(benchmark::State& state) {
  const GroupSpec g = builtin_group("table1aut:E1S3");
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_generators(g, m, 6));
}
BENCHMARK(BM_MinimalGenerators)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_ApiCheckA1(benchmark::State& state) {
  const Algebra a = catalog("A1", std::map<std::string, Rational>{{"alpha", 2}});
  const GroupSpec g = builtin_group("table1aut:A1");
  for (auto _ : state) benchmark::DoNotOptimize(api_check(a, g, 2, 4));
}
BENCHMARK(BM_ApiCheckA1)->Unit(benchmark::kMillisecond);

void BM_AutSolveE1(benchmark::State& state) {
  const Algebra a =
      catalog("E1", std::map<std::string, Rational>{{"alpha", -1}, {"beta", -1}, {"gamma", -1}, {"delta", -1}});
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group_dim2(a));
}
BENCHMARK(BM_AutSolveE1)->Unit(benchmark::kMillisecond);

void BM_IdealSearchC(benchmark::State& state) {
  const Algebra a = catalog("C", std::map<std::string, Rational>{{"alpha", 2}, {"beta", 3}});
  for (auto _ : state) benchmark::DoNotOptimize(one_dim_ideal_witness(a));
}
BENCHMARK(BM_IdealSearchC);

}  // namespace

BENCHMARK_MAIN();
