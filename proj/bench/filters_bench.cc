#include <benchmark/benchmark.h>

#include "pi2cut/sn.h"
#include "pi2cut/tautology.h"
#include "support.h"

using namespace pi2cut;
using namespace pi2cut::testing;

namespace {

Exec ExecOf(const benchmark::State& state) {
  return state.range(0) ? Exec::kParallel : Exec::kSerial;
}

struct FilterInput {
  Sehs sehs;
  ClauseSet start;
  Caps caps;
};

// Naive pool of S_3 with clauses of at most two literals.
const FilterInput& SnInput() {
  static const FilterInput in = [] {
    SnInstance sn = GenerateSn(3);
    FilterInput f{BuildSehs(sn.file.problem, sn.file.grammar), {}, {3, 2, 1000000}};
    f.start = ClausesOf(NaivePool(f.sehs), 2);
    return f;
  }();
  return in;
}

void BM_ClFilter(benchmark::State& state) {
  const FilterInput& in = SnInput();
  for (auto _ : state) {
    FilterResult r = ClFilter(in.start, in.sehs, in.caps, ExecOf(state));
    benchmark::DoNotOptimize(r.sets.data());
  }
}
BENCHMARK(BM_ClFilter)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SolFilter(benchmark::State& state) {
  const FilterInput& in = SnInput();
  static const std::vector<ClauseSet> cl =
      ClFilter(in.start, in.sehs, in.caps, Exec::kParallel).sets;
  for (auto _ : state) {
    FilterResult r = SolFilter(cl, in.sehs, SolCondition::kPositional, ExecOf(state));
    benchmark::DoNotOptimize(r.sets.data());
  }
}
BENCHMARK(BM_SolFilter)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TautologyBatch(benchmark::State& state) {
  static const std::vector<Sequent> seqs = [] {
    std::mt19937 rng(7);
    std::vector<Sequent> out;
    for (int i = 0; i < 4000; ++i) out.push_back(RandomPropositionalSequent(rng, 8));
    return out;
  }();
  for (auto _ : state) {
    std::vector<char> r = TautologyBatch(seqs, state.range(0) != 0);
    benchmark::DoNotOptimize(r.data());
  }
}
BENCHMARK(BM_TautologyBatch)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
