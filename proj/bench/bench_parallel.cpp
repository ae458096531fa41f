// Serial versus OpenMP kernels: forest balancing scans and oracle sweeps.
#include <benchmark/benchmark.h>

#include <string>

#include "crnx/domination.hpp"
#include "crnx/forest.hpp"
#include "crnx/graph.hpp"
#include "crnx/oracle.hpp"
#include "fixtures.hpp"

using namespace crnx;

namespace {

// X1 -> X2 -> ... -> Xn with skips Xi -> X(i+2): every exterior complex has
// two exits, giving 2^(n-2) forests, all unbalanced.
ReactionNetwork skip_chain(int n) {
  std::string text;
  for (int i = 1; i < n; ++i) {
    text += "X" + std::to_string(i) + " -> X" + std::to_string(i + 1) + "\n";
    if (i + 2 <= n) text += "X" + std::to_string(i) + " -> X" + std::to_string(i + 2) + "\n";
  }
  return testing::net_from(text);
}

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_ScanForests(benchmark::State& state) {
  const ReactionNetwork net = skip_chain(static_cast<int>(state.range(1)));
  const DomCrn d = maximal_admissible(net);
  const auto forests = enumerate_forests(net, d, 1u << 16).forests;
  for (auto _ : state) {
    ForestScan scan = scan_forests(net, d, forests, NontrivialityReading::kTrueReactions,
                                   exec_of(state), false);
    benchmark::DoNotOptimize(scan);
  }
  state.counters["forests"] = static_cast<double>(forests.size());
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_ScanForests)
    ->ArgsProduct({{0, 1}, {8, 10}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_EnvzSweep(benchmark::State& state) {
  const ReactionNetwork net = testing::load("envz");
  const ComplexSet yc = complement(testing::cset(net, "X4"), net.num_complexes());
  const auto roots = states_with_total_at_most(net.num_species(), state.range(1));
  for (auto _ : state) {
    ExtinctionSweep s = extinction_sweep(net, yc, roots, kDefaultStateCap, exec_of(state));
    benchmark::DoNotOptimize(s);
  }
  state.counters["roots"] = static_cast<double>(roots.size());
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_EnvzSweep)
    ->ArgsProduct({{0, 1}, {3, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
