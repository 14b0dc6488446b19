#include <benchmark/benchmark.h>

#include <sstream>

#include "netdiv/betweenness.hpp"
#include "netdiv/edge_list.hpp"
#include "netdiv/generators.hpp"
#include "netdiv/metrics.hpp"

namespace {

void BM_KBetweennessCutoff3(benchmark::State& state) {
  const auto g = netdiv::fixtures::random_gnp(static_cast<int>(state.range(0)), 0.05, 42, false);
  const auto params = netdiv::betweenness_params_for(g, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(netdiv::k_betweenness(g, params));
  }
}
BENCHMARK(BM_KBetweennessCutoff3)->Arg(100)->Arg(200)->Arg(400);

void BM_KBetweennessUnbounded(benchmark::State& state) {
  const auto g = netdiv::fixtures::random_gnp(static_cast<int>(state.range(0)), 0.05, 42, false);
  const auto params = netdiv::betweenness_params_for(g, std::nullopt);
  for (auto _ : state) {
    benchmark::DoNotOptimize(netdiv::k_betweenness(g, params));
  }
}
BENCHMARK(BM_KBetweennessUnbounded)->Arg(100)->Arg(200)->Arg(400);

void BM_KBetweennessThreads(benchmark::State& state) {
  const auto g = netdiv::fixtures::random_gnp(300, 0.05, 42, false);
  const auto params = netdiv::betweenness_params_for(g, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        netdiv::k_betweenness(g, params, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_KBetweennessThreads)->Arg(1)->Arg(2)->Arg(4);

void BM_ComputeReport(benchmark::State& state) {
  const auto fixture =
      netdiv::fixtures::broker_specialist(static_cast<int>(state.range(0)), 9);
  const auto params = netdiv::betweenness_params_for(fixture.graph, 3);
  const netdiv::ThresholdPolicy policy{1.0, netdiv::ThresholdMode::binarize};
  for (auto _ : state) {
    benchmark::DoNotOptimize(netdiv::compute_report(fixture.graph, policy, params, true));
  }
}
BENCHMARK(BM_ComputeReport)->Arg(100)->Arg(400);

void BM_LoadEdgeList(benchmark::State& state) {
  const auto g = netdiv::fixtures::random_gnp(static_cast<int>(state.range(0)), 0.1, 7, true);
  const auto text = netdiv::serialize_edge_list(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(netdiv::load_edge_list(std::string_view(text), true));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_LoadEdgeList)->Arg(200)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
