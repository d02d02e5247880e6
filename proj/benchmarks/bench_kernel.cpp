#include <benchmark/benchmark.h>

#include "mecsim/kernel/sim.hpp"

using namespace mecsim;

static void BM_ScheduleDispatch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Simulator sim;
        int fired = 0;
        for (int i = 0; i < n; ++i)
            sim.scheduleAt((i * 31) % 97, [&fired] { ++fired; });
        sim.runAll();
        benchmark::DoNotOptimize(fired);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ScheduleDispatch)->Range(1 << 8, 1 << 14);

static void BM_RouteLookup(benchmark::State& state) {
    TransportGraph graph;
    const int n = 64;
    for (int i = 0; i + 1 < n; ++i)
        graph.addLink({"n" + std::to_string(i), "n" + std::to_string(i + 1), 0.001});
    for (auto _ : state) {
        auto hops = graph.route("n0", "n" + std::to_string(n - 1));
        benchmark::DoNotOptimize(hops);
    }
}
BENCHMARK(BM_RouteLookup);
