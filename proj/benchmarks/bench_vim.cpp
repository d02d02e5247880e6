#include <benchmark/benchmark.h>

#include "mecsim/mechost/vim.hpp"

using namespace mecsim;

static void BM_ComputeProcessingTime(benchmark::State& state) {
    Vim vim({1000000, 1000000, 100000}, SharingParadigm::FairSharing);
    const int apps = static_cast<int>(state.range(0));
    for (int i = 0; i < apps; ++i)
        vim.registerApp("app-" + std::to_string(i), "host", {"10.0.1.1", 4001},
                        {1000, 1000, 100});
    for (auto _ : state) {
        double t = vim.computeProcessingTime("app-0", 5000.0);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_ComputeProcessingTime)->Range(1, 256);
