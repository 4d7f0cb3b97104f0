#include "hydromoments/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace hydro::sweep;

namespace {

const std::vector<Cell>& cells() {
    static const std::vector<Cell> c = [] {
        Grid g;
        g.ns = {1, 2, 3, 4, 5, 6};
        g.Ds = {3, 10, 50, 200, 800};
        g.Zs = {1.0, 2.0};
        g.alphas = {-2.0, -1.0, -0.5, 0.5, 1.0, 1.5, 2.0, 3.0};
        g.methods = {SweepMethod::exact, SweepMethod::largeD, SweepMethod::rydbergFixedD};
        return expand(g);
    }();
    return c;
}

void BM_SweepSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_serial(cells()));
    state.SetItemsProcessed(state.iterations() * long(cells().size()));
}

void BM_SweepParallel(benchmark::State& state) {
    const int jobs = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_parallel(cells(), jobs));
    state.SetItemsProcessed(state.iterations() * long(cells().size()));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
