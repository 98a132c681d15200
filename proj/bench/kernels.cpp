// Parallel vs serial unit sums, the inner kernel of the local-coefficient integrals.
#include "mpls/field.hpp"

#include <benchmark/benchmark.h>

namespace {

void run(benchmark::State& state, bool parallel) {
    const mpls::Place pl = mpls::Place::finite(state.range(0));
    const int N = static_cast<int>(state.range(1));
    auto f = [](long r) { return std::polar(1.0, 0.37 * static_cast<double>(r % 1009)); };
    for (auto _ : state) {
        mpls::cd v = parallel ? mpls::unit_sum(f, N, pl) : mpls::unit_sum_serial(f, N, pl);
        benchmark::DoNotOptimize(v);
    }
}

void BM_UnitSumParallel(benchmark::State& s) { run(s, true); }
void BM_UnitSumSerial(benchmark::State& s) { run(s, false); }

}  // namespace

BENCHMARK(BM_UnitSumParallel)->Args({3, 8})->Args({5, 6})->Args({2, 16});
BENCHMARK(BM_UnitSumSerial)->Args({3, 8})->Args({5, 6})->Args({2, 16});
BENCHMARK_MAIN();
