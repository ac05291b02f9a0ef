#include <benchmark/benchmark.h>

#include "qwvd/generators.hpp"
#include "qwvd/oracle.hpp"
#include "qwvd/qft.hpp"

namespace {

qwvd::GridGeometry grid(int n) {
    qwvd::GridGeometry g;
    g.n1 = g.n2 = n;
    g.delta1 = g.delta2 = 4.0 / n;
    g.origin1 = g.origin2 = -2.0;
    return g;
}

const qwvd::OffsetParams kP1{1.0, 1.0, 0.0, 1.0, 0.5, 0.25};
const qwvd::OffsetParams kP2{1.0, 1.0, 0.0, 1.0, -0.25, 0.5};

void QftFast(benchmark::State& state) {
    const auto g = grid(static_cast<int>(state.range(0)));
    const auto f = qwvd::random_signal(1, g);
    const auto freq = qwvd::qft_dual_grid(g);
    for (auto _ : state) {
        auto s = qwvd::qft_fast(f, freq);
        benchmark::DoNotOptimize(s.values.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(QftFast)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void QftDirect(benchmark::State& state) {
    const auto g = grid(static_cast<int>(state.range(0)));
    const auto f = qwvd::random_signal(1, g);
    const auto freq = qwvd::qft_dual_grid(g);
    for (auto _ : state) {
        auto s = qwvd::qft_forward(f, qwvd::AxisPair::ij(), freq);
        benchmark::DoNotOptimize(s.values.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(QftDirect)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void QftOracle(benchmark::State& state) {
    const auto g = grid(static_cast<int>(state.range(0)));
    const auto f = qwvd::random_signal(1, g);
    const auto freq = qwvd::qft_dual_grid(g);
    for (auto _ : state) {
        auto s = qwvd::oracle_qft(f, qwvd::AxisPair::ij(), freq);
        benchmark::DoNotOptimize(s.values.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(QftOracle)->RangeMultiplier(2)->Range(8, 32)->Complexity();

void QolctFast(benchmark::State& state) {
    const auto g = grid(static_cast<int>(state.range(0)));
    const auto f = qwvd::random_signal(2, g);
    const auto freq = qwvd::qolct_dual_grid(g, kP1, kP2);
    for (auto _ : state) {
        auto s = qwvd::qolct_fast(f, kP1, kP2, freq);
        benchmark::DoNotOptimize(s.values.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(QolctFast)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void WvdSliceFast(benchmark::State& state) {
    const auto g = grid(static_cast<int>(state.range(0)));
    const auto f = qwvd::random_signal(3, g);
    const auto freq = qwvd::wvd_dual_grid(g, kP1, kP2);
    const int c = g.n1;  // center slice
    for (auto _ : state) {
        const auto h = qwvd::correlation_product_half_step(f, f, c, c);
        auto s = qwvd::qolct_fast(h, kP1, kP2, freq);
        benchmark::DoNotOptimize(s.values.data());
    }
}
BENCHMARK(WvdSliceFast)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
