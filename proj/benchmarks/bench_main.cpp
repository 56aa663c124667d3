#include "dwave/blowup.hpp"
#include "dwave/grid.hpp"
#include "dwave/nonlinear.hpp"
#include "dwave/profiles.hpp"
#include "dwave/propagators.hpp"
#include "dwave/recurrence.hpp"
#include "dwave/symbols.hpp"

#include <benchmark/benchmark.h>

using namespace dwave;

static void BM_DampedSymbol(benchmark::State& state) {
    double xi = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(symbols::damped_pair(7.5, xi));
        xi += 1e-4;
        if (xi > 3.0) xi = 0.0;
    }
}
BENCHMARK(BM_DampedSymbol);

static void BM_Transform1D(benchmark::State& state) {
    const GridSpec g = make_grid(1, 128.0, static_cast<int>(state.range(0)));
    const Field f = sample(Gaussian{1.0}, g);
    for (auto _ : state) benchmark::DoNotOptimize(inverse_transform(forward_transform(f)));
}
BENCHMARK(BM_Transform1D)->Arg(4096)->Arg(32768);

static void BM_Transform3D(benchmark::State& state) {
    const GridSpec g = make_grid(3, 25.0, 128);
    const Field f = sample(Gaussian{1.0}, g);
    for (auto _ : state) benchmark::DoNotOptimize(inverse_transform(forward_transform(f)));
}
BENCHMARK(BM_Transform3D)->Unit(benchmark::kMillisecond);

static void BM_ApplyD(benchmark::State& state) {
    const GridSpec g = make_grid(1, 128.0, 8192);
    const Field f = forward_transform(sample(Gaussian{1.0}, g));
    for (auto _ : state) benchmark::DoNotOptimize(apply_D(f, 50.0));
}
BENCHMARK(BM_ApplyD);

static void BM_DuhamelStep(benchmark::State& state) {
    const GridSpec g = make_grid(1, 128.0, static_cast<int>(state.range(0)));
    const Field u0 = forward_transform(sample(Gaussian{1.0}, g));
    DuhamelStepper stepper(g, make_source({NonlinearityKind::signed_power, 2.0, 1.0, 1.0}));
    PairState s{0.1 * u0, 0.1 * u0, 0.0};
    for (auto _ : state) benchmark::DoNotOptimize(stepper.step(s, 0.05));
}
BENCHMARK(BM_DuhamelStep)->Arg(4096)->Arg(32768);

static void BM_RecurrenceTables(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(derivk_constants(k));
        benchmark::DoNotOptimize(derivkg_constants(k));
    }
}
BENCHMARK(BM_RecurrenceTables)->Arg(12)->Arg(30);

static void BM_BigA(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(big_A(1, 2.0, 5, 100.0));
}
BENCHMARK(BM_BigA);

BENCHMARK_MAIN();
