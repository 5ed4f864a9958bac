#include <benchmark/benchmark.h>

#include "boxres/constructions.hpp"
#include "boxres/homology.hpp"
#include "boxres/ideal.hpp"
#include "boxres/resolution.hpp"

using namespace boxres;

static void BM_BuildPowerComplex(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(power_complex(n));
    }
}
BENCHMARK(BM_BuildPowerComplex)->Arg(3)->Arg(4);

static void BM_BuildPinchedComplex(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pinched_complex(n));
    }
}
BENCHMARK(BM_BuildPinchedComplex)->Arg(3)->Arg(4);

static void BM_AcyclicitySweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int threads = static_cast<int>(state.range(1));
    const LabelledComplex x = power_complex(n);
    const FieldSpec k{32003};
    SweepOptions opts;
    opts.threads = threads;
    for (auto _ : state) {
        benchmark::DoNotOptimize(acyclicity_sweep(x, k, opts));
    }
}
BENCHMARK(BM_AcyclicitySweep)->Args({3, 1})->Args({4, 1})->Args({4, 4});

static void BM_KoszulOracle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const MonomialIdeal I = power_ideal(n, n);
    const FieldSpec k{32003};
    for (auto _ : state) {
        benchmark::DoNotOptimize(koszul_betti_oracle(I, k, 1));
    }
}
BENCHMARK(BM_KoszulOracle)->Arg(3)->Arg(4);

static void BM_CollapseStar(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const LabelledComplex y = star_complex(n);
    const Monomial m = center_monomial(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(collapse_star(y, m));
    }
}
BENCHMARK(BM_CollapseStar)->Arg(4)->Arg(5);

static void BM_FreeComplex(benchmark::State& state) {
    const LabelledComplex x = power_complex(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(free_complex(x));
    }
}
BENCHMARK(BM_FreeComplex)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
