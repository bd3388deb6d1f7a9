#include <benchmark/benchmark.h>

#include "zfr/scanner.hpp"

static void BM_CountZerosUnitBox(benchmark::State& state) {
    auto f = zfr::make_zeta();
    zfr::ComplexRectangle box{0.0, 1.0, 13.5, 14.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(zfr::count_zeros(f, box));
    }
}
BENCHMARK(BM_CountZerosUnitBox);

static void BM_RefineZero(benchmark::State& state) {
    auto f = zfr::make_zeta();
    for (auto _ : state) {
        benchmark::DoNotOptimize(zfr::refine_zero(f, {0.5, 14.1}));
    }
}
BENCHMARK(BM_RefineZero);

static void BM_CertifyZeta(benchmark::State& state) {
    auto f = zfr::make_zeta();
    for (auto _ : state) {
        benchmark::DoNotOptimize(zfr::certify_region(f, 0.05, state.range(0)));
    }
}
BENCHMARK(BM_CertifyZeta)->Arg(10)->Arg(30);

static void BM_RealSegmentScan(benchmark::State& state) {
    auto f = zfr::make_dedekind_quadratic(5, "zeta_chi5");
    for (auto _ : state) {
        benchmark::DoNotOptimize(zfr::real_segment_scan(f));
    }
}
BENCHMARK(BM_RealSegmentScan);
