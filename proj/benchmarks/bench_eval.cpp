#include <benchmark/benchmark.h>

#include <complex>

#include "zfr/eval.hpp"
#include "zfr/lfunction.hpp"

using Complex = std::complex<double>;

static void BM_HurwitzZeta(benchmark::State& state) {
    Complex s{0.8, static_cast<double>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(zfr::hurwitz_zeta(s, 0.25));
    }
}
BENCHMARK(BM_HurwitzZeta)->Arg(1)->Arg(15)->Arg(60);

static void BM_LValueProduct(benchmark::State& state) {
    auto f = zfr::make_dedekind_quadratic(-4, "zeta_chi4");
    Complex s{1.01, static_cast<double>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(zfr::l_value(f, s));
    }
}
BENCHMARK(BM_LValueProduct)->Arg(5)->Arg(30);

static void BM_LogDerivAnalytic(benchmark::State& state) {
    auto f = zfr::make_dedekind_quadratic(-4, "zeta_chi4");
    Complex s{1.05, 12.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(zfr::log_deriv(f, s));
    }
}
BENCHMARK(BM_LogDerivAnalytic);

static void BM_LogDerivSeries(benchmark::State& state) {
    auto f = zfr::make_zeta();
    Complex s{3.5, 4.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(zfr::log_deriv(f, s));
    }
}
BENCHMARK(BM_LogDerivSeries);

static void BM_CauchyDerivative(benchmark::State& state) {
    auto f = zfr::make_zeta();
    zfr::EvalConfig cfg;
    Complex s{1.5, 8.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(zfr::cauchy_derivative(
            [&](Complex z) { return zfr::l_value(f, z, cfg); }, s, 0.05, 1e-9));
    }
}
BENCHMARK(BM_CauchyDerivative);
