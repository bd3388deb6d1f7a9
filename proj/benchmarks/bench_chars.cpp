#include <benchmark/benchmark.h>

#include "zfr/dirichlet.hpp"

static void BM_CharactersMod(benchmark::State& state) {
    std::int64_t q = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zfr::characters_mod(q));
    }
    state.SetComplexityN(q);
}
BENCHMARK(BM_CharactersMod)->Arg(240)->Arg(5040)->Arg(100000)->Complexity();

static void BM_CharacterEval(benchmark::State& state) {
    auto chi = zfr::kronecker_character(-163);
    std::int64_t n = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(chi(n));
        n = (n + 7) % 100003;
    }
}
BENCHMARK(BM_CharacterEval);

static void BM_ConductorOf(benchmark::State& state) {
    auto chars = zfr::characters_mod(360);
    for (auto _ : state) {
        for (const auto& chi : chars) benchmark::DoNotOptimize(zfr::conductor_of(chi));
    }
}
BENCHMARK(BM_ConductorOf);
