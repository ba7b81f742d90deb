#include <benchmark/benchmark.h>

#include "dvfactor/cli/parser.hpp"
#include "dvfactor/criteria.hpp"
#include "dvfactor/families.hpp"
#include "dvfactor/newton.hpp"
#include "dvfactor/oracle.hpp"

using namespace dvfactor;

static void BM_NewtonIndex(benchmark::State& state) {
    const auto v = DiscreteValuation::padic(2);
    const auto profile = valuation_profile(random_valued_poly(7, static_cast<std::size_t>(state.range(0)), 1000, 2), v);
    for (auto _ : state) benchmark::DoNotOptimize(newton_index(profile));
}
BENCHMARK(BM_NewtonIndex)->Arg(8)->Arg(64)->Arg(512);

static void BM_Analyze(benchmark::State& state) {
    const auto profile = valuation_profile(family_X(2, static_cast<std::size_t>(state.range(0))),
                                           DiscreteValuation::padic(2));
    for (auto _ : state) benchmark::DoNotOptimize(analyze(profile));
}
BENCHMARK(BM_Analyze)->Arg(5)->Arg(33)->Arg(257);

static void BM_KroneckerProduct(benchmark::State& state) {
    // (x^2 + 2)(x^3 + 2x + 2), then two degree-4 irreducibles.
    const IntPoly f = state.range(0) == 0 ? IntPoly{2, 0, 1} * IntPoly{2, 2, 0, 1}
                                          : IntPoly{2, 0, 0, 0, 1} * IntPoly{1, 1, 0, 0, 1};
    for (auto _ : state) benchmark::DoNotOptimize(kronecker_factor(f));
}
BENCHMARK(BM_KroneckerProduct)->Arg(0)->Arg(1);

static void BM_KroneckerIrreducible(benchmark::State& state) {
    const IntPoly f = family_X(2, 7);
    for (auto _ : state) benchmark::DoNotOptimize(kronecker_factor(f));
}
BENCHMARK(BM_KroneckerIrreducible);

static void BM_Parse(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cli::parse_bi_poly("x^4 + 2 + (x^4 + x + 1)*y + y^9"));
}
BENCHMARK(BM_Parse);

BENCHMARK_MAIN();
