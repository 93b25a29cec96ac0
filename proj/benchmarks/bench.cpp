#include <benchmark/benchmark.h>

#include <numeric>

#include "twobridge/closed_form.hpp"
#include "twobridge/fox.hpp"
#include "twobridge/param.hpp"
#include "twobridge/walk.hpp"

using namespace twobridge;

namespace {

// a valid odd p near q/3 for the given q
Int pick_p(Int q) {
    for (Int p = q / 3 | 1; p < q; p += 2) {
        if (std::gcd(p, q) == 1) return p;
    }
    return 1;
}

void BM_MinkusFormula(benchmark::State& state) {
    Int q = state.range(0);
    auto param = new_param(pick_p(q), q);
    for (auto _ : state) {
        benchmark::DoNotOptimize(minkus_poly(param));
    }
}
BENCHMARK(BM_MinkusFormula)->Arg(100)->Arg(1000)->Arg(10000);

void BM_MinkusWalk(benchmark::State& state) {
    Int q = state.range(0);
    auto param = new_param(pick_p(q), q);
    for (auto _ : state) {
        benchmark::DoNotOptimize(poly_from_1d_visits(walk_1d_minkus(param)));
    }
}
BENCHMARK(BM_MinkusWalk)->Arg(100)->Arg(1000)->Arg(10000);

void BM_TwoVariableFormula(benchmark::State& state) {
    Int q = state.range(0) & ~Int{1};
    auto param = new_param(pick_p(q), q);
    for (auto _ : state) {
        benchmark::DoNotOptimize(two_variable_poly(param));
    }
}
BENCHMARK(BM_TwoVariableFormula)->Arg(100)->Arg(1000)->Arg(10000);

void BM_FoxOracle(benchmark::State& state) {
    Int q = state.range(0) & ~Int{1};
    auto param = new_param(pick_p(q), q);
    for (auto _ : state) {
        benchmark::DoNotOptimize(alexander_via_fox(param));
    }
}
BENCHMARK(BM_FoxOracle)->Arg(100)->Arg(400);

} // namespace

BENCHMARK_MAIN();
