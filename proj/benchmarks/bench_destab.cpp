#include "mukai/destab.hpp"

#include <benchmark/benchmark.h>

using namespace mukai;

namespace {

void BM_EnumerateDestabilizers(benchmark::State& state) {
    const long long s = state.range(0);
    PolarizedSurface surf(4 * s);
    const MukaiVector v{2, NumDivisorClass::pure_h(Rational(1)), rat(s)};
    EnumerateOptions opts;
    opts.max_rank = 4;
    for (auto _ : state) {
        auto cs = enumerate_destabilizers(v, surf, opts);
        benchmark::DoNotOptimize(cs);
    }
}
BENCHMARK(BM_EnumerateDestabilizers)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_EnumerateParallel(benchmark::State& state) {
    const long long s = 128;
    PolarizedSurface surf(4 * s);
    const MukaiVector v{2, NumDivisorClass::pure_h(Rational(1)), rat(s)};
    EnumerateOptions opts;
    opts.max_rank = 6;
    opts.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto cs = enumerate_destabilizers(v, surf, opts);
        benchmark::DoNotOptimize(cs);
    }
}
BENCHMARK(BM_EnumerateParallel)->Arg(1)->Arg(2)->Arg(4);

void BM_LemmaCaseTable(benchmark::State& state) {
    const long long s = state.range(0);
    for (auto _ : state) {
        auto rep = lemma_case_table(s % 2 == 0 ? 1 : 3, s);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_LemmaCaseTable)->Arg(8)->Arg(64)->Arg(256);

void BM_OxWall(benchmark::State& state) {
    OxWallOptions opts;
    opts.rk_max = 8;
    opts.beta_max = Rational(8);
    for (auto _ : state) {
        auto sols = ox_wall_solutions(state.range(0), opts);
        benchmark::DoNotOptimize(sols);
    }
}
BENCHMARK(BM_OxWall)->Arg(10)->Arg(42);

} // namespace
