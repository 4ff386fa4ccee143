#include "mukai/nslattice.hpp"

#include <benchmark/benchmark.h>

using namespace mukai;

namespace {

void BM_SearchRank2(benchmark::State& state) {
    GramLattice lat({{0, 1}, {1, 0}}, {1, 16});
    for (auto _ : state) {
        auto res = search_classes(lat, 0, 1, 10);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_SearchRank2);

void BM_SearchRank3Bounded(benchmark::State& state) {
    GramLattice lat({{4, 0, 0}, {0, -2, 0}, {0, 0, -2}}, {1, 0, 0});
    for (auto _ : state) {
        auto res = search_classes(lat, 0, 4, state.range(0));
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_SearchRank3Bounded)->Arg(4)->Arg(8)->Arg(16);

void BM_CmpRationalSqrt(benchmark::State& state) {
    const Rational x = make_rational(10099, 1000);
    const Rational n = Rational(104);
    for (auto _ : state) {
        auto c = cmp_rational_sqrt(x, n);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CmpRationalSqrt);

} // namespace

BENCHMARK_MAIN();
