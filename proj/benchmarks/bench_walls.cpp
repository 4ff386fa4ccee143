#include "mukai/walls.hpp"

#include <benchmark/benchmark.h>

using namespace mukai;

namespace {

void BM_NumericalWall(benchmark::State& state) {
    PolarizedSurface surf(32);
    const MukaiVector v{2, NumDivisorClass::pure_h(Rational(1)), Rational(8)};
    const MukaiVector w{1, NumDivisorClass::pure_h(make_rational(15, 32)), Rational(4)};
    for (auto _ : state) {
        auto wall = numerical_wall(v, w, surf);
        benchmark::DoNotOptimize(wall);
    }
}
BENCHMARK(BM_NumericalWall);

void BM_SampleWall(benchmark::State& state) {
    PolarizedSurface surf(32);
    const MukaiVector v{2, NumDivisorClass::pure_h(Rational(1)), Rational(8)};
    const MukaiVector ox{1, NumDivisorClass::pure_h(Rational(0)), Rational(1)};
    const auto wall = numerical_wall(v, ox, surf);
    for (auto _ : state) {
        auto pts = sample_wall(wall, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(pts);
    }
}
BENCHMARK(BM_SampleWall)->Arg(8)->Arg(64)->Arg(512);

void BM_CentralCharge(benchmark::State& state) {
    PolarizedSurface surf(32);
    const MukaiVector v{2, NumDivisorClass::pure_h(Rational(1)), Rational(8)};
    const StabilityPoint p{make_rational(-3, 7), make_rational(5, 9)};
    for (auto _ : state) {
        auto z = central_charge(p, v, surf);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_CentralCharge);

} // namespace
