#include <random>

#include <benchmark/benchmark.h>

#include "bohrlab/blaschke.hpp"
#include "bohrlab/extremal.hpp"
#include "bohrlab/majorants.hpp"
#include "bohrlab/radius.hpp"

namespace {

using namespace bohrlab;

void BM_BlaschkeTaylor(benchmark::State& state) {
    std::mt19937_64 rng(7);
    BlaschkeSpec spec = random_blaschke_spec(rng);
    int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(blaschke_taylor(spec, order));
    }
}
BENCHMARK(BM_BlaschkeTaylor)->Arg(64)->Arg(200);

void BM_CesaroMajorant(benchmark::State& state) {
    CoefficientSeries s = extremal_coeffs({0.99, 0.5}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cesaro_majorant(s, 0.5, 1e-9));
    }
}
BENCHMARK(BM_CesaroMajorant)->Arg(128)->Arg(512);

void BM_RadiusBernardi(benchmark::State& state) {
    RadiusProblem p = RadiusProblem::bernardi(1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(radius_for(p));
    }
}
BENCHMARK(BM_RadiusBernardi);

void BM_SweepMargins(benchmark::State& state) {
    std::vector<double> a_grid{0.9, 0.99, 0.999, 0.9999};
    std::vector<double> rho_grid;
    for (int i = 1; i <= 16; ++i) rho_grid.push_back(0.04 * i);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sweep_margins(BoundKind::cesaro(), 0.0, a_grid, rho_grid));
    }
}
BENCHMARK(BM_SweepMargins);

}  // namespace

BENCHMARK_MAIN();
