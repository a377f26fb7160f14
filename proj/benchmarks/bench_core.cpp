#include <benchmark/benchmark.h>

#include <cmath>

#include "krylov2d/ensemble.hpp"
#include "krylov2d/estimate.hpp"
#include "krylov2d/krylov.hpp"
#include "krylov2d/lattice.hpp"

using namespace krylov2d;

namespace {

void BM_ApplyHamiltonian(benchmark::State& state) {
    const int radius = static_cast<int>(state.range(0));
    const PotentialField field(1.0, 7, 0);
    const DiamondVector omega = field.materialize(radius + 1);
    DiamondVector psi(radius);
    std::size_t t = 0;
    for (double& x : psi.data()) x = static_cast<double>(++t % 13) - 6.0;
    for (auto _ : state) {
        DiamondVector out = apply_hamiltonian(psi, omega);
        benchmark::DoNotOptimize(out.data().data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(psi.size()));
}
BENCHMARK(BM_ApplyHamiltonian)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

void BM_PotentialMaterialize(benchmark::State& state) {
    const int radius = static_cast<int>(state.range(0));
    const PotentialField field(1.0, 3, 0);
    for (auto _ : state) {
        DiamondVector omega = field.materialize(radius);
        benchmark::DoNotOptimize(omega.data().data());
    }
}
BENCHMARK(BM_PotentialMaterialize)->Arg(100)->Arg(400);

void BM_KrylovRecurrence(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PotentialField field(1.0, 11, 0);
    for (auto _ : state) {
        DistanceSeries series = run_krylov(field, n, OrthMode::three_term());
        benchmark::DoNotOptimize(series.terms.data());
    }
}
BENCHMARK(BM_KrylovRecurrence)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_FullGramSchmidt(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PotentialField field(1.0, 11, 0);
    for (auto _ : state) {
        DistanceSeries series = run_krylov(field, n, OrthMode::full_gram_schmidt());
        benchmark::DoNotOptimize(series.terms.data());
    }
}
BENCHMARK(BM_FullGramSchmidt)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_FitIntercept(benchmark::State& state) {
    DistanceSeries series;
    for (int k = 0; k <= 400; ++k)
        series.terms.push_back(
            {k, 0.0, 0.0, k == 0 ? 1.0 : 0.2 + 0.5 * std::pow(static_cast<double>(k), -0.7)});
    const std::vector<double> grid = default_gamma_grid();
    for (auto _ : state) {
        FitResult fit = fit_intercept(series, grid, 200);
        benchmark::DoNotOptimize(&fit);
    }
}
BENCHMARK(BM_FitIntercept);

}  // namespace

BENCHMARK_MAIN();
