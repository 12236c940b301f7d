#include <benchmark/benchmark.h>

#include "voam/genus2.hpp"
#include "voam/lattice.hpp"
#include "voam/mlde.hpp"
#include "voam/quasimodular.hpp"
#include "voam/virasoro.hpp"

using namespace voam;

static void BM_QSeriesMul(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    QSeries a = eta_inverse(N), b = eisenstein_qexp(4, N);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_QSeriesMul)->Arg(50)->Arg(200);

static void BM_KacDet(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kac_det(n));
}
BENCHMARK(BM_KacDet)->Arg(4)->Arg(6);

static void BM_LogDet(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(logdet_series(N, N));
}
BENCHMARK(BM_LogDet)->Arg(4)->Arg(6)->Arg(8);

static void BM_E8Theta(benchmark::State& state) {
    EvenLattice e8 = e8_lattice();
    int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(shell_counts(e8, N));
}
BENCHMARK(BM_E8Theta)->Arg(4)->Arg(8);

static void BM_MLDE(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solve_mlde2(Rational(8), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MLDE)->Arg(20)->Arg(100);

BENCHMARK_MAIN();
