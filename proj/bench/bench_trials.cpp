#include <schatten/estimator.hpp>
#include <schatten/experiments.hpp>
#include <schatten/sketch.hpp>

#include <benchmark/benchmark.h>

using namespace schatten;

static void BM_TrialsSerial(benchmark::State& state) {
	const auto s = geometric_spectrum(0.8, 100);
	const auto k = static_cast<std::size_t>(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(run_trials(s, 4, k, 64, 1, 0, TrialExecution::serial));
	state.SetItemsProcessed(state.iterations() * 64);
}

static void BM_TrialsParallel(benchmark::State& state) {
	const auto s = geometric_spectrum(0.8, 100);
	const auto k = static_cast<std::size_t>(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(run_trials(s, 4, k, 64, 1, 0, TrialExecution::parallel));
	state.SetItemsProcessed(state.iterations() * 64);
}

static void BM_ThetaHat(benchmark::State& state) {
	const auto k = static_cast<std::size_t>(state.range(0));
	const int p = static_cast<int>(state.range(1));
	RngStream rng(3, 0);
	const GramMatrix z = gram(gaussian_sketch_diag(identity_spectrum(100), k, rng));
	for (auto _ : state)
		benchmark::DoNotOptimize(theta_hat(z, p));
}

BENCHMARK(BM_TrialsSerial)->Arg(40)->Arg(160)->Arg(640)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsParallel)->Arg(40)->Arg(160)->Arg(640)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaHat)->Args({80, 3})->Args({320, 6})->Args({1280, 10})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
