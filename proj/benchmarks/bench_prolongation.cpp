#include <benchmark/benchmark.h>

#include <jetprolong/closed_form.hpp>
#include <jetprolong/combinatorics.hpp>
#include <jetprolong/faa_di_bruno.hpp>
#include <jetprolong/inductive.hpp>

using namespace jetprolong;

static void closed_scalar(benchmark::State &state)
{
    const int kappa = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(prolongation_closed_scalar(kappa));
    }
}
BENCHMARK(closed_scalar)->DenseRange(4, 10, 2);

static void closed_general(benchmark::State &state)
{
    const int kappa = static_cast<int>(state.range(0));
    const std::vector<int> ones(static_cast<std::size_t>(kappa), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(prolongation_closed({Dims(1, 1), 1, ones}));
    }
}
BENCHMARK(closed_general)->DenseRange(4, 8, 2);

// whole table up to kappa, so not directly comparable with a single closed-form entry
static void inductive_table(benchmark::State &state)
{
    const int kappa = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(prolong_inductive(Dims(1, 1), kappa));
    }
}
BENCHMARK(inductive_table)->DenseRange(4, 8, 2);

static void inductive_two_vars(benchmark::State &state)
{
    const int kappa = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(prolong_inductive(Dims(2, 2), kappa));
    }
}
BENCHMARK(inductive_two_vars)->DenseRange(2, 4, 1);

static void transversals(benchmark::State &state)
{
    const int w = static_cast<int>(state.range(0));
    const auto specs = weight_specs(w, SpecKind::faa);
    for (auto _ : state) {
        std::size_t total = 0;
        for (const auto &s : specs) {
            total += coset_transversal(s).size();
        }
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(transversals)->DenseRange(4, 9, 1);

static void faa_scalar(benchmark::State &state)
{
    const int kappa = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(faa_closed_scalar(kappa));
    }
}
BENCHMARK(faa_scalar)->DenseRange(4, 12, 4);

BENCHMARK_MAIN();
