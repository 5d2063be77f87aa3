#include <benchmark/benchmark.h>

#include "dilworth/exact_params.hpp"
#include "dilworth/families.hpp"
#include "dilworth/fractional.hpp"
#include "dilworth/products.hpp"

using namespace dilworth;

namespace {

Digraph fam(FamilyKind kind, int param = 0) { return generate({kind, param}); }

void BM_AndPower(benchmark::State& state) {
    const Digraph g = fam(FamilyKind::alt_cycle_complement);
    const int t = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(and_power(g, t));
    }
}
BENCHMARK(BM_AndPower)->DenseRange(1, 4);

void BM_ChromaticMirsky(benchmark::State& state) {
    const Digraph g = and_power(fam(FamilyKind::single_edge), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(chromatic_number(g, Budget(60)));
    }
}
BENCHMARK(BM_ChromaticMirsky)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ChromaticPentagonSquare(benchmark::State& state) {
    const Digraph g = and_power(fam(FamilyKind::undirected_cycle, 5), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chromatic_number(g, Budget(60)));
    }
}
BENCHMARK(BM_ChromaticPentagonSquare)->Unit(benchmark::kMillisecond);

void BM_IndependencePentagonSquare(benchmark::State& state) {
    const Digraph g = and_power(fam(FamilyKind::undirected_cycle, 5), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(independence_number(g, Budget(60)));
    }
}
BENCHMARK(BM_IndependencePentagonSquare)->Unit(benchmark::kMillisecond);

void BM_DichromaticA5cSquare(benchmark::State& state) {
    const Digraph g = and_power(fam(FamilyKind::alt_cycle_complement), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dichromatic_number(g, Budget(300)));
    }
}
BENCHMARK(BM_DichromaticA5cSquare)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_FractionalDichromaticTournament(benchmark::State& state) {
    const Digraph g = fam(FamilyKind::tournament, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fractional_dichromatic(g));
    }
}
BENCHMARK(BM_FractionalDichromaticTournament)->DenseRange(3, 9, 2)->Unit(benchmark::kMillisecond);

void BM_FractionalA5cSquare(benchmark::State& state) {
    const Digraph g = and_power(fam(FamilyKind::alt_cycle_complement), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fractional_dichromatic(g));
    }
}
BENCHMARK(BM_FractionalA5cSquare)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
