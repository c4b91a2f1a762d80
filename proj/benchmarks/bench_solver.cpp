#include <benchmark/benchmark.h>

#include <cstddef>
#include <utility>

#include "fracsl/fracsl.hpp"

using namespace fracsl;

namespace {

ProblemSpec oscillator(double alpha) {
    return make_problem(alpha, -3.0, PotentialExpr::constant(0.0), 1.0, 1.0);
}

void BM_WeightTables(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto grid = make_grid(n, 1.0);
    for (auto _ : state) {
        auto ws = WeightSet::build(0.5, grid);
        benchmark::DoNotOptimize(ws.left(n, 0));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WeightTables)->Arg(256)->Arg(1024)->Arg(4096)->Complexity();

void BM_CompositionMatrix(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto ws = WeightSet::build(0.5, make_grid(n, 1.0));
    for (auto _ : state) {
        auto a = composition_matrix(ws);
        benchmark::DoNotOptimize(a(n, n));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CompositionMatrix)->Arg(128)->Arg(256)->Arg(512)->Complexity();

void BM_Assemble(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto spec = oscillator(0.5);
    auto grid = make_grid(n, 1.0);
    auto composition = composition_matrix(WeightSet::build(0.5, grid));
    for (auto _ : state) {
        auto sys = assemble(spec, grid, composition);
        benchmark::DoNotOptimize(sys.rhs.back());
    }
}
BENCHMARK(BM_Assemble)->Arg(256)->Arg(512);

void BM_LupSolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto spec = oscillator(0.5);
    auto grid = make_grid(n, 1.0);
    auto sys = assemble(spec, grid, composition_matrix(WeightSet::build(0.5, grid)));
    for (auto _ : state) {
        Matrix copy = sys.matrix;
        auto x = lup_solve(lup_decompose(std::move(copy)), sys.rhs);
        benchmark::DoNotOptimize(x.back());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LupSolve)->Arg(128)->Arg(256)->Arg(512)->Complexity();

void BM_SolveEndToEnd(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto spec = oscillator(static_cast<double>(state.range(1)) / 100.0);
    for (auto _ : state) {
        auto sol = solve_bvp(spec, n);
        benchmark::DoNotOptimize(sol.values[n / 2]);
    }
}
BENCHMARK(BM_SolveEndToEnd)
    ->Args({64, 50})
    ->Args({256, 50})
    ->Args({512, 50})
    ->Args({256, 30})
    ->Args({256, 100});

}  // namespace

BENCHMARK_MAIN();
