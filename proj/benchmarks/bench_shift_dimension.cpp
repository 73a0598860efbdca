#include <benchmark/benchmark.h>

#include <random>

#include "shiftdim/grid_oracle.hpp"
#include "shiftdim/json_io.hpp"
#include "shiftdim/shift_dimension.hpp"

namespace sd = shiftdim;

namespace {

sd::IntervalModule staircase(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> step(1, 3);
    std::vector<sd::Degree> gens;
    gens.reserve(n);
    std::int64_t a = 0;
    auto b = static_cast<std::int64_t>(4 * n);
    for (std::size_t k = 0; k < n; ++k) {
        gens.push_back({a, b});
        a += step(rng);
        b -= step(rng);
    }
    return sd::IntervalModule(2, std::move(gens));
}

void BM_ShiftDimension2d(benchmark::State& state) {
    const auto m = staircase(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(sd::shift_dimension_2d(m, {5, 5}));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ShiftDimension2d)->RangeMultiplier(10)->Range(1000, 100000)->Complexity(benchmark::oN);

void BM_ShiftDimension2dFromBelow(benchmark::State& state) {
    const auto m = staircase(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(sd::shift_dimension_2d(m, {5, 5}, sd::ClusterOrder::FromBelow));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ShiftDimension2dFromBelow)->RangeMultiplier(10)->Range(1000, 100000)->Complexity(benchmark::oN);

void BM_StableRankCurve(benchmark::State& state) {
    const auto m = staircase(static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(sd::stable_rank_curve(m, {1, 1}));
}
BENCHMARK(BM_StableRankCurve)->Arg(100)->Arg(1000);

void BM_QuiverOracleCurve(benchmark::State& state) {
    const auto g = std::get<sd::GridModule>(
        sd::module_from_json(sd::read_json_file(std::string(SHIFTDIM_FIXTURE_DIR) + "/indecomposable_grid.json")));
    for (auto _ : state) benchmark::DoNotOptimize(sd::oracle_curve(g, {2, 1}));
}
BENCHMARK(BM_QuiverOracleCurve)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
