#include <benchmark/benchmark.h>

#include <ncres/dsl.hpp>
#include <ncres/nc_torus.hpp>
#include <ncres/random_symbol.hpp>
#include <ncres/residue_calculus.hpp>

namespace
{

ncres::ClassicalSymbol classical(int dim, int depth, std::uint64_t seed = 7)
{
    ncres::RandomSymbolParams p;
    p.dim = dim;
    p.order = 0;
    p.depth = depth;
    return ncres::random_classical_symbol(seed, p);
}

ncres::NCSymbol noncommutative(int depth, std::uint64_t seed = 7)
{
    ncres::RandomSymbolParams p;
    p.order = 0;
    p.depth = depth;
    p.theta = ncres::Rational(1, 3);
    return ncres::random_nc_symbol(seed, p);
}

void BM_compose(benchmark::State &state)
{
    const int dim = static_cast<int>(state.range(0));
    const int depth = static_cast<int>(state.range(1));
    const auto a = classical(dim, depth, 1);
    const auto b = classical(dim, depth, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ncres::compose(a, b));
    }
}
BENCHMARK(BM_compose)->Args({2, 2})->Args({2, 4})->Args({3, 3})->Args({4, 4})->Unit(benchmark::kMillisecond);

void BM_residue(benchmark::State &state)
{
    const int dim = static_cast<int>(state.range(0));
    const auto a = classical(dim, dim + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ncres::residue(a));
    }
}
BENCHMARK(BM_residue)->DenseRange(2, 5);

void BM_trace_defect(benchmark::State &state)
{
    const auto pair = ncres::random_residue_pair(3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ncres::trace_defect(pair.first, pair.second));
    }
}
BENCHMARK(BM_trace_defect)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_nc_compose(benchmark::State &state)
{
    const int depth = static_cast<int>(state.range(0));
    const auto a = noncommutative(depth, 1);
    const auto b = noncommutative(depth, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ncres::nc_compose(a, b));
    }
}
BENCHMARK(BM_nc_compose)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_nc_residue_defect(benchmark::State &state)
{
    const auto pair = ncres::random_nc_residue_pair(5, ncres::Rational(2, 5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ncres::nc_residue_defect(pair.first, pair.second));
    }
}
BENCHMARK(BM_nc_residue_defect)->Unit(benchmark::kMillisecond);

void BM_format_parse(benchmark::State &state)
{
    const ncres::AnySymbol s = noncommutative(4);
    for (auto _ : state) {
        const auto text = ncres::format_symbol(s);
        benchmark::DoNotOptimize(ncres::parse_symbol(text));
    }
}
BENCHMARK(BM_format_parse);

void BM_json_round_trip(benchmark::State &state)
{
    const ncres::AnySymbol s = classical(3, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ncres::parse_json_symbol(ncres::to_json(s)));
    }
}
BENCHMARK(BM_json_round_trip);

} // namespace

BENCHMARK_MAIN();
