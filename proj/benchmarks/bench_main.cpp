#include "shy/connectivity.hpp"
#include "shy/constructions.hpp"
#include "shy/enumeration.hpp"
#include "shy/maps.hpp"
#include "shy/oracles.hpp"
#include "shy/verification.hpp"

#include <benchmark/benchmark.h>

using namespace shy;

namespace {

DigitalImage square(int side, int u)
{
    std::vector<Point> pts;
    for (int x = 0; x < side; ++x)
        for (int y = 0; y < side; ++y)
            pts.push_back(Point{x, y});
    return DigitalImage(pts, Adjacency::cu(u));
}

// Projection of a side x side square onto its first coordinate.
DigitalFunction projection(int side)
{
    const auto sq = share(square(side, 2));
    const auto line = share(interval(0, side - 1));
    std::vector<std::size_t> v;
    for (const auto& p : sq->points())
        v.push_back(static_cast<std::size_t>(p[0]));
    return DigitalFunction(sq, line, v);
}

void bm_image_construction(benchmark::State& state)
{
    const auto side = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(square(side, 2).edge_count());
    state.SetComplexityN(side * side);
}
BENCHMARK(bm_image_construction)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void bm_components(benchmark::State& state)
{
    const auto img = square(static_cast<int>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(connected_components(img).size());
}
BENCHMARK(bm_components)->RangeMultiplier(2)->Range(4, 64);

void bm_connected_subsets(benchmark::State& state)
{
    const auto img = square(3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        std::size_t n = 0;
        for_each_connected_subset(img, img.size(), [&](std::span<const std::size_t>) {
            ++n;
            return true;
        });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(bm_connected_subsets)->Arg(1)->Arg(2);

void bm_is_shy(benchmark::State& state)
{
    const auto f = projection(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_shy(f));
}
BENCHMARK(bm_is_shy)->RangeMultiplier(2)->Range(4, 64);

void bm_shyness_oracle(benchmark::State& state)
{
    const auto f = projection(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(shyness_oracle(f));
}
BENCHMARK(bm_shyness_oracle)->DenseRange(3, 6);

void bm_enumerate_shy(benchmark::State& state)
{
    const auto x = share(interval(0, static_cast<int>(state.range(0))));
    const auto y = share(interval(0, 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_maps({x, y, MapFilter::shy}));
}
BENCHMARK(bm_enumerate_shy)->DenseRange(4, 10, 2);

void bm_verify_suite(benchmark::State& state)
{
    const auto names = suite_names();
    const auto& name = names[static_cast<std::size_t>(state.range(0))];
    state.SetLabel(name);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_suite(name).passed);
}
BENCHMARK(bm_verify_suite)->DenseRange(0, 10)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
