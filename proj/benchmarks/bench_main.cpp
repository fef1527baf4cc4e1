#include <benchmark/benchmark.h>

#include <random>

#include "lhdim/lhdim.hpp"

using namespace lhdim;

namespace {

PointCloud random_cloud(std::size_t n, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> coords(n * d);
    for (auto& x : coords) x = unif(rng);
    return PointCloud(std::move(coords), d);
}

PointCloud circle_cloud(std::size_t n) {
    std::vector<double> coords;
    coords.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * 3.14159265358979323846 * static_cast<double>(i) /
                         static_cast<double>(n);
        coords.push_back(std::cos(t));
        coords.push_back(std::sin(t));
    }
    return PointCloud(std::move(coords), 2);
}

void BM_BuildRips(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    PointCloud cloud = random_cloud(n, 3, 11);
    std::vector<Index> verts(n);
    for (std::size_t i = 0; i < n; ++i) verts[i] = static_cast<Index>(i);
    for (auto _ : state) {
        auto cx = build_rips(cloud, verts, 0.35, 3);
        benchmark::DoNotOptimize(cx.simplices.data());
    }
}
BENCHMARK(BM_BuildRips)->Arg(50)->Arg(100)->Arg(200);

void BM_Reduce(benchmark::State& state) {
    PointCloud cloud = circle_cloud(static_cast<std::size_t>(state.range(0)));
    ParamSchedule s = manual_schedule(0.15, 0.5, 0.9, 1.4, 1);
    LocalPairComplex pair = build_local_pair(cloud, cloud.point(0), s);
    BoundaryMatrixZ2 mat = assemble_boundary(pair);
    for (auto _ : state) {
        auto red = reduce(mat);
        benchmark::DoNotOptimize(red.low_to_col.data());
    }
}
BENCHMARK(BM_Reduce)->Arg(60)->Arg(120)->Arg(240);

void BM_EstimateLocal(benchmark::State& state) {
    PointCloud cloud = circle_cloud(static_cast<std::size_t>(state.range(0)));
    ParamSchedule s = manual_schedule(0.15, 0.5, 0.9, 1.4, 1);
    for (auto _ : state) {
        auto res = estimate_local(cloud, Index{0}, s);
        benchmark::DoNotOptimize(res.profile.ranks.data());
    }
}
BENCHMARK(BM_EstimateLocal)->Arg(60)->Arg(120);

}  // namespace

BENCHMARK_MAIN();
