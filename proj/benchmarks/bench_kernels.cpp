#include <benchmark/benchmark.h>

#include "hamtiles/catalog.hpp"
#include "hamtiles/enumerate.hpp"
#include "hamtiles/equivalence.hpp"
#include "hamtiles/tiling.hpp"

using namespace hamtiles;

namespace {

void BM_FindComplementBall7(benchmark::State& state) {
    const Tile d = normalizedTile(7, {});
    for (auto _ : state) {
        auto cert = findComplement(d, 7);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_FindComplementBall7);

void BM_RejectNonTileRank6(benchmark::State& state) {
    // weight-4 extra point: no complement exists
    const Point s[] = {unitVector(1) | unitVector(2) | unitVector(3) | unitVector(4)};
    const Tile d = normalizedTile(6, s);
    for (auto _ : state) {
        auto cert = findComplement(d, 6);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_RejectNonTileRank6);

void BM_CanonicalFormRank6(benchmark::State& state) {
    const Point s[] = {unitVector(2) | unitVector(4) | unitVector(6)};
    const Tile d = normalizedTile(6, s);
    for (auto _ : state) {
        auto canon = canonicalForm(d);
        benchmark::DoNotOptimize(canon);
    }
}
BENCHMARK(BM_CanonicalFormRank6);

void BM_EnumerateExhaustive(benchmark::State& state) {
    const int rank = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto tiles = enumerateExhaustive(rank);
        benchmark::DoNotOptimize(tiles);
    }
}
BENCHMARK(BM_EnumerateExhaustive)->Arg(4)->Arg(5)->Arg(6);

void BM_PartitionRank5(benchmark::State& state) {
    const auto tiles = enumerateByCases(5);
    for (auto _ : state) {
        auto classes = partitionClasses(tiles);
        benchmark::DoNotOptimize(classes);
    }
}
BENCHMARK(BM_PartitionRank5);

void BM_VerifyCatalog(benchmark::State& state) {
    for (auto _ : state) {
        auto report = verifyCatalog(builtinCatalog());
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_VerifyCatalog);

} // namespace

BENCHMARK_MAIN();
