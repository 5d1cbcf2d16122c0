#include <benchmark/benchmark.h>

#include <random>

#include "mcgkit/farey.hpp"
#include "mcgkit/verifier.hpp"

namespace {

using namespace mcg;

struct CheckFixture {
    TwistTable table;
    std::vector<Relator> rels;
    explicit CheckFixture(int g) : table(load_twist_table(g)), rels(presentation("G_full", g).relators) {}
};

const CheckFixture& check_fixture(int g) {
    static std::map<int, CheckFixture> cache;
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, CheckFixture(g)).first;
    return it->second;
}

void BM_CheckSerial(benchmark::State& state) {
    const auto& f = check_fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_relators_serial(f.rels, f.table, Rep::Pi1));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(f.rels.size()));
}
BENCHMARK(BM_CheckSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CheckParallel(benchmark::State& state) {
    const auto& f = check_fixture(static_cast<int>(state.range(0)));
    int jobs = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(check_relators_parallel(f.rels, f.table, Rep::Pi1, jobs));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(f.rels.size()));
}
BENCHMARK(BM_CheckParallel)->Args({3, 1})->Args({3, 2})->Args({3, 4})->Args({4, 4})->Unit(benchmark::kMillisecond);

std::vector<farey::Path> farey_paths(std::size_t n) {
    std::mt19937_64 rng(42);
    std::vector<farey::Path> paths;
    for (std::size_t i = 0; i < n; ++i) paths.push_back(farey::random_closed_path(rng, 40, 60));
    return paths;
}

void BM_FareySerial(benchmark::State& state) {
    auto paths = farey_paths(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(farey::reduce_batch_serial(paths));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FareySerial)->Arg(1000)->Arg(10000);

void BM_FareyParallel(benchmark::State& state) {
    auto paths = farey_paths(static_cast<std::size_t>(state.range(0)));
    int jobs = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(farey::reduce_batch_parallel(paths, jobs));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FareyParallel)->Args({1000, 2})->Args({10000, 2})->Args({10000, 4});

}  // namespace

BENCHMARK_MAIN();
