#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "vnum/assoc.hpp"
#include "vnum/kernels.hpp"
#include "vnum/structure.hpp"
#include "vnum/vnumber.hpp"

using namespace vnum;

namespace {

Ring bench_ring() {
    static Ring r = AmbientRing::make({"x1", "x2", "x3", "x4", "x5", "x6"});
    return r;
}

// Sorted, deduplicated corpus; the kernels require canonical input order.
std::vector<Monomial> random_corpus(std::size_t count, std::uint64_t seed) {
    Ring r = bench_ring();
    std::mt19937_64 eng(seed);
    std::vector<Monomial> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Exponent> e(r->size());
        for (auto& x : e) x = static_cast<Exponent>(eng() % 7);
        out.emplace_back(r, e);
    }
    std::sort(out.begin(), out.end(),
              static_cast<bool (*)(const Monomial&, const Monomial&)>(canonical_less));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MonomialIdeal cycle5_ideal() {
    Graph g;
    g.vertices = {"x1", "x2", "x3", "x4", "x5"};
    g.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
    return edge_ideal(g);
}

void BM_nondominated_serial(benchmark::State& state) {
    auto corpus = random_corpus(static_cast<std::size_t>(state.range(0)), 17);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::nondominated_serial(corpus));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(corpus.size()));
}

void BM_nondominated_parallel(benchmark::State& state) {
    auto corpus = random_corpus(static_cast<std::size_t>(state.range(0)), 17);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::nondominated_parallel(corpus));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(corpus.size()));
}

void BM_ass_serial(benchmark::State& state) {
    MonomialIdeal I = power(cycle5_ideal(), static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ass_serial(I));
}

void BM_ass_parallel(benchmark::State& state) {
    MonomialIdeal I = power(cycle5_ideal(), static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ass_parallel(I));
}

void BM_v_function_cycle5(benchmark::State& state) {
    MonomialIdeal I = cycle5_ideal();
    for (auto _ : state) {
        clear_caches();
        benchmark::DoNotOptimize(v_function(I, static_cast<int>(state.range(0))));
    }
}

} // namespace

BENCHMARK(BM_nondominated_serial)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 15);
BENCHMARK(BM_nondominated_parallel)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 15);
BENCHMARK(BM_ass_serial)->Arg(2)->Arg(3);
BENCHMARK(BM_ass_parallel)->Arg(2)->Arg(3);
BENCHMARK(BM_v_function_cycle5)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
