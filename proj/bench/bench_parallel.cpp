#include <benchmark/benchmark.h>
#include <omp.h>

#include "osp/characters.hpp"
#include "osp/crystal.hpp"

using namespace osp;

namespace {

const PShape kShape{G::c, {2, 1}, 2};
const Alphabet kAlpha = standard_alphabet(AlphabetKind::JSuper, 2, 2);
constexpr int kDegree = 7;

void BM_enumerate_parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(enumerate(kShape, kAlpha, kDegree, true));
    st.counters["threads"] = omp_get_max_threads();
}

void BM_enumerate_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_serial(kShape, kAlpha, kDegree));
}

void BM_graph_parallel(benchmark::State& st) {
    auto H = highest_element(kShape, kAlpha);
    for (auto _ : st) benchmark::DoNotOptimize(build_graph(H, kAlpha, Conv::Super, kDegree, true));
    st.counters["threads"] = omp_get_max_threads();
}

void BM_graph_serial(benchmark::State& st) {
    auto H = highest_element(kShape, kAlpha);
    for (auto _ : st) benchmark::DoNotOptimize(build_graph(H, kAlpha, Conv::Super, kDegree, false));
}

}  // namespace

BENCHMARK(BM_enumerate_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_graph_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_graph_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
