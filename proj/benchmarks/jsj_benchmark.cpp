#include <benchmark/benchmark.h>

#include "coxjsj/jsj.hpp"
#include "coxjsj/oracle.hpp"
#include "coxjsj/splitters.hpp"
#include "support/fixtures.hpp"

namespace {

void BM_JsjStar(benchmark::State& state) {
    auto d = fixtures::star();
    for (auto _ : state) {
        benchmark::DoNotOptimize(coxjsj::jsj(d).final_stage().vertex_count());
    }
}
BENCHMARK(BM_JsjStar);

void BM_JsjBridgedBlocks(benchmark::State& state) {
    auto d = fixtures::cycle8();
    for (auto _ : state) {
        benchmark::DoNotOptimize(coxjsj::jsj(d).final_stage().vertex_count());
    }
}
BENCHMARK(BM_JsjBridgedBlocks);

void BM_JsjSurfaceExample(benchmark::State& state) {
    auto d = fixtures::e5();
    for (auto _ : state) {
        benchmark::DoNotOptimize(coxjsj::jsj(d).final_stage().vertex_count());
    }
}
BENCHMARK(BM_JsjSurfaceExample);

void BM_MinimalSplitters(benchmark::State& state) {
    auto d = fixtures::cycle8();
    for (auto _ : state) {
        benchmark::DoNotOptimize(coxjsj::minimal_splitters(*d, d->all_generators()).size());
    }
}
BENCHMARK(BM_MinimalSplitters);

void BM_SpectrumClassify(benchmark::State& state) {
    auto d = fixtures::e5();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            coxjsj::gram_spectrum_classify(*d, d->all_generators()));
    }
}
BENCHMARK(BM_SpectrumClassify);

}  // namespace

BENCHMARK_MAIN();
