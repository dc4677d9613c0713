#include <benchmark/benchmark.h>

#include "hsg/hypgeom.hpp"
#include "hsg/koenigs.hpp"

namespace {

const hsg::HerglotzTriplet kGaussian{0.0, 1.0, hsg::Measure::gaussian(1.0, 0.5)};
const hsg::HerglotzTriplet kInverse{0.0, 0.0, hsg::Measure::atom(0.0, 1.0)};

void BM_EvalGAtom(benchmark::State& state) {
    hsg::Complex z{0.3, 1.7};
    for (auto _ : state) benchmark::DoNotOptimize(hsg::eval_G(kInverse, z));
}
BENCHMARK(BM_EvalGAtom);

void BM_EvalGGaussian(benchmark::State& state) {
    hsg::Complex z{0.3, 1.7};
    for (auto _ : state) benchmark::DoNotOptimize(hsg::eval_G(kGaussian, z));
}
BENCHMARK(BM_EvalGGaussian);

void BM_OrbitInverse(benchmark::State& state) {
    const auto schedule = hsg::Schedule::geometric(static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hsg::integrate_orbit(kInverse, hsg::kI, schedule));
}
BENCHMARK(BM_OrbitInverse)->Arg(100)->Arg(100000000)->Unit(benchmark::kMillisecond);

void BM_OrbitGaussian(benchmark::State& state) {
    const auto schedule = hsg::Schedule::geometric(1e4);
    for (auto _ : state) benchmark::DoNotOptimize(hsg::integrate_orbit(kGaussian, hsg::kI, schedule));
}
BENCHMARK(BM_OrbitGaussian)->Unit(benchmark::kMillisecond);

void BM_DistH(benchmark::State& state) {
    hsg::Complex z{0.3, 1.7}, w{-4.0, 1e-3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(hsg::dist_H(z, w));
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_DistH);

void BM_KoenigsParabolic(benchmark::State& state) {
    const auto chart = hsg::make_chart(kGaussian);
    const hsg::Complex z{2.0, 0.5};
    for (auto _ : state) benchmark::DoNotOptimize(hsg::koenigs_parabolic(kGaussian, chart, z));
}
BENCHMARK(BM_KoenigsParabolic)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
