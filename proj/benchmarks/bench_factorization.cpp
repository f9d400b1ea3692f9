#include "motionfact/synthesis.hpp"
#include "support/generators.hpp"

#include <benchmark/benchmark.h>

using namespace motionfact;

namespace {

MotionPoly generic_cubic() {
    testing::Rng rng(1);
    const auto hs = rng.distinct_norm_rotations(3);
    DQPoly prod = DQPoly::constant(DualQuaternion::one());
    for (const auto& h : hs) prod = prod * DQPoly::linear_factor(h);
    return MotionPoly::certify(prod);
}

ConstraintInput darboux_input() {
    return ConstraintInput::validated(
        QPoly::linear_factor(Quaternion(0, Rat(7, 9), Rat(-4, 9), Rat(4, 9))),
        RPoly{Rat(1), Rat(0), Rat(1)}, RPoly{Rat(-3, 4), Rat(5, 2)});
}

void BM_NormDecomposition(benchmark::State& state) {
    const MotionPoly c = generic_cubic();
    const RPoly norm = c.norm_poly();
    for (auto _ : state) {
        auto factors = quadratic_factor_decomposition(norm);
        benchmark::DoNotOptimize(factors);
    }
}
BENCHMARK(BM_NormDecomposition);

void BM_AllFactorizations(benchmark::State& state) {
    const MotionPoly c = generic_cubic();
    for (auto _ : state) {
        auto all = all_factorizations(c);
        benchmark::DoNotOptimize(all);
    }
}
BENCHMARK(BM_AllFactorizations);

void BM_Darboux7R(benchmark::State& state) {
    const ConstraintInput in = darboux_input();
    for (auto _ : state) {
        Linkage l = darboux_7r(in);
        benchmark::DoNotOptimize(l);
    }
}
BENCHMARK(BM_Darboux7R);

void BM_ClosureCheck(benchmark::State& state) {
    const Linkage l = darboux_7r(darboux_input());
    std::vector<Rat> samples;
    for (int k = 0; k < 20; ++k) samples.push_back(Rat(2 * k - 19, 2));
    for (auto _ : state) {
        auto report = closure_check(l, samples);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_ClosureCheck);

} // namespace

BENCHMARK_MAIN();
