#include <benchmark/benchmark.h>

#include "egyptian/enumerate.hpp"
#include "egyptian/signed_search.hpp"
#include "egyptian/topology.hpp"
#include "egyptian/unit_sum.hpp"

namespace {

using namespace egyptian;

Problem unit_problem(std::size_t n) {
    std::vector<NumeratorSet> nums;
    std::vector<DenominatorSet> dens;
    for (std::size_t i = 0; i < n; ++i) {
        nums.push_back(NumeratorSet({Rational(1)}));
        dens.push_back(DenominatorSet::naturals());
    }
    return Problem(std::move(nums), std::move(dens));
}

void BM_EnumerateHalf(benchmark::State& state) {
    Problem p = unit_problem(2);
    Rational c(1, 2);
    for (auto _ : state) {
        auto res = enumerate_representations(p, c);
        benchmark::DoNotOptimize(res.reps.size());
    }
}
BENCHMARK(BM_EnumerateHalf);

void BM_EnumerateThirtieth(benchmark::State& state) {
    Problem p = unit_problem(2);
    Rational c(1, 30);
    for (auto _ : state) {
        auto res = enumerate_representations(p, c);
        benchmark::DoNotOptimize(res.reps.size());
    }
}
BENCHMARK(BM_EnumerateThirtieth);

void BM_SignedHalf(benchmark::State& state) {
    Problem p = unit_problem(2);
    Rational c(1, 2);
    for (auto _ : state) {
        auto res = enumerate_signed(p, c);
        benchmark::DoNotOptimize(res.reps.size());
    }
}
BENCHMARK(BM_SignedHalf);

void BM_GapBelowHalf(benchmark::State& state) {
    Problem p = unit_problem(2);
    Rational c(1, 2);
    for (auto _ : state) {
        auto cert = gap_below(p, c);
        benchmark::DoNotOptimize(cert.delta);
    }
}
BENCHMARK(BM_GapBelowHalf);

void BM_ToDistinct(benchmark::State& state) {
    UnitFractionSum s({BigInt(2), BigInt(2), BigInt(3), BigInt(3), BigInt(4), BigInt(4)});
    for (auto _ : state) {
        auto out = to_distinct(s);
        benchmark::DoNotOptimize(out.size());
    }
}
BENCHMARK(BM_ToDistinct);

}  // namespace

BENCHMARK_MAIN();
