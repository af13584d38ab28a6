#include "evlogic/agreement.hpp"

#include <benchmark/benchmark.h>

using namespace evlogic;

static void BM_LotteryClosedForm(benchmark::State& state) {
    long long n = state.range(0);
    for (auto _ : state) {
        LotteryResult r = lottery(n, Rat(1, 10));
        benchmark::DoNotOptimize(r.m3x1);
    }
}
BENCHMARK(BM_LotteryClosedForm)->Arg(112)->Arg(1000000);

static void BM_OddsSwamp(benchmark::State& state) {
    for (auto _ : state) {
        OddsResult r = odds_swamp(Rat(9, 10), Rat(9, 10), Rat(999, 1000));
        benchmark::DoNotOptimize(r.divergence);
    }
}
BENCHMARK(BM_OddsSwamp);

static void BM_SampleGamma(benchmark::State& state) {
    Frame f = make_frame({"a", "b", "c", "d", "e"});
    std::vector<SubsetMask> blocks{subset(f, {"a"}), subset(f, {"b", "c"}), subset(f, {"d", "e"})};
    MassFunction m1 = make_mass(f, {{blocks[0], Rat(1, 2)}, {blocks[1], Rat(1, 3)}, {blocks[2], Rat(1, 6)}});
    MassFunction m2 = make_mass(f, {{blocks[0], Rat(2, 5)}, {blocks[1], Rat(2, 5)}, {blocks[2], Rat(1, 5)}});
    AgreementSpec spec = AgreementSpec::make(make_partition(f, blocks), m1, m2);
    for (auto _ : state) {
        auto samples = sample_gamma(spec, static_cast<int>(state.range(0)), 1);
        benchmark::DoNotOptimize(samples.size());
    }
}
BENCHMARK(BM_SampleGamma)->Arg(10)->Arg(100);

static void BM_AgreementReport(benchmark::State& state) {
    Frame f = make_frame({"a", "b", "c", "d"});
    std::vector<SubsetMask> blocks{subset(f, {"a"}), subset(f, {"b"}), subset(f, {"c", "d"})};
    MassFunction m1 = make_mass(f, {{blocks[0], Rat(1, 2)}, {blocks[1], Rat(1, 3)}, {blocks[2], Rat(1, 6)}});
    MassFunction m2 = make_mass(f, {{blocks[0], Rat(1, 4)}, {blocks[1], Rat(1, 4)}, {blocks[2], Rat(1, 2)}});
    AgreementSpec spec = AgreementSpec::make(make_partition(f, blocks), m1, m2);
    SubsetMask query = blocks[0] | blocks[2];
    for (auto _ : state) {
        AgreementReport report = agreement_report(spec, query, static_cast<int>(state.range(0)), 7);
        benchmark::DoNotOptimize(report.lower_bound_agrees);
    }
}
BENCHMARK(BM_AgreementReport)->Arg(0)->Arg(50);
