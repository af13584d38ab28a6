#include "evlogic/mass.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace evlogic;

namespace {

MassFunction random_mass(std::mt19937_64& rng, const Frame& frame, int focal_count) {
    std::uint64_t full = SubsetMask::full(frame).bits();
    std::map<std::uint64_t, std::uint64_t> weights;
    while (weights.size() < static_cast<std::size_t>(focal_count)) {
        std::uint64_t bits = rng() % full + 1;
        weights[bits] += 1 + rng() % 100;
    }
    std::uint64_t total = 0;
    for (const auto& [bits, w] : weights)
        total += w;
    std::vector<std::pair<SubsetMask, Rat>> assignments;
    for (const auto& [bits, w] : weights)
        assignments.emplace_back(SubsetMask(frame, bits), Rat(w, total));
    return make_mass(frame, assignments);
}

Frame bench_frame(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back("e" + std::to_string(i));
    return make_frame(labels);
}

} // namespace

static void BM_Combine(benchmark::State& state) {
    std::mt19937_64 rng(1);
    Frame frame = bench_frame(10);
    int focal = static_cast<int>(state.range(0));
    MassFunction m1 = random_mass(rng, frame, focal);
    MassFunction m2 = random_mass(rng, frame, focal);
    for (auto _ : state) {
        CombinationResult r = combine(m1, m2);
        benchmark::DoNotOptimize(r.conflict);
    }
}
BENCHMARK(BM_Combine)->Arg(4)->Arg(16)->Arg(64);

static void BM_BeliefQuery(benchmark::State& state) {
    std::mt19937_64 rng(2);
    Frame frame = bench_frame(16);
    MassFunction m = random_mass(rng, frame, static_cast<int>(state.range(0)));
    SubsetMask a(frame, 0x5a5a);
    for (auto _ : state) {
        Rat b = belief(m, a);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_BeliefQuery)->Arg(16)->Arg(64);
