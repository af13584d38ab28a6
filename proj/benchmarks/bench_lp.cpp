#include "evlogic/lp.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace evlogic;

namespace {

// A feasible system over `atoms` atoms with `rows` random constraints
// anchored at the uniform point.
ConstraintSystem random_system(std::mt19937_64& rng, int atoms, int rows) {
    ConstraintSystem sys(atoms);
    for (int r = 0; r < rows; ++r) {
        LinearConstraint c;
        Rat at_anchor = 0;
        for (int atom = 0; atom < atoms; ++atom) {
            long long num = static_cast<long long>(rng() % 5) - 2;
            if (num == 0)
                continue;
            c.coeffs[atom] = Rat(num, 1 + static_cast<long long>(rng() % 4));
            at_anchor += c.coeffs[atom] / atoms;
        }
        if (c.coeffs.empty()) {
            --r;
            continue;
        }
        c.rel = Relation::le;
        c.rhs = at_anchor + Rat(1 + rng() % 50, 100);
        sys.add(std::move(c));
    }
    return sys;
}

} // namespace

static void BM_ProbBounds(benchmark::State& state) {
    std::mt19937_64 rng(3);
    int atoms = static_cast<int>(state.range(0));
    ConstraintSystem sys = random_system(rng, atoms, atoms / 2);
    std::vector<int> query;
    for (int atom = 0; atom < atoms; atom += 2)
        query.push_back(atom);
    for (auto _ : state) {
        Interval iv = prob_bounds(sys, query);
        benchmark::DoNotOptimize(iv.lo);
    }
}
BENCHMARK(BM_ProbBounds)->Arg(8)->Arg(16)->Arg(32);

static void BM_CondProbBounds(benchmark::State& state) {
    std::mt19937_64 rng(4);
    int atoms = static_cast<int>(state.range(0));
    ConstraintSystem sys = random_system(rng, atoms, atoms / 2);
    std::vector<int> a, b;
    for (int atom = 0; atom < atoms; atom += 2)
        b.push_back(atom);
    for (int atom = 0; atom < atoms; atom += 4)
        a.push_back(atom);
    for (auto _ : state) {
        ConditionalBounds cb = cond_prob_bounds(sys, a, b);
        benchmark::DoNotOptimize(cb.interval.lo);
    }
}
BENCHMARK(BM_CondProbBounds)->Arg(8)->Arg(16);
