#pragma once

#include "evlogic/mass.hpp"
#include "evlogic/prob_model.hpp"
#include "evlogic/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace evlogic {

/// Posterior over shared focal blocks given both evidence statements,
/// by Bayes with per-block independence:
///   posterior(S_j)  proportional to  m1(S_j) m2(S_j) / prior(S_j).
/// Blocks are keyed by ascending focal bit pattern (the order of
/// MassFunction::focal()); `prior` must follow that order, be positive
/// and sum to 1. With a uniform prior this equals the orthogonal sum on
/// the blocks. Throws ValidationError on mismatched focal families or a
/// bad prior.
std::vector<Rat> posterior_partition(const MassFunction& m1, const MassFunction& m2, const std::vector<Rat>& prior);

/// Uniform prior over k blocks.
std::vector<Rat> uniform_prior(int k);

struct OddsResult {
    Rat dempster;   // m1 (+) m2 on H
    Rat problogic;  // P(H | E1 and E2) under the prior's odds
    Rat divergence; // |dempster - problogic|
};

/// The bipartite prior-swamping comparison: H vs not-H with
/// P(H|E1) = m1H, P(H|E2) = m2H and prior P(H) = priorH. All inputs must
/// lie strictly inside (0,1).
OddsResult odds_swamp(const Rat& m1h, const Rat& m2h, const Rat& prior_h);

/// The mismatched-partition lottery family with n participants:
/// m1 focal on {x_1} (mass m1x1) and {x_2..x_n}; m2 uniform over the
/// singletons. Closed forms, exact for any n >= 2.
struct LotteryResult {
    long long n = 0;
    Rat m1x1;       // mass on {x_1} under m1
    Rat m3x1;       // the orthogonal sum on {x_1}
    Rat bel;        // Bel({x_1}) after combination (= m3x1)
    Rat posterior;  // P({x_1} | E1 and E2) under the constraint model (= m1x1)
    Rat t1, t2;     // competing denominator terms: t1 = (1-m)(n-1), t2 = 1-m
};

LotteryResult lottery(long long n, const Rat& m1x1);

/// The fixed overlapping-focal-sets scenario on {a,b,c}:
/// m1 = m2 = ({a,b} -> 1/2, {b,c} -> 1/2). Dempster puts mass 1/2 on the
/// intersection {b}; the returned witness satisfies conditions (i)-(iv)
/// with the two overlapping focal sets as blocks yet has
/// P(b | E1 and E2) = 0.
struct NonpartitionWitness {
    Frame frame;
    AgreementSpec spec; // overlapping "blocks" {a,b}, {b,c}
    CombinationResult combined;
    ProbAssignment witness;
    ConditionReport report;
    Rat conditional; // P({b} | E1 and E2) under the witness
};

NonpartitionWitness nonpartition_witness();

/// P(H|E) / P(H): below 1 the evidence disconfirms H no matter how large
/// the posterior is. Throws UndefinedConditionalError when P(H) = 0 or
/// P(E) = 0.
Rat confirmation_ratio(const ProbAssignment& p, const Event& h, const Event& e);

struct BlockAgreement {
    SubsetMask block;
    Rat dempster_mass; // m3(S_i)
    Rat posterior;     // closed-form P(S_i | E1 and E2)
    bool equal;
};

struct AgreementReport {
    std::vector<BlockAgreement> blocks;
    Rat conflict;   // K of the combination
    bool blocks_agree; // every block agrees exactly

    Rat bel_a;                    // Bel of the query set under m1 (+) m2
    Rat constructed_min;          // conditional attained by the extremal member
    std::optional<Rat> sampled_min; // min over sampled members, if any sampled
    bool lower_bound_agrees; // constructed_min == bel_a and no sample falls below
};

/// Runs both sides of the agreement check for `spec` and a query set `a`:
/// the orthogonal sum against the closed-form posterior per block, and
/// Bel(a) against the extremal construction plus `samples` sampled
/// members (deterministic in `seed`).
AgreementReport agreement_report(const AgreementSpec& spec, const SubsetMask& a, int samples, std::uint64_t seed);

} // namespace evlogic
