#include "evlogic/agreement.hpp"

#include "evlogic/errors.hpp"

#include <algorithm>

namespace evlogic {

std::vector<Rat> posterior_partition(const MassFunction& m1, const MassFunction& m2, const std::vector<Rat>& prior) {
    if (m1.frame() != m2.frame())
        throw FrameMismatchError("posterior_partition: mass functions over different frames");
    if (m1.focal().size() != m2.focal().size())
        throw ValidationError("posterior_partition: focal families differ");
    for (const auto& [bits, mass] : m1.focal())
        if (m2.focal().find(bits) == m2.focal().end())
            throw ValidationError("posterior_partition: focal families differ");
    if (prior.size() != m1.focal().size())
        throw ValidationError("posterior_partition: prior needs one entry per block");

    Rat prior_sum = 0;
    for (const Rat& p : prior) {
        if (p <= 0)
            throw ValidationError("prior entries must be positive");
        prior_sum += p;
    }
    if (prior_sum != 1)
        throw ValidationError("prior sums to " + to_fraction_string(prior_sum) + ", expected exactly 1");

    std::vector<Rat> weights;
    weights.reserve(prior.size());
    std::size_t i = 0;
    Rat total = 0;
    for (const auto& [bits, mass] : m1.focal()) {
        Rat w = mass * m2.mass_of(bits) / prior[i++];
        total += w;
        weights.push_back(std::move(w));
    }
    if (total == 0)
        throw ValidationError("all block products are zero: posterior undefined");
    for (Rat& w : weights)
        w /= total;
    return weights;
}

std::vector<Rat> uniform_prior(int k) {
    return std::vector<Rat>(static_cast<std::size_t>(k), Rat(1, k));
}

OddsResult odds_swamp(const Rat& m1h, const Rat& m2h, const Rat& prior_h) {
    for (const Rat* v : {&m1h, &m2h, &prior_h})
        if (!(*v > 0 && *v < 1))
            throw ValidationError("odds_swamp inputs must lie strictly between 0 and 1");

    Rat agree = m1h * m2h;
    Rat against = (Rat(1) - m1h) * (Rat(1) - m2h);
    Rat dempster = agree / (agree + against);

    Rat odds = prior_h / (Rat(1) - prior_h);
    Rat problogic = agree / (agree + odds * against);
    Rat divergence = rat_abs(dempster - problogic);
    return OddsResult{std::move(dempster), std::move(problogic), std::move(divergence)};
}

LotteryResult lottery(long long n, const Rat& m1x1) {
    if (n < 2)
        throw ValidationError("lottery needs at least 2 participants");
    if (!(m1x1 > 0 && m1x1 < 1))
        throw ValidationError("m1({x_1}) must lie strictly between 0 and 1");

    LotteryResult r;
    r.n = n;
    r.m1x1 = m1x1;
    r.t1 = (Rat(1) - m1x1) * Rat(n - 1);
    r.t2 = Rat(1) - m1x1;
    r.m3x1 = m1x1 / (m1x1 + r.t1);
    r.bel = r.m3x1;
    r.posterior = m1x1; // the uniform ticket evidence cancels out
    return r;
}

NonpartitionWitness nonpartition_witness() {
    Frame frame = make_frame({"a", "b", "c"});
    SubsetMask ab = subset(frame, {"a", "b"});
    SubsetMask bc = subset(frame, {"b", "c"});
    Rat half(1, 2);

    MassFunction m1 = make_mass(frame, {{ab, half}, {bc, half}});
    MassFunction m2 = m1;
    CombinationResult combined = combine(m1, m2);
    AgreementSpec spec = AgreementSpec::make_with_blocks(frame, {ab, bc}, m1, m2);

    // Joint extension of the partial assignment P(b) = 0,
    // P(a) = P(c) = P(E1) = P(E2) = P(a|E1) = P(c|E2) = 1/2: those values
    // force P(E1|a) = P(E2|a) = P(E1|c) = P(E2|c) = 1/2, and independent
    // evidence factors for a and c put 1/8 on each of their four cells.
    int a = frame.index_of("a"), c = frame.index_of("c");
    std::vector<Rat> p(static_cast<std::size_t>(frame.size()) * num_cells, Rat(0));
    for (int cell = 0; cell < num_cells; ++cell) {
        p[static_cast<std::size_t>(a * num_cells + cell)] = Rat(1, 8);
        p[static_cast<std::size_t>(c * num_cells + cell)] = Rat(1, 8);
    }
    ProbAssignment witness = make_assignment(frame, std::move(p));
    ConditionReport report = check_agreement_conditions(witness, spec);
    Rat conditional =
        cond_prob(witness, Event{subset(frame, {"b"}), cells_all}, Event{SubsetMask::full(frame), cells_both});

    return NonpartitionWitness{frame,           spec, std::move(combined), std::move(witness), std::move(report),
                               std::move(conditional)};
}

Rat confirmation_ratio(const ProbAssignment& p, const Event& h, const Event& e) {
    Rat prior = marginal(p, h);
    if (prior == 0)
        throw UndefinedConditionalError("confirmation ratio undefined: P(H) = 0");
    return cond_prob(p, h, e) / prior;
}

AgreementReport agreement_report(const AgreementSpec& spec, const SubsetMask& a, int samples, std::uint64_t seed) {
    if (a.frame() != spec.frame())
        throw FrameMismatchError("agreement_report: query subset over a different frame");

    AgreementReport report;
    CombinationResult comb = combine(spec.m1(), spec.m2());
    report.conflict = comb.conflict;

    // Per-block check: orthogonal sum vs the closed-form posterior with
    // a uniform prior, keyed back to spec block order.
    std::vector<Rat> posterior = posterior_partition(spec.m1(), spec.m2(), uniform_prior(spec.k()));
    std::map<std::uint64_t, Rat> posterior_by_bits;
    std::size_t i = 0;
    for (const auto& [bits, mass] : spec.m1().focal())
        posterior_by_bits[bits] = posterior[i++];

    report.blocks_agree = true;
    for (const auto& block : spec.blocks()) {
        BlockAgreement row{block, comb.combined.mass_of(block.bits()), posterior_by_bits.at(block.bits()), false};
        row.equal = row.dempster_mass == row.posterior;
        report.blocks_agree = report.blocks_agree && row.equal;
        report.blocks.push_back(std::move(row));
    }

    // Lower-bound check for the query set: Bel(A) against the extremal
    // member and against sampled members.
    report.bel_a = belief(comb.combined, a);
    ProbAssignment reference = construct_member(spec, uniform_within_blocks(spec));
    ProbAssignment extremal = extremal_member(spec, a, reference);
    Event query{a, cells_all};
    Event both{SubsetMask::full(spec.frame()), cells_both};
    report.constructed_min = cond_prob(extremal, query, both);

    bool samples_ok = true;
    if (samples > 0) {
        Rat best;
        bool first = true;
        for (const ProbAssignment& q : sample_gamma(spec, samples, seed)) {
            Rat value = cond_prob(q, query, both);
            if (value < report.constructed_min)
                samples_ok = false;
            if (first || value < best) {
                best = value;
                first = false;
            }
        }
        if (!first)
            report.sampled_min = std::move(best);
    }
    report.lower_bound_agrees = report.constructed_min == report.bel_a && samples_ok;
    return report;
}

} // namespace evlogic
