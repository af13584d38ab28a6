#include "evlogic/agreement.hpp"
#include "evlogic/errors.hpp"

#include "support/generators.hpp"

#include <doctest.h>

using namespace evlogic;

TEST_SUITE("agreement") {

TEST_CASE("posterior_partition") {
    Frame f = make_frame({"H", "notH"});
    SubsetMask h = subset(f, {"H"}), nh = subset(f, {"notH"});
    MassFunction m = make_mass(f, {{h, Rat(9, 10)}, {nh, Rat(1, 10)}});

    SUBCASE("uniform prior reproduces the orthogonal sum") {
        auto post = posterior_partition(m, m, uniform_prior(2));
        CHECK(post[0] == Rat(81, 82)); // {H} has the lower bit pattern
        CHECK(post[1] == Rat(1, 82));
        CombinationResult r = combine(m, m);
        CHECK(post[0] == r.combined.mass_of(h));
    }

    SUBCASE("a uniform source drops out") {
        MassFunction flat = make_mass(f, {{h, Rat(1, 2)}, {nh, Rat(1, 2)}});
        auto post = posterior_partition(flat, m, uniform_prior(2));
        CHECK(post[0] == Rat(9, 10));
        CHECK(post[1] == Rat(1, 10));
    }

    SUBCASE("extreme prior swamps the evidence") {
        auto post = posterior_partition(m, m, {Rat(999, 1000), Rat(1, 1000)});
        CHECK(post[0] == Rat(3, 40)); // 0.075
    }

    SUBCASE("validation") {
        MassFunction other = make_mass(f, {{h, Rat(1)}});
        CHECK_THROWS_AS(posterior_partition(m, other, uniform_prior(2)), ValidationError);
        CHECK_THROWS_AS(posterior_partition(m, m, {Rat(1, 2), Rat(1, 4)}), ValidationError);
        CHECK_THROWS_AS(posterior_partition(m, m, {Rat(1), Rat(0)}), ValidationError);
    }
}

TEST_CASE("odds_swamp reproduces the swamping numbers") {
    OddsResult r = odds_swamp(Rat(9, 10), Rat(9, 10), Rat(999, 1000));
    CHECK(r.dempster == Rat(81, 82));
    CHECK(r.problogic == Rat(3, 40));
    CHECK(r.divergence == Rat(81, 82) - Rat(3, 40));

    // a fair prior removes the disagreement entirely
    OddsResult fair = odds_swamp(Rat(9, 10), Rat(9, 10), Rat(1, 2));
    CHECK(fair.dempster == fair.problogic);
    CHECK(fair.divergence == 0);

    // individually neutral evidence against a strong prior
    OddsResult neutral = odds_swamp(Rat(1, 2), Rat(1, 2), Rat(9, 10));
    CHECK(neutral.dempster == Rat(1, 2));
    CHECK(neutral.problogic == Rat(1, 10));

    CHECK_THROWS_AS(odds_swamp(Rat(0), Rat(1, 2), Rat(1, 2)), ValidationError);
    CHECK_THROWS_AS(odds_swamp(Rat(1, 2), Rat(1), Rat(1, 2)), ValidationError);
    CHECK_THROWS_AS(odds_swamp(Rat(1, 2), Rat(1, 2), Rat(1)), ValidationError);
}

TEST_CASE("problogic output falls as the prior rises") {
    Rat previous;
    bool first = true;
    for (int i = 1; i <= 19; ++i) {
        OddsResult r = odds_swamp(Rat(9, 10), Rat(9, 10), Rat(i, 20));
        if (!first)
            CHECK(r.problogic < previous);
        previous = r.problogic;
        first = false;
    }
}

TEST_CASE("lottery closed forms") {
    LotteryResult small = lottery(112, Rat(1, 10));
    CHECK(small.m3x1 == Rat(1, 1000));
    CHECK(small.bel == Rat(1, 1000));
    CHECK(small.posterior == Rat(1, 10));
    CHECK(small.t1 == Rat(999, 10));
    CHECK(small.t2 == Rat(9, 10));
    CHECK(small.m3x1 == small.m1x1 / (small.m1x1 + small.t1));
    CHECK(small.posterior == small.m1x1 / (small.m1x1 + small.t2));

    LotteryResult big = lottery(112, Rat(9, 10));
    CHECK(big.m3x1 == Rat(3, 40)); // 0.075
    CHECK(big.posterior == Rat(9, 10));

    // with two participants the partitions coincide and both sides agree
    for (const Rat& m : {Rat(1, 10), Rat(1, 2), Rat(17, 23)}) {
        LotteryResult two = lottery(2, m);
        CHECK(two.m3x1 == m);
        CHECK(two.posterior == m);
    }

    CHECK_THROWS_AS(lottery(1, Rat(1, 2)), ValidationError);
    CHECK_THROWS_AS(lottery(112, Rat(0)), ValidationError);
    CHECK_THROWS_AS(lottery(112, Rat(1)), ValidationError);
}

TEST_CASE("lottery closed form matches explicit combination for small frames") {
    std::mt19937_64 rng(7006);
    for (long long n = 2; n <= 12; ++n) {
        Rat m(1 + static_cast<long long>(testing::draw_below(rng, 98)), 100);
        std::vector<std::string> labels;
        for (long long i = 1; i <= n; ++i)
            labels.push_back("x" + std::to_string(i));
        Frame f = make_frame(labels);

        std::vector<std::pair<SubsetMask, Rat>> m1_assign{{subset(f, {"x1"}), m}};
        if (n > 1)
            m1_assign.emplace_back(subset(f, {"x1"}).complement(), Rat(1) - m);
        MassFunction m1 = make_mass(f, m1_assign);
        std::vector<std::pair<SubsetMask, Rat>> m2_assign;
        for (const auto& label : labels)
            m2_assign.emplace_back(subset(f, {label}), Rat(1, n));
        MassFunction m2 = make_mass(f, m2_assign);

        CombinationResult r = combine(m1, m2);
        LotteryResult closed = lottery(n, m);
        CHECK(r.combined.mass_of(subset(f, {"x1"})) == closed.m3x1);
        CHECK(belief(r.combined, subset(f, {"x1"})) == closed.bel);
    }
}

TEST_CASE("lottery divergence shape") {
    const Rat m(1, 10);
    Rat previous;
    bool first = true;
    for (long long n : {2LL, 3LL, 5LL, 10LL, 112LL, 1000LL}) {
        LotteryResult r = lottery(n, m);
        if (!first)
            CHECK(r.m3x1 < previous);
        CHECK(r.posterior == m); // independent of n
        previous = r.m3x1;
        first = false;
    }
    // vanishing combined mass: m3 < 2m / (n (1-m))
    for (long long n : {10LL, 1000LL, 1000000LL}) {
        LotteryResult r = lottery(n, m);
        CHECK(r.m3x1 < Rat(2) * m / (Rat(n) * (Rat(1) - m)));
    }
}

TEST_CASE("nonpartition witness") {
    NonpartitionWitness w = nonpartition_witness();
    CHECK(w.combined.conflict == 0);
    CHECK(w.combined.combined.mass_of(subset(w.frame, {"b"})) == Rat(1, 2));
    CHECK(w.report.all_pass());
    CHECK(w.conditional == 0);
    CHECK(marginal(w.witness, subset(w.frame, {"a", "b"})) == Rat(1, 2));
    CHECK(marginal(w.witness, subset(w.frame, {"b", "c"})) == Rat(1, 2));
    CHECK(marginal(w.witness, subset(w.frame, {"b"})) == 0);
    CHECK(marginal(w.witness, SubsetMask::full(w.frame), cells_e1) == Rat(1, 2));
    CHECK(marginal(w.witness, SubsetMask::full(w.frame), cells_e2) == Rat(1, 2));
}

TEST_CASE("confirmation_ratio") {
    Frame f = make_frame({"H", "notH"});
    Event h{subset(f, {"H"}), cells_all};
    Event e1{SubsetMask::full(f), cells_e1};

    SUBCASE("independent evidence is neutral") {
        std::vector<Rat> p(8, Rat(1, 8));
        ProbAssignment uniform = make_assignment(f, std::move(p));
        CHECK(confirmation_ratio(uniform, h, e1) == 1);
    }

    SUBCASE("high posterior can still disconfirm") {
        // prior 999/1000, P(H|E1) = 9/10 with P(E1) = 1/100
        std::vector<Rat> p(8, Rat(0));
        p[0 * num_cells + 1] = Rat(9, 1000);   // H, E1&!E2
        p[1 * num_cells + 1] = Rat(1, 1000);   // notH, E1&!E2
        p[0 * num_cells + 3] = Rat(990, 1000); // H, !E1&!E2
        ProbAssignment joint = make_assignment(f, std::move(p));
        CHECK(marginal(joint, subset(f, {"H"})) == Rat(999, 1000));
        Rat ratio = confirmation_ratio(joint, h, e1);
        CHECK(ratio == Rat(900, 999));
        CHECK(ratio < 1);
    }

    SUBCASE("low posterior can still confirm") {
        // prior 1/112, P(x1|E1) = 1/10 with P(E1) = 10/112
        Frame lf = make_frame({"x1", "rest"});
        std::vector<Rat> p(8, Rat(0));
        p[0 * num_cells + 1] = Rat(1, 112);
        p[1 * num_cells + 1] = Rat(9, 112);
        p[1 * num_cells + 3] = Rat(102, 112);
        ProbAssignment joint = make_assignment(lf, std::move(p));
        Rat ratio = confirmation_ratio(joint, Event{subset(lf, {"x1"}), cells_all},
                                       Event{SubsetMask::full(lf), cells_e1});
        CHECK(ratio == Rat(56, 5));
        CHECK(ratio > 1);
    }

    SUBCASE("zero prior or zero evidence is an error") {
        std::vector<Rat> p(8, Rat(0));
        p[1 * num_cells + 3] = Rat(1);
        ProbAssignment point = make_assignment(f, std::move(p));
        CHECK_THROWS_AS(confirmation_ratio(point, h, Event{SubsetMask::full(f), cells_all}),
                        UndefinedConditionalError);
        CHECK_THROWS_AS(confirmation_ratio(point, Event{subset(f, {"notH"}), cells_all}, e1),
                        UndefinedConditionalError);
    }
}

TEST_CASE("agreement_report") {
    Frame f = make_frame({"a", "b", "c", "d"});
    std::vector<SubsetMask> blocks{subset(f, {"a"}), subset(f, {"b"}), subset(f, {"c", "d"})};
    MassFunction m1 = make_mass(f, {{blocks[0], Rat(1, 2)}, {blocks[1], Rat(1, 3)}, {blocks[2], Rat(1, 6)}});
    MassFunction m2 = make_mass(f, {{blocks[0], Rat(1, 4)}, {blocks[1], Rat(1, 4)}, {blocks[2], Rat(1, 2)}});
    AgreementSpec spec = AgreementSpec::make(make_partition(f, blocks), m1, m2);

    SUBCASE("per-block agreement always holds") {
        AgreementReport report = agreement_report(spec, subset(f, {"a"}), 25, 11);
        CHECK(report.blocks_agree);
        for (const auto& row : report.blocks)
            CHECK(row.equal);
        CHECK(report.lower_bound_agrees);
    }

    SUBCASE("query spanning two blocks reaches the block-mass sum") {
        SubsetMask query = blocks[0] | blocks[1];
        AgreementReport report = agreement_report(spec, query, 10, 3);
        CombinationResult r = combine(m1, m2);
        CHECK(report.bel_a == r.combined.mass_of(blocks[0].bits()) + r.combined.mass_of(blocks[1].bits()));
        CHECK(report.constructed_min == report.bel_a);
        REQUIRE(report.sampled_min.has_value());
        CHECK(*report.sampled_min >= report.constructed_min);
    }

    SUBCASE("query cutting into a block floors at the contained blocks only") {
        SubsetMask query = blocks[0] | subset(f, {"c"}); // c alone does not cover block 3
        AgreementReport report = agreement_report(spec, query, 10, 3);
        CombinationResult r = combine(m1, m2);
        CHECK(report.bel_a == r.combined.mass_of(blocks[0].bits()));
        CHECK(report.lower_bound_agrees);
    }

    SUBCASE("random instances, sampled members stay above the floor") {
        std::mt19937_64 rng(7007);
        for (int iter = 0; iter < 5; ++iter) {
            AgreementSpec random_spec = testing::random_agreement_spec(rng, 4, 4);
            SubsetMask query(random_spec.frame(),
                             testing::draw_below(rng, SubsetMask::full(random_spec.frame()).bits() + 1));
            AgreementReport report = agreement_report(random_spec, query, 100, 1000 + iter);
            CHECK(report.blocks_agree);
            CHECK(report.lower_bound_agrees);
        }
    }
}

} // TEST_SUITE
