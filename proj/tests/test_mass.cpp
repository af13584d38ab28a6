#include "evlogic/errors.hpp"
#include "evlogic/mass.hpp"

#include "support/generators.hpp"

#include <doctest.h>

using namespace evlogic;

namespace {

Frame abc() {
    return make_frame({"a", "b", "c"});
}

// The overlapping-focal-sets mass function used throughout: both sources
// put 1/2 on {a,b} and 1/2 on {b,c}.
MassFunction half_half(const Frame& f) {
    return make_mass(f, {{subset(f, {"a", "b"}), Rat(1, 2)}, {subset(f, {"b", "c"}), Rat(1, 2)}});
}

} // namespace

TEST_SUITE("mass") {

TEST_CASE("make_mass validates") {
    Frame f = abc();
    CHECK(half_half(f).focal().size() == 2);
    CHECK(vacuous(f).mass_of(SubsetMask::full(f)) == 1);

    CHECK_THROWS_AS(make_mass(f, {{subset(f, {"a"}), Rat(6, 10)}, {subset(f, {}), Rat(4, 10)}}), ValidationError);
    CHECK_THROWS_AS(make_mass(f, {{subset(f, {"a"}), Rat(6, 10)}}), ValidationError); // bad sum
    CHECK_THROWS_AS(make_mass(f, {{subset(f, {"a"}), Rat(-1, 2)}, {subset(f, {"b"}), Rat(3, 2)}}), ValidationError);

    // duplicate focal sets merge by addition
    MassFunction merged = make_mass(f, {{subset(f, {"b"}), Rat(1, 4)}, {subset(f, {"b"}), Rat(3, 4)}});
    CHECK(merged.focal().size() == 1);
    CHECK(merged.mass_of(subset(f, {"b"})) == 1);
}

TEST_CASE("decimal input renormalizes within 1e-9") {
    Frame f = abc();
    // 0.333333333 three times: off by exactly 1e-9, accepted and scaled
    Rat third = parse_rational("0.333333333");
    MassFunction m = make_mass(
        f, {{subset(f, {"a"}), third}, {subset(f, {"b"}), third}, {subset(f, {"c"}), third}}, true);
    Rat sum = 0;
    for (const auto& [bits, mass] : m.focal())
        sum += mass;
    CHECK(sum == 1);
    CHECK(m.mass_of(subset(f, {"a"})) == Rat(1, 3));

    // 1e-6 off is too much even for the lenient policy
    Rat bad = parse_rational("0.333333");
    CHECK_THROWS_AS(
        make_mass(f, {{subset(f, {"a"}), bad}, {subset(f, {"b"}), bad}, {subset(f, {"c"}), bad}}, true),
        ValidationError);
}

TEST_CASE("combine: overlapping halves") {
    Frame f = abc();
    CombinationResult r = combine(half_half(f), half_half(f));
    CHECK(r.conflict == 0);
    CHECK(r.combined.mass_of(subset(f, {"b"})) == Rat(1, 2));
    CHECK(r.combined.mass_of(subset(f, {"a", "b"})) == Rat(1, 4));
    CHECK(r.combined.mass_of(subset(f, {"b", "c"})) == Rat(1, 4));
}

TEST_CASE("combine: conflicting sources") {
    Frame f = abc();
    // hand-expanded focal pairs: K = 0.6*0.5 = 3/10,
    // {a}: 0.6*0.5, {b}: 0.4*0.5, {a,b}: 0.4*0.5, each / (7/10)
    MassFunction m1 = make_mass(f, {{subset(f, {"a"}), Rat(6, 10)}, {subset(f, {"a", "b"}), Rat(4, 10)}});
    MassFunction m2 = make_mass(f, {{subset(f, {"b"}), Rat(5, 10)}, {subset(f, {"a", "b"}), Rat(5, 10)}});
    CombinationResult r = combine(m1, m2);
    CHECK(r.conflict == Rat(3, 10));
    CHECK(r.combined.mass_of(subset(f, {"a"})) == Rat(3, 7));
    CHECK(r.combined.mass_of(subset(f, {"b"})) == Rat(2, 7));
    CHECK(r.combined.mass_of(subset(f, {"a", "b"})) == Rat(2, 7));
}

TEST_CASE("combine: total conflict is an error") {
    Frame f = abc();
    MassFunction m1 = make_mass(f, {{subset(f, {"a"}), Rat(1)}});
    MassFunction m2 = make_mass(f, {{subset(f, {"b"}), Rat(1)}});
    CHECK_THROWS_AS(combine(m1, m2), TotalConflictError);

    Frame other = make_frame({"a", "b"});
    CHECK_THROWS_AS(combine(m1, vacuous(other)), FrameMismatchError);
}

TEST_CASE("belief and plausibility") {
    Frame f = abc();
    MassFunction m = half_half(f);
    CombinationResult r = combine(m, m);

    CHECK(belief(m, SubsetMask::full(f)) == 1);
    CHECK(belief(r.combined, subset(f, {"b"})) == Rat(1, 2));
    CHECK(belief(m, subset(f, {"b"})) == 0); // no focal set inside {b}
    CHECK(belief(vacuous(f), subset(f, {"a", "b"})) == 0);

    CHECK(plausibility(m, SubsetMask::full(f)) == 1);
    CHECK(plausibility(r.combined, subset(f, {"b"})) == 1); // every focal set meets b
    MassFunction point = make_mass(f, {{subset(f, {"a"}), Rat(1)}});
    CHECK(plausibility(point, subset(f, {"b"})) == 0);
}

TEST_CASE("combination algebra on random masses") {
    std::mt19937_64 rng(7002);
    int assoc_checked = 0;
    for (int iter = 0; iter < 300; ++iter) {
        Frame f = testing::random_frame(rng, 2, 6);
        MassFunction m1 = testing::random_mass(rng, f, 4);
        MassFunction m2 = testing::random_mass(rng, f, 4);
        MassFunction m3 = testing::random_mass(rng, f, 4);

        CombinationResult r12 = combine(m1, m2);
        CHECK(r12.combined == combine(m2, m1).combined);
        CHECK(r12.conflict < 1);

        Rat sum = 0;
        for (const auto& [bits, mass] : r12.combined.focal())
            sum += mass;
        CHECK(sum == 1);

        // two-sided identity
        CHECK(combine(vacuous(f), m1).combined == m1);
        CHECK(combine(m1, vacuous(f)).combined == m1);

        // associativity, exact on rationals (full frame is always focal
        // here, so no intermediate total conflict)
        CHECK(combine(r12.combined, m3).combined == combine(m1, combine(m2, m3).combined).combined);
        ++assoc_checked;

        std::uint64_t full = SubsetMask::full(f).bits();
        SubsetMask a(f, testing::draw_below(rng, full + 1));
        SubsetMask b = a | SubsetMask(f, testing::draw_below(rng, full + 1));
        CHECK(belief(m1, a) >= 0);
        CHECK(belief(m1, a) <= plausibility(m1, a));
        CHECK(plausibility(m1, a) <= 1);
        CHECK(belief(m1, a) <= belief(m1, b)); // monotone
    }
    CHECK(assoc_checked == 300);
}

} // TEST_SUITE
