#include "evlogic/errors.hpp"
#include "evlogic/frame.hpp"

#include "support/generators.hpp"

#include <doctest.h>

using namespace evlogic;

TEST_SUITE("frame") {

TEST_CASE("make_frame keeps input order") {
    Frame f = make_frame({"a", "b", "c"});
    CHECK(f.size() == 3);
    CHECK(f.label(0) == "a");
    CHECK(f.label(2) == "c");
    CHECK(f.index_of("b") == 1);

    Frame bipartite = make_frame({"H", "notH"});
    CHECK(bipartite.size() == 2);
}

TEST_CASE("make_frame rejects bad input") {
    CHECK_THROWS_AS(make_frame({}), ValidationError);
    CHECK_THROWS_AS(make_frame({"a", "a"}), ValidationError);
    CHECK_THROWS_AS(make_frame({"a", ""}), ValidationError);

    std::vector<std::string> big;
    for (int i = 1; i <= 112; ++i)
        big.push_back("x" + std::to_string(i));
    CHECK_THROWS_AS(make_frame(big), ValidationError);

    big.resize(64);
    CHECK(make_frame(big).size() == 64); // at the cap is fine
}

TEST_CASE("subset builds masks") {
    Frame f = make_frame({"a", "b", "c"});
    CHECK(subset(f, {"a", "b"}).bits() == 0b011);
    CHECK(subset(f, {}).is_empty());
    CHECK(subset(f, {"b", "b"}) == subset(f, {"b"}));
    CHECK_THROWS_AS(subset(f, {"z"}), ValidationError);
    CHECK(subset(f, f.labels()) == SubsetMask::full(f));
}

TEST_CASE("mask algebra") {
    Frame f = make_frame({"a", "b", "c"});
    SubsetMask ab = subset(f, {"a", "b"});
    SubsetMask bc = subset(f, {"b", "c"});
    CHECK((ab & bc) == subset(f, {"b"}));
    CHECK((ab | bc) == SubsetMask::full(f));
    CHECK(ab.minus(bc) == subset(f, {"a"}));
    CHECK(ab.complement() == subset(f, {"c"}));
    CHECK(ab.complement().complement() == ab);
    CHECK(subset(f, {"b"}).is_subset_of(ab));
    CHECK(!ab.is_subset_of(bc));
    CHECK(bc.lowest_member() == 1);

    Frame other = make_frame({"a", "b"});
    CHECK_THROWS_AS(ab & subset(other, {"a"}), FrameMismatchError);
}

TEST_CASE("is_partition") {
    Frame f = make_frame({"a", "b", "c"});
    CHECK(is_partition(f, {subset(f, {"a"}), subset(f, {"b", "c"})}));
    CHECK(!is_partition(f, {subset(f, {"a", "b"}), subset(f, {"b", "c"})})); // overlap at b
    CHECK(!is_partition(f, {subset(f, {"a"}), subset(f, {"b"})}));           // not covering
    CHECK(!is_partition(f, {subset(f, {}), SubsetMask::full(f)}));           // empty block
    CHECK_THROWS_AS(make_partition(f, {subset(f, {"a"})}), ValidationError);
}

TEST_CASE("partitions: block sizes add up and blocks never overlap") {
    std::mt19937_64 rng(7001);
    for (int iter = 0; iter < 200; ++iter) {
        Frame f = testing::random_frame(rng, 2, 10);
        // random block family: half the time a real partition
        std::vector<SubsetMask> blocks;
        if (iter % 2 == 0) {
            int k = 1 + static_cast<int>(testing::draw_below(rng, static_cast<std::uint64_t>(f.size())));
            std::vector<std::uint64_t> bits(static_cast<std::size_t>(k), 0);
            for (int e = 0; e < f.size(); ++e)
                bits[e < k ? static_cast<std::size_t>(e) : testing::draw_below(rng, static_cast<std::uint64_t>(k))] |=
                    1ull << e;
            for (std::uint64_t b : bits)
                blocks.emplace_back(f, b);
        } else {
            int count = 1 + static_cast<int>(testing::draw_below(rng, 4));
            for (int i = 0; i < count; ++i)
                blocks.emplace_back(f, testing::draw_below(rng, SubsetMask::full(f).bits() + 1));
        }
        if (!is_partition(f, blocks))
            continue;
        int total = 0;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            total += blocks[i].count();
            for (std::size_t j = i + 1; j < blocks.size(); ++j)
                CHECK((blocks[i].bits() & blocks[j].bits()) == 0);
        }
        CHECK(total == f.size());
    }
}

} // TEST_SUITE
