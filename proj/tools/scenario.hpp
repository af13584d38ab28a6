#pragma once

#include "evlogic/lp.hpp"
#include "evlogic/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace evlogic::cli {

/// Raw mass map as read from a scenario file: focal sets as label lists,
/// values as exact rationals. `any_decimal` records whether any value was
/// written as a decimal, which selects the renormalizing sum policy.
struct MassSpec {
    std::vector<std::pair<std::vector<std::string>, Rat>> entries;
    bool any_decimal = false;
};

struct CombineScenario {
    std::vector<std::string> frame;
    MassSpec m1, m2;
};

struct RawConstraint {
    std::vector<Rat> coeffs; // dense, one per atom
    Relation rel = Relation::eq;
    Rat rhs;
};

struct BoundsScenario {
    int atoms = 0;
    std::vector<RawConstraint> constraints;
    bool conditional = false;
    std::vector<int> query_atoms;            // prob query
    std::vector<int> a_atoms, b_atoms;       // cond query
};

struct AgreeScenario {
    std::vector<std::string> frame;
    std::vector<std::vector<std::string>> blocks;
    MassSpec m1, m2;
    std::vector<std::string> query;
    int samples = 100;
    std::uint64_t seed = 1;
};

struct LotteryScenario {
    long long n = 0;
    Rat m1;
};

struct OddsScenario {
    Rat m1, m2, prior;
};

struct NonpartitionScenario {};

using Scenario = std::variant<CombineScenario, BoundsScenario, AgreeScenario, LotteryScenario, OddsScenario,
                              NonpartitionScenario>;

/// Parses a scenario document. Structural problems (unknown fields, bad
/// version, malformed numbers, wrong types) raise ParseError; semantic
/// validity (mass sums, partitions, feasibility) is checked later when
/// the scenario runs.
Scenario parse_scenario(const nlohmann::json& doc);

/// Result of running one scenario: a machine-readable document (also
/// embedding the canonical form of the scenario under "scenario") and an
/// aligned human-readable table.
struct RunOutput {
    nlohmann::ordered_json json;
    std::string table;
};

RunOutput run_scenario(const Scenario& scenario);

} // namespace evlogic::cli
