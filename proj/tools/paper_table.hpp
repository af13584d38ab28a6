#pragma once

#include "evlogic/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace evlogic::cli {

struct PaperRow {
    std::string scenario;
    std::optional<Rat> dempster;  // combination-rule side, when the row has one
    std::optional<Rat> problogic; // constraint-model side, when the row has one
    std::string stated;           // the published value(s) this row reproduces
    bool match = false;
};

struct PaperTable {
    std::vector<PaperRow> rows;
    bool all_match = false;
};

/// Recomputes every number from the classic comparison scenarios (prior
/// swamping, overlapping focal sets, the lottery family) and checks each
/// against its published value. The `paper` subcommand exits 0 only when
/// every row matches.
PaperTable paper_table();

} // namespace evlogic::cli
