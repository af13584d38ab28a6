#pragma once

#include "evlogic/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace evlogic::cli {

/// {"rat": "p/q", "dec": "0.xxxxxx"} pair used for every number in JSON output.
inline nlohmann::ordered_json rat_json(const Rat& r) {
    nlohmann::ordered_json out;
    out["rat"] = to_fraction_string(r);
    out["dec"] = to_decimal_string(r);
    return out;
}

/// Standard envelope for machine-readable output.
inline nlohmann::ordered_json wrap_output(const char* kind, nlohmann::ordered_json scenario,
                                          nlohmann::ordered_json result) {
    nlohmann::ordered_json out;
    out["version"] = 1;
    out["kind"] = kind;
    out["scenario"] = std::move(scenario);
    out["result"] = std::move(result);
    return out;
}

/// Column-aligned plain-text tables.
class TableBuilder {
public:
    explicit TableBuilder(std::vector<std::string> header) : header_(std::move(header)) {}

    void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    std::string str() const {
        std::vector<std::size_t> width(header_.size(), 0);
        for (std::size_t j = 0; j < header_.size(); ++j)
            width[j] = header_[j].size();
        for (const auto& row : rows_)
            for (std::size_t j = 0; j < row.size() && j < width.size(); ++j)
                width[j] = std::max(width[j], row[j].size());
        std::string out = format_row(header_, width);
        std::string rule;
        for (std::size_t j = 0; j < width.size(); ++j) {
            rule += std::string(width[j], '-');
            if (j + 1 < width.size())
                rule += "  ";
        }
        out += rule + "\n";
        for (const auto& row : rows_)
            out += format_row(row, width);
        return out;
    }

private:
    static std::string format_row(const std::vector<std::string>& cells, const std::vector<std::size_t>& width) {
        std::string out;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            out += cells[j];
            if (j + 1 < cells.size())
                out += std::string(width[j] - cells[j].size() + 2, ' ');
        }
        out += "\n";
        return out;
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace evlogic::cli
