#include "cli.hpp"
#include "paper_table.hpp"
#include "scenario.hpp"

#include "evlogic/errors.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace evlogic;
using nlohmann::json;

namespace {

int run_cli(std::initializer_list<const char*> args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::vector<const char*> argv{"evlogic"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text)
        *out_text = out.str();
    if (err_text)
        *err_text = err.str();
    return code;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path);
    file << content;
    return path;
}

const char* combine_doc = R"({
  "version": 1,
  "kind": "combine",
  "frame": ["a", "b", "c"],
  "m1": {"a,b": "1/2", "b,c": "0.5"},
  "m2": {"a,b": "1/2", "b,c": "1/2"}
})";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("scenario parsing") {
    SUBCASE("combine parses and runs") {
        cli::Scenario s = cli::parse_scenario(json::parse(combine_doc));
        cli::RunOutput output = cli::run_scenario(s);
        CHECK(output.json["result"]["conflict"]["rat"] == "0/1");
        CHECK(output.json["result"]["combined"][0]["set"] == "b");
        CHECK(output.json["result"]["combined"][0]["mass"]["rat"] == "1/2");
    }
    SUBCASE("unknown fields are rejected") {
        json doc = json::parse(combine_doc);
        doc["extra"] = 1;
        CHECK_THROWS_AS(cli::parse_scenario(doc), ParseError);
    }
    SUBCASE("version and kind are mandatory") {
        CHECK_THROWS_AS(cli::parse_scenario(json::parse(R"({"kind":"combine"})")), ParseError);
        CHECK_THROWS_AS(cli::parse_scenario(json::parse(R"({"version":2,"kind":"combine"})")), ParseError);
        CHECK_THROWS_AS(cli::parse_scenario(json::parse(R"({"version":1,"kind":"what"})")), ParseError);
    }
    SUBCASE("numbers must be strings") {
        json doc = json::parse(combine_doc);
        doc["m1"]["a,b"] = 0.5;
        CHECK_THROWS_AS(cli::parse_scenario(doc), ParseError);
    }
    SUBCASE("malformed rationals") {
        json doc = json::parse(combine_doc);
        doc["m1"]["a,b"] = "1/0";
        CHECK_THROWS_AS(cli::parse_scenario(doc), ParseError);
        doc["m1"]["a,b"] = "abc";
        CHECK_THROWS_AS(cli::parse_scenario(doc), ParseError);
    }
}

TEST_CASE("lottery and odds subcommands") {
    std::string out;
    CHECK(run_cli({"lottery", "--n", "112", "--m1", "1/10"}, &out) == 0);
    CHECK(out.find("1/1000") != std::string::npos);
    CHECK(out.find("1/10") != std::string::npos);

    CHECK(run_cli({"odds", "--m1", "9/10", "--m2", "9/10", "--prior", "999/1000"}, &out) == 0);
    CHECK(out.find("81/82") != std::string::npos);
    CHECK(out.find("3/40") != std::string::npos);
    CHECK(out.find("0.075000") != std::string::npos);

    CHECK(run_cli({"lottery", "--n", "112", "--m1", "1/10", "--json"}, &out) == 0);
    json doc = json::parse(out);
    CHECK(doc["result"]["m3x1"]["rat"] == "1/1000");
    CHECK(doc["result"]["posterior"]["dec"] == "0.100000");
}

TEST_CASE("exit codes") {
    std::string out, err;
    CHECK(run_cli({}, &out, &err) == 2);                    // no subcommand
    CHECK(run_cli({"frobnicate"}, &out, &err) == 2);        // unknown subcommand
    CHECK(run_cli({"lottery", "--n", "112"}, &out, &err) == 2); // missing --m1
    CHECK(run_cli({"lottery", "--n", "x", "--m1", "1/10"}, &out, &err) == 2);
    CHECK(run_cli({"combine", "-f", "/nonexistent.json"}, &out, &err) == 2);
    CHECK(run_cli({"--help"}, &out, &err) == 0);

    // domain errors exit 1: lottery with n < 2
    CHECK(run_cli({"lottery", "--n", "1", "--m1", "1/10"}, &out, &err) == 1);

    // total conflict in a scenario file names the conflict
    auto path = write_temp("evlogic_total_conflict.json", R"({
      "version": 1, "kind": "combine", "frame": ["a", "b"],
      "m1": {"a": "1/1"}, "m2": {"b": "1/1"}
    })");
    CHECK(run_cli({"combine", "-f", path.string().c_str()}, &out, &err) == 1);
    CHECK(err.find("K = 1") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("scenario file kind must match the subcommand") {
    auto path = write_temp("evlogic_kind_mismatch.json", combine_doc);
    std::string err;
    CHECK(run_cli({"bounds", "-f", path.string().c_str()}, nullptr, &err) == 2);
    std::filesystem::remove(path);
}

TEST_CASE("bounds scenario") {
    auto path = write_temp("evlogic_bounds.json", R"({
      "version": 1, "kind": "bounds", "atoms": 3,
      "constraints": [
        {"coeffs": ["1", "1", "0"], "rel": "=", "rhs": "1/2"},
        {"coeffs": ["0", "1", "1"], "rel": "=", "rhs": "1/2"}
      ],
      "query": {"type": "prob", "atoms": [1]}
    })");
    std::string out;
    CHECK(run_cli({"bounds", "-f", path.string().c_str(), "--json"}, &out) == 0);
    json doc = json::parse(out);
    CHECK(doc["result"]["lo"]["rat"] == "0/1");
    CHECK(doc["result"]["hi"]["rat"] == "0/1");
    std::filesystem::remove(path);
}

TEST_CASE("json output round-trips to the same result") {
    auto path = write_temp("evlogic_agree.json", R"({
      "version": 1, "kind": "agree",
      "frame": ["a", "b", "c"],
      "blocks": [["a"], ["b", "c"]],
      "m1": {"a": "9/10", "b,c": "1/10"},
      "m2": {"a": "9/10", "b,c": "1/10"},
      "query": ["b", "c"],
      "samples": 20, "seed": 7
    })");
    std::string first_out;
    REQUIRE(run_cli({"agree", "-f", path.string().c_str(), "--json"}, &first_out) == 0);
    json first = json::parse(first_out);

    // feed the canonical scenario back in
    cli::Scenario again = cli::parse_scenario(first["scenario"]);
    cli::RunOutput rerun = cli::run_scenario(again);
    CHECK(json(rerun.json["result"]) == first["result"]);

    // byte-level determinism of repeated runs
    std::string second_out;
    REQUIRE(run_cli({"agree", "-f", path.string().c_str(), "--json"}, &second_out) == 0);
    CHECK(first_out == second_out);
    std::filesystem::remove(path);
}

TEST_CASE("nonpartition subcommand") {
    std::string out;
    CHECK(run_cli({"nonpartition", "--json"}, &out) == 0);
    json doc = json::parse(out);
    CHECK(doc["result"]["conditions_pass"] == true);
    CHECK(doc["result"]["conditional"]["rat"] == "0/1");
    bool found_b = false;
    for (const auto& row : doc["result"]["combined"])
        if (row["set"] == "b") {
            CHECK(row["mass"]["rat"] == "1/2");
            found_b = true;
        }
    CHECK(found_b);
}

TEST_CASE("paper table all rows match") {
    cli::PaperTable table = cli::paper_table();
    CHECK(table.all_match);
    CHECK(table.rows.size() >= 7);
    for (const auto& row : table.rows)
        CHECK(row.match);

    // the headline rows carry both sides with their exact published values
    CHECK(table.rows[0].dempster == Rat(81, 82));
    CHECK(table.rows[0].problogic == Rat(3, 40));

    std::string out;
    CHECK(run_cli({"paper"}, &out) == 0);
    CHECK(out.find("all rows match") != std::string::npos);

    CHECK(run_cli({"paper", "--json"}, &out) == 0);
    json doc = json::parse(out);
    CHECK(doc["all_match"] == true);
}

} // TEST_SUITE
