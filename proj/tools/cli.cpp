#include "cli.hpp"

#include "paper_table.hpp"
#include "render.hpp"
#include "scenario.hpp"

#include "evlogic/errors.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>

namespace evlogic::cli {

namespace {

const char* usage_text = R"(usage: evlogic <subcommand> [options]

subcommands:
  combine       -f scenario.json        Dempster's rule on two mass functions
  bounds        -f scenario.json        probability interval bounds over a constraint system
  agree         -f scenario.json        agreement check: orthogonal sum vs constraint posterior
  lottery       --n N --m1 Q            the mismatched-partition lottery family
  odds          --m1 Q --m2 Q --prior Q prior swamping on a two-block frame
  nonpartition                          the fixed overlapping-focal-sets example
  paper                                 recompute the reference table; exit 0 iff all rows match

options:
  -f FILE       read the scenario from FILE (any subcommand; kind must agree)
  --json        machine-readable output (rationals as "p/q" strings)
  -h, --help    this text

numbers are exact: "9/10", "0.9" and "999/1000" all parse to rationals.
)";

struct Options {
    std::string subcommand;
    bool json = false;
    std::optional<std::string> file;
    std::map<std::string, std::string> values; // --n, --m1, --m2, --prior, --samples, --seed
    bool help = false;
};

Options parse_argv(int argc, const char* const* argv) {
    Options opt;
    static const std::set<std::string> value_flags = {"--n", "--m1", "--m2", "--prior", "--samples", "--seed"};
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "-h" || arg == "--help") {
            opt.help = true;
        } else if (arg == "--json") {
            opt.json = true;
        } else if (arg == "-f") {
            if (i + 1 >= argc)
                throw ParseError("-f needs a file name");
            opt.file = argv[++i];
        } else if (value_flags.count(arg)) {
            if (i + 1 >= argc)
                throw ParseError(arg + " needs a value");
            opt.values[arg.substr(2)] = argv[++i];
        } else if (!arg.empty() && arg[0] == '-') {
            throw ParseError("unknown option '" + arg + "'");
        } else if (opt.subcommand.empty()) {
            opt.subcommand = arg;
        } else {
            throw ParseError("unexpected argument '" + arg + "'");
        }
    }
    return opt;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read scenario file '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad JSON in '" + path + "': " + e.what());
    }
}

std::string scenario_kind(const Scenario& s) {
    struct Visitor {
        std::string operator()(const CombineScenario&) const { return "combine"; }
        std::string operator()(const BoundsScenario&) const { return "bounds"; }
        std::string operator()(const AgreeScenario&) const { return "agree"; }
        std::string operator()(const LotteryScenario&) const { return "lottery"; }
        std::string operator()(const OddsScenario&) const { return "odds"; }
        std::string operator()(const NonpartitionScenario&) const { return "nonpartition"; }
    };
    return std::visit(Visitor{}, s);
}

long long integer_value(const Options& opt, const std::string& name) {
    const std::string& text = opt.values.at(name);
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size())
            throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError("--" + name + " must be an integer, got '" + text + "'");
    }
}

Scenario scenario_from_options(const Options& opt) {
    if (opt.file) {
        Scenario s = parse_scenario(load_json_file(*opt.file));
        if (scenario_kind(s) != opt.subcommand)
            throw ParseError("scenario kind '" + scenario_kind(s) + "' does not match subcommand '" +
                             opt.subcommand + "'");
        return s;
    }
    if (opt.subcommand == "lottery") {
        if (!opt.values.count("n") || !opt.values.count("m1"))
            throw ParseError("lottery needs --n and --m1 (or -f scenario.json)");
        return LotteryScenario{integer_value(opt, "n"), parse_rational(opt.values.at("m1"))};
    }
    if (opt.subcommand == "odds") {
        if (!opt.values.count("m1") || !opt.values.count("m2") || !opt.values.count("prior"))
            throw ParseError("odds needs --m1, --m2 and --prior (or -f scenario.json)");
        return OddsScenario{parse_rational(opt.values.at("m1")), parse_rational(opt.values.at("m2")),
                            parse_rational(opt.values.at("prior"))};
    }
    if (opt.subcommand == "nonpartition")
        return NonpartitionScenario{};
    throw ParseError(opt.subcommand + " needs -f scenario.json");
}

int run_paper(bool json, std::ostream& out) {
    PaperTable table = paper_table();
    if (json) {
        nlohmann::ordered_json doc;
        doc["version"] = 1;
        doc["kind"] = "paper";
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json r;
            r["scenario"] = row.scenario;
            r["dempster"] = row.dempster ? rat_json(*row.dempster) : nlohmann::ordered_json(nullptr);
            r["problogic"] = row.problogic ? rat_json(*row.problogic) : nlohmann::ordered_json(nullptr);
            r["stated"] = row.stated;
            r["match"] = row.match;
            rows.push_back(std::move(r));
        }
        doc["rows"] = std::move(rows);
        doc["all_match"] = table.all_match;
        out << doc.dump(2) << "\n";
    } else {
        auto show = [](const std::optional<Rat>& v) {
            return v ? to_fraction_string(*v) + " (" + to_decimal_string(*v) + ")" : std::string("-");
        };
        TableBuilder t({"scenario", "dempster", "problogic", "stated", "match"});
        for (const auto& row : table.rows)
            t.row({row.scenario, show(row.dempster), show(row.problogic), row.stated, row.match ? "yes" : "NO"});
        out << t.str();
        out << (table.all_match ? "all rows match\n" : "SOME ROWS DO NOT MATCH\n");
    }
    return table.all_match ? 0 : 1;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        Options opt = parse_argv(argc, argv);
        if (opt.help || opt.subcommand.empty()) {
            (opt.help ? out : err) << usage_text;
            return opt.help ? 0 : 2;
        }
        static const std::set<std::string> known = {"combine", "bounds", "agree",
                                                    "lottery", "odds",   "nonpartition", "paper"};
        if (!known.count(opt.subcommand))
            throw ParseError("unknown subcommand '" + opt.subcommand + "'");

        if (opt.subcommand == "paper") {
            if (opt.file)
                throw ParseError("paper takes no scenario file");
            return run_paper(opt.json, out);
        }

        RunOutput result = run_scenario(scenario_from_options(opt));
        if (opt.json)
            out << result.json.dump(2) << "\n";
        else
            out << result.table;
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace evlogic::cli
