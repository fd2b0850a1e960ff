// netecon: equilibrium solver for the users / platform / access-ISP pricing
// game. Subcommands: solve one scenario, compare the four scenarios, or sweep
// one market parameter and emit CSV plus gnuplot scripts.
#include "netecon/csv_io.hpp"
#include "netecon/run_config.hpp"
#include "netecon/scenario.hpp"
#include "netecon/text_report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace netecon;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::pair<std::string, std::string>> split_overrides(
    const std::vector<std::string>& sets) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const std::string& kv : sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("--set expects key=value, got '" + kv + "'");
        }
        out.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    }
    return out;
}

void write_text_file(const fs::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    out << body;
}

std::vector<ScenarioKind> parse_kinds(const std::vector<std::string>& names) {
    if (names.empty()) {
        return {kAllScenarios.begin(), kAllScenarios.end()};
    }
    std::vector<ScenarioKind> kinds;
    for (const std::string& name : names) {
        ScenarioKind kind;
        if (!scenario_from_string(name, kind)) {
            throw std::runtime_error("unknown scenario '" + name + "' (use pnn|pn|ann|an)");
        }
        kinds.push_back(kind);
    }
    return kinds;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-sided pricing equilibria under net-neutrality scenarios"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::vector<std::string> sets;
    std::string out_dir_flag;
    app.add_option("--config", config_path, "key = value config file");
    app.add_option("--set", sets, "override one config key, e.g. --set gamma=3.5");
    app.add_option("--out", out_dir_flag, "output directory");

    auto* solve_cmd = app.add_subcommand("solve", "solve one scenario");
    std::string scenario_name;
    solve_cmd->add_option("--scenario", scenario_name, "pnn|pn|ann|an")->required();

    auto* compare_cmd = app.add_subcommand("compare", "solve and rank all four scenarios");

    auto* sweep_cmd = app.add_subcommand("sweep", "sweep one market parameter");
    std::string sweep_param;
    double sweep_from = 0.0, sweep_to = 1.0;
    int sweep_points = 2;
    std::vector<std::string> sweep_scenarios;
    sweep_cmd->add_option("--param", sweep_param, "n_users|n_cps|r_u|r_c|delta|gamma|a")
        ->required();
    sweep_cmd->add_option("--from", sweep_from, "lower end of the range")->required();
    sweep_cmd->add_option("--to", sweep_to, "upper end of the range")->required();
    sweep_cmd->add_option("--points", sweep_points, "grid point count (>= 2)")->required();
    sweep_cmd->add_option("--scenarios", sweep_scenarios, "subset of pnn pn ann an");

    CLI11_PARSE(app, argc, argv);

    try {
        const std::string file_text = config_path.empty() ? std::string() : read_file(config_path);
        RunConfig cfg = parse_config(file_text, split_overrides(sets));
        if (!out_dir_flag.empty()) cfg.out_dir = out_dir_flag;
        for (const std::string& warning : calibration_warnings(cfg.market)) {
            std::cerr << "warning: " << warning << "\n";
        }
        fs::create_directories(cfg.out_dir);
        const fs::path out_dir(cfg.out_dir);

        if (solve_cmd->parsed()) {
            ScenarioKind kind;
            if (!scenario_from_string(scenario_name, kind)) {
                std::cerr << "error: unknown scenario '" << scenario_name << "'\n";
                return 2;
            }
            const ScenarioResult result = solve_scenario(cfg.market, kind, cfg.optimizer);
            const std::string text = format_scenario_text(cfg.market, result);
            std::cout << text;
            if (cfg.format == OutputFormat::csv) {
                write_csv(as_rows({result}, "baseline", 0.0),
                          (out_dir / (std::string("solve_") + to_string(kind) + ".csv")).string());
            } else {
                write_text_file(out_dir / (std::string("solve_") + to_string(kind) + ".txt"), text);
            }
            if (!result.diagnostic.empty()) {
                std::cerr << "error: " << result.diagnostic << "\n";
                return 1;
            }
            return 0;
        }

        if (compare_cmd->parsed()) {
            const ComparisonTable table = compare_scenarios(cfg.market, cfg.optimizer);
            const std::string text = format_comparison_text(table);
            std::cout << text;
            std::vector<ScenarioResult> results(table.results.begin(), table.results.end());
            // The ranking table is always written; csv mode adds the rows.
            std::ostringstream body;
            body << text << "\n";
            for (const ScenarioResult& r : results) {
                body << format_scenario_text(cfg.market, r) << "\n";
            }
            write_text_file(out_dir / "compare.txt", body.str());
            if (cfg.format == OutputFormat::csv) {
                write_csv(as_rows(results, "baseline", 0.0), (out_dir / "compare.csv").string());
            }
            for (const ScenarioResult& r : results) {
                if (!r.diagnostic.empty()) {
                    std::cerr << "error: " << r.diagnostic << "\n";
                    return 1;
                }
            }
            return 0;
        }

        // sweep
        const std::vector<ScenarioKind> kinds = parse_kinds(sweep_scenarios);
        SweepSpec spec;
        spec.parameter = sweep_param;
        spec.lo = sweep_from;
        spec.hi = sweep_to;
        spec.count = sweep_points;
        const SweepResult result = sweep(cfg.market, spec, kinds, cfg.optimizer);
        const std::string csv_name = "sweep_" + spec.parameter + ".csv";
        write_csv(result.rows, (out_dir / csv_name).string());
        for (const char* metric : kPlotMetrics) {
            write_text_file(out_dir / ("plot_" + spec.parameter + "_" + metric + ".gp"),
                            plot_script(csv_name, spec.parameter, metric, kinds));
        }
        int flagged = 0;
        for (const SweepRow& row : result.rows) {
            if (!row.flag.empty()) ++flagged;
        }
        std::cout << "sweep " << spec.parameter << ": " << result.rows.size() << " rows ("
                  << flagged << " flagged) -> " << (out_dir / csv_name).string() << "\n";
        return 0;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
}
