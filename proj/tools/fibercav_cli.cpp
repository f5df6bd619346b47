#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fibercav/run_config.hpp"
#include "fibercav/selftest.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;
constexpr int kExitSolver = 4;

struct RunOptions {
    std::string scenario;
    std::string config_path;
    std::vector<std::string> sets;
    std::string out_path = "-";
    std::string format = "csv";
    bool check = false;
    bool plot_script = false;
    int verbose = 0;
    int jobs = 0;
};

int do_run(const RunOptions& opt) {
    std::string text;
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) {
            std::cerr << "config error: cannot read " << opt.config_path << "\n";
            return kExitConfig;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    std::vector<std::string> overrides;
    if (!opt.scenario.empty()) overrides.push_back("scenario=" + opt.scenario);
    overrides.insert(overrides.end(), opt.sets.begin(), opt.sets.end());
    if (opt.check) overrides.push_back("solver=both");
    if (opt.format != "csv") {
        std::cerr << "config error: unsupported output format '" << opt.format << "'\n";
        return kExitConfig;
    }

    fibercav::Scenario scenario = fibercav::parse_config(text, overrides);
    if (opt.verbose > 0)
        std::cerr << "running scenario " << scenario.name << " (" << scenario.points
                  << " points)\n";
    const fibercav::SweepResult result = fibercav::run_scenario(scenario, opt.jobs);

    for (const auto& rec : result.records)
        if (!rec.error.empty())
            std::cerr << "warning: point " << fibercav::format_value(rec.coord)
                      << " failed: " << rec.error << "\n";

    if (opt.check) {
        const double gap = fibercav::max_exact_analytic_gap(result);
        std::cout << "max exact-vs-analytic relative gap: "
                  << fibercav::format_value(gap * 100.0) << " %\n";
        return gap < 0.01 ? 0 : 1;
    }

    if (opt.out_path == "-") {
        fibercav::write_csv(std::cout, result);
    } else {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "config error: cannot write " << opt.out_path << "\n";
            return kExitConfig;
        }
        fibercav::write_csv(out, result);
        if (!out) {
            std::cerr << "config error: write failed for " << opt.out_path << "\n";
            return kExitConfig;
        }
    }
    if (opt.plot_script) {
        if (opt.out_path == "-") {
            std::cerr << "config error: --plot-script needs --out FILE\n";
            return kExitConfig;
        }
        const std::string script_path = opt.out_path + ".gnuplot";
        std::ofstream script(script_path, std::ios::binary);
        fibercav::write_plot_script(script, opt.out_path, result);
        if (!script) {
            std::cerr << "config error: write failed for " << script_path << "\n";
            return kExitConfig;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Atom-coupled fiber-Bragg-grating cavity simulator"};
    app.require_subcommand(1);

    RunOptions opt;
    CLI::App* run = app.add_subcommand("run", "run a scenario or a custom sweep");
    run->add_option("--scenario", opt.scenario, "builtin scenario name");
    run->add_option("--config", opt.config_path, "key=value configuration file");
    run->add_option("--set", opt.sets, "key=value override (repeatable)");
    run->add_option("--out", opt.out_path, "output CSV path, '-' for stdout");
    run->add_option("--format", opt.format, "output format (csv)");
    run->add_flag("-v,--verbose", opt.verbose, "echo the resolved scenario to stderr");
    run->add_flag("--check", opt.check,
                  "print the max exact-vs-analytic gap; exit 0 iff below 1%");
    run->add_flag("--plot-script", opt.plot_script,
                  "write a gnuplot script next to the CSV");
    run->add_option("--jobs", opt.jobs, "worker threads (0 = all cores)");

    CLI::App* list = app.add_subcommand("list-scenarios", "print builtin scenario names");
    CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suite summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (list->parsed()) {
            for (const auto& s : fibercav::builtin_scenarios())
                std::cout << s.name << "\n";
            return 0;
        }
        if (selftest->parsed())
            return fibercav::run_selftest(std::cout) == 0 ? 0 : kExitSolver;
        return do_run(opt);
    } catch (const fibercav::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const fibercav::SimulationError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    }
}
