#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const std::string cmd = std::string(FIBERCAV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path temp_file(const char* name) {
    return fs::temp_directory_path() / (std::string("fibercav_cli_test_") + name);
}

int count_data_rows(const fs::path& csv, std::string* header = nullptr) {
    std::ifstream in(csv);
    REQUIRE(in.good());
    std::string line;
    int rows = 0;
    bool seen_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!seen_header) {
            seen_header = true;
            if (header) *header = line;
            continue;
        }
        ++rows;
    }
    return rows;
}

}  // namespace

TEST_CASE("list-scenarios prints the nine builtin names") {
    const CommandResult r = run_cli("list-scenarios");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "fig2\nfig3\nfig4\nfig5\nfig6\nfig7\nfig8\nfig9\nfig10\n");
}

TEST_CASE("run writes the contracted csv") {
    const fs::path out = temp_file("fig4.csv");
    const CommandResult r =
        run_cli("run --scenario fig4 --out " + out.string());
    CHECK(r.exit_code == 0);
    std::string header;
    CHECK(count_data_rows(out, &header) == 200);
    CHECK(header == "coord,G,gamma,delta_a,delta_c,N_cav,g2,P_e,P_out,n_max,path");
    fs::remove(out);
}

TEST_CASE("run to stdout with overrides") {
    const CommandResult r = run_cli(
        "run --scenario fig5 --set scan.points=4 --set solver=analytic");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("coord,G,gamma,delta_a,delta_c,N_cav,g2,P_e,P_out,n_max,path") !=
          std::string::npos);
    CHECK(r.output.find("# scan.points = 4") != std::string::npos);
}

TEST_CASE("config file and overlay match the builtin equivalent") {
    const fs::path cfg = temp_file("overlay.cfg");
    {
        std::ofstream out(cfg);
        out << "scenario=fig3\n"
               "cavity.length_m=0.001\n"
               "scan.points=3\n"
               "solver=analytic\n";
    }
    const CommandResult overlaid = run_cli("run --config " + cfg.string());
    const CommandResult direct = run_cli(
        "run --scenario fig8 --set scan.points=3 --set solver=analytic");
    CHECK(overlaid.exit_code == 0);

    // identical data rows (metadata differs in the scenario name)
    const auto data_of = [](const std::string& text) {
        std::istringstream is(text);
        std::string line, data;
        while (std::getline(is, line))
            if (!line.empty() && line[0] != '#') data += line + "\n";
        return data;
    };
    CHECK(data_of(overlaid.output) == data_of(direct.output));
    fs::remove(cfg);
}

TEST_CASE("check mode reports the gap and exits accordingly") {
    const CommandResult r = run_cli("run --scenario fig2a --check");
    const auto pos = r.output.find("relative gap:");
    REQUIRE(pos != std::string::npos);
    const double gap_percent = std::strtod(r.output.c_str() + pos + 13, nullptr);
    CHECK(gap_percent > 0.0);
    CHECK(r.exit_code == (gap_percent < 1.0 ? 0 : 1));
}

TEST_CASE("plot script lands next to the csv") {
    const fs::path out = temp_file("fig3.csv");
    const CommandResult r = run_cli(
        "run --scenario fig3 --set scan.points=3 --set solver=analytic --plot-script --out " +
        out.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(out));
    const fs::path script = out.string() + ".gnuplot";
    CHECK(fs::exists(script));
    fs::remove(out);
    fs::remove(script);
}

TEST_CASE("exit codes distinguish usage, config and solver errors") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("run --no-such-flag").exit_code == 2);
    CHECK(run_cli("run --scenario fig99").exit_code == 3);
    CHECK(run_cli("run --scenario fig3 --set bogus.key=1").exit_code == 3);
    CHECK(run_cli("run --scenario fig3 --set drive.power_pW=oops").exit_code == 3);
    CHECK(run_cli("run --config /no/such/file.cfg").exit_code == 3);
    CHECK(run_cli("run --scenario fig3 --format json").exit_code == 3);
    // a 400 nm core is multimode at 852 nm: solver-class failure
    CHECK(run_cli("run --scenario fig3 --set fiber.core_radius_nm=400").exit_code == 4);
}

TEST_CASE("selftest passes") {
    const CommandResult r = run_cli("selftest");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("ok") != std::string::npos);
}
