#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* cli_binary() {
    const char* bin = std::getenv("FRACSL_CLI_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "FRACSL_CLI_BIN must point at the fracsl binary");
    return bin;
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
    static int counter = 0;
    const std::string out_path = "cli_stdout_" + std::to_string(counter) + ".txt";
    const std::string err_path = "cli_stderr_" + std::to_string(counter) + ".txt";
    ++counter;

    const std::string command = env_prefix + " '" + std::string(cli_binary()) + "' " + args +
                                " > " + out_path + " 2> " + err_path;
    const int status = std::system(command.c_str());

    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_file(out_path);
    r.err = read_file(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.push_back("");
        rows.push_back(fields);
    }
    return rows;
}

}  // namespace

TEST_CASE("solve emits the power-law column as csv") {
    auto r = run_cli("solve --alpha 0.7 --lambda 0 --q \"0\" --n 8");
    REQUIRE(r.exit_code == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 10);  // header + 9 nodes
    CHECK(rows[0] == std::vector<std::string>{"t", "f"});
    for (std::size_t i = 0; i <= 8; ++i) {
        REQUIRE(rows[i + 1].size() == 2);
        const double t = std::stod(rows[i + 1][0]);
        const double f = std::stod(rows[i + 1][1]);
        CHECK(t == doctest::Approx(i / 8.0).epsilon(1e-9));
        CHECK(f == doctest::Approx(std::pow(i / 8.0, 0.7)).epsilon(1e-8));
    }
}

TEST_CASE("solve reproduces the published midpoint value") {
    auto r = run_cli("solve --alpha 0.5 --lambda -3 --q \"0\" --b 1 --L 1 --n 256");
    REQUIRE(r.exit_code == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 258);
    const auto& mid = rows[1 + 128];
    CHECK(std::stod(mid[0]) == 0.5);
    CHECK(std::stod(mid[1]) == doctest::Approx(4.73052344).epsilon(1e-6));
}

TEST_CASE("output is byte-identical across runs and worker counts") {
    const std::string args = "solve --alpha 0.4 --lambda -2 --q \"sin(pi*t)\" --n 64";
    auto a = run_cli(args);
    auto b = run_cli(args);
    auto c = run_cli(args, "FRACSL_THREADS=1");
    auto d = run_cli(args, "FRACSL_THREADS=7");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.out == d.out);
}

TEST_CASE("solve writes the same bytes to a file") {
    auto direct = run_cli("solve --alpha 0.3 --lambda -1 --q \"0\" --n 16");
    const char* path = "cli_file_out.csv";
    auto filed = run_cli(std::string("solve --alpha 0.3 --lambda -1 --q \"0\" --n 16 -o ") +
                         path);
    REQUIRE(filed.exit_code == 0);
    CHECK(filed.out.empty());
    CHECK(read_file(path) == direct.out);
    std::remove(path);
}

TEST_CASE("study emits the dt,probe,f,p schema with golden tail value") {
    auto r = run_cli(
        "study --alpha 0.6 --lambda -5 --q \"0\" --n-list 64,128,256 --probes 3/4");
    REQUIRE(r.exit_code == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"dt", "probe", "f", "p"});
    for (std::size_t l = 1; l <= 3; ++l) REQUIRE(rows[l].size() == 4);
    CHECK(rows[1][3].empty());   // coarsest level: no rate
    CHECK(!rows[2][3].empty());  // middle level carries the rate
    CHECK(rows[3][3].empty());
    CHECK(std::stod(rows[1][0]) == doctest::Approx(1.0 / 64).epsilon(1e-12));
    CHECK(std::stod(rows[3][1]) == 0.75);
    CHECK(std::stod(rows[3][2]) == doctest::Approx(-0.79882549).epsilon(2e-6));
}

TEST_CASE("json mode carries config, grid and full-precision values") {
    auto r = run_cli("solve --alpha 0.5 --lambda -3 --q \"0\" --n 32 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["mode"] == "solve");
    CHECK(j["config"]["alpha"] == 0.5);
    CHECK(j["config"]["n"] == 32);
    CHECK(j["grid"]["intervals"] == 32);
    REQUIRE(j["values"].size() == 33);
    CHECK(j["values"][0].get<double>() == 0.0);
    CHECK(j["values"][32].get<double>() == 1.0);

    auto s = run_cli(
        "study --alpha 0.5 --lambda -3 --q \"0\" --n-list 32,64,128 --format json");
    REQUIRE(s.exit_code == 0);
    auto js = nlohmann::json::parse(s.out);
    REQUIRE(js["ladders"].size() == 3);  // default quarter probes
    CHECK(js["ladders"][0]["probe"] == "1/4");
    CHECK(js["ladders"][1]["levels"].size() == 3);
    CHECK(js["ladders"][1]["rates"].size() == 1);
    CHECK(js["grid"]["intervals"] == 128);
}

TEST_CASE("validate passes on sane input") {
    auto r = run_cli("validate");
    REQUIRE_MESSAGE(r.exit_code == 0, r.out, r.err);
    CHECK(r.out.find("weight_row_sum: PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("exit code 1 for domain and parse errors") {
    CHECK(run_cli("solve --alpha 1.5 --lambda -3 --n 16").exit_code == 1);
    CHECK(run_cli("solve --alpha 0.5 --lambda -3 --q \"2t\" --n 16").exit_code == 1);
    CHECK(run_cli("solve --alpha 0.5 --lambda -3 --q \"1/t\" --n 16").exit_code == 1);
    CHECK(run_cli("solve --lambda -3 --n 16").exit_code == 1);  // missing required flag
    CHECK(run_cli("study --alpha 0.5 --lambda -3 --n-list 64,100").exit_code == 1);
    CHECK(run_cli("study --alpha 0.5 --lambda -3 --n-list 64,128 --probes 1/5").exit_code ==
          1);
    CHECK(run_cli("validate --lambda -9.869604401089358").exit_code == 1);  // resonant
    auto r = run_cli("solve --alpha 1.5 --lambda -3 --n 16");
    CHECK(!r.err.empty());
}

TEST_CASE("exit code 2 for numerical failures") {
    auto r = run_cli("study --alpha 0.5 --lambda 0 --q \"0\" --n-list 16,32,64");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("degenerate") != std::string::npos);
}

TEST_CASE("help is exit code 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("solve --help").exit_code == 0);
}
