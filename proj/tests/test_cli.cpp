#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string out_path = "cli_test_stdout.txt";
    std::string cmd = std::string(PSALG_CLI_BIN) + " " + args + " > " + out_path + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_path.c_str());
#ifdef _WIN32
    return {rc, ss.str()};
#else
    return {WEXITSTATUS(rc), ss.str()};
#endif
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("analyze emits the expected verdicts") {
    auto r = run_cli("analyze --family heisenberg --m 1 --p 5");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["classes"]["strong_class"] == 5);
    CHECK(j["classes"]["lie_class"] == 5);
    CHECK(j["formula"]["strong_class"] == 5);
}

TEST_CASE("analyze from a JSON file") {
    const char* path = "cli_test_algebra.json";
    {
        std::ofstream f(path);
        f << R"({"schema":1,"p":5,"type":"lie","dim":3,"labels":["x","y","z"],)"
          << R"("brackets":[{"i":0,"j":1,"value":[{"k":2,"c":1}]}],"construct":{"kind":"s"}})";
    }
    auto r = run_cli(std::string("analyze --file ") + path);
    std::remove(path);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["ring"]["dim"] == 125);
}

TEST_CASE("exit codes: bad arguments and parse errors give 2") {
    CHECK(run_cli("analyze").exit_code == 2);
    CHECK(run_cli("analyze --family bogus --p 5").exit_code == 2);
    CHECK(run_cli("analyze --family heisenberg --m 1 --p 6").exit_code == 2);
    CHECK(run_cli("verify no-such-suite").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("exit code 3 on budget exhaustion") {
    auto r = run_cli("analyze --family filiform --n 4 --p 7 --budget 100");
    CHECK(r.exit_code == 3);
}

TEST_CASE("verify suite passes and reports per-check lines") {
    auto r = run_cli("verify class-formula");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    auto rj = run_cli("verify class-formula --format json");
    REQUIRE(rj.exit_code == 0);
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["pass"] == true);
}

TEST_CASE("census output is deterministic and versioned") {
    const char* out1 = "cli_test_census1.csv";
    const char* out2 = "cli_test_census2.csv";
    std::string args = "census --family heisenberg --p 2,3 --m 1..2 --out ";
    REQUIRE(run_cli(args + out1).exit_code == 0);
    REQUIRE(run_cli(args + out2).exit_code == 0);
    std::string a = read_file(out1), b = read_file(out2);
    std::remove(out1);
    std::remove(out2);
    CHECK(a == b);
    CHECK(a.rfind("# psalg 1.0.0\n", 0) == 0);
    CHECK(a.find("family,params,p,dim,strong_class,lie_class,solv_len,"
                 "strong_solv_len,formula,lower_bound,status") != std::string::npos);
    // 2 primes x 2 values of m
    int rows = 0;
    for (char c : a) rows += c == '\n';
    CHECK(rows == 6); // version line + header + 4 data rows
}

TEST_CASE("census jsonl format") {
    const char* out = "cli_test_census.jsonl";
    auto r = run_cli(std::string("census --family heisenberg --p 5 --m 1 --format jsonl --out ") + out);
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(read_file(out));
    std::remove(out);
    std::string first, second;
    REQUIRE(std::getline(lines, first));
    REQUIRE(std::getline(lines, second));
    CHECK(nlohmann::json::parse(first)["engine_version"] == "psalg 1.0.0");
    auto row = nlohmann::json::parse(second);
    CHECK(row["strong_class"] == 5);
    CHECK(row["status"] == "ok");
}

TEST_CASE("identity subcommand") {
    auto r = run_cli("identity st4 --family heisenberg --m 1 --p 3");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"]["satisfied"] == true);
    CHECK(j["verdict"]["sampled"] == false);

    // a failing identity exits 1 and carries a counterexample
    auto f = run_cli("identity st2 --family hamiltonian --m 1 --p 2 --construct hamiltonian");
    CHECK(f.exit_code == 1);
    auto fj = nlohmann::json::parse(f.out);
    CHECK(fj["verdict"]["satisfied"] == false);
    CHECK(fj["verdict"]["counterexample"].is_array());

    // sample mode demands an explicit seed
    CHECK(run_cli("identity st4 --family heisenberg --m 2 --p 3 --mode sample --trials 10")
              .exit_code == 2);
    auto s = run_cli("identity st4 --family heisenberg --m 2 --p 3 --mode sample "
                     "--trials 10 --seed 1");
    REQUIRE(s.exit_code == 0);
    CHECK(nlohmann::json::parse(s.out)["verdict"]["sampled"] == true);
}
