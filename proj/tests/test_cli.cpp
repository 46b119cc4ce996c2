#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "ttolab/json_io.hpp"

using namespace ttolab;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(TTOLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    CliResult r;
    r.exit_code = WEXITSTATUS(status);
    r.out = out;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/ttolab_cli_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

const char* kIdentityOperator = R"({
  "basis": {
    "blaschke": {"zeros": [[0.0, 0.0], [0.5, 0.0]], "gamma": 0.0, "mode": "plain"},
    "basis": "kernel"
  },
  "entries": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]
})";

const char* kDiag121 = R"({
  "basis": {
    "blaschke": {"zeros": [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0]], "gamma": 0.0, "mode": "plain"},
    "basis": "monomial"
  },
  "entries": [[[1.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
              [[0.0, 0.0], [2.0, 0.0], [0.0, 0.0]],
              [[0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]]
})";

}  // namespace

TEST_CASE("verify subcommand reports a passing verdict") {
    const auto r = run_cli("verify --name zn --seed 7 --trials 3");
    CHECK(r.exit_code == 0);
    const Json j = parse_json_text(r.out);
    CHECK(j["name"] == "zn");
    CHECK(j["verdict"] == "pass");
    CHECK(j["config"]["seed"] == 7);
}

TEST_CASE("verify output is deterministic byte for byte") {
    const std::string args = "verify --name finite-blaschke --seed 11 --trials 3";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("check subcommands classify the worked examples") {
    const auto id_path = write_temp("identity.json", kIdentityOperator);
    CHECK(run_cli("check-tto " + id_path).exit_code == 0);
    CHECK(run_cli("check-csym " + id_path).exit_code == 0);

    const auto diag_path = write_temp("diag121.json", kDiag121);
    const auto csym = run_cli("check-csym " + diag_path);
    CHECK(csym.exit_code == 0);
    CHECK(parse_json_text(csym.out)["verdict"] == "pass");

    const auto tto = run_cli("check-tto " + diag_path);
    CHECK(tto.exit_code == 1);
    const Json tj = parse_json_text(tto.out);
    CHECK(tj["verdict"] == "fail");
    CHECK(tj["residual"].get<double>() > 0.1);
}

TEST_CASE("malformed and missing input map to exit code two") {
    const auto bad_path = write_temp("broken.json", "{this is not json");
    const auto r = run_cli("check-csym " + bad_path);
    CHECK(r.exit_code == 2);
    const Json j = parse_json_text(r.out);
    CHECK(j["error"]["kind"] == "InvalidArgument");

    CHECK(run_cli("check-csym /nonexistent/op.json").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
    CHECK(run_cli("verify --name no-such-theorem").exit_code == 2);
}

TEST_CASE("generate produces parseable instances with the right classification") {
    const std::string out = "/tmp/ttolab_cli_gen.json";
    for (const std::string kind :
         {"tto", "chain-csym", "top-csym-only", "toeplitz", "perturbed"}) {
        const auto g =
            run_cli("generate --kind " + kind + " --seed 5 --degree 3 --out " + out);
        REQUIRE(g.exit_code == 0);
        const auto M = operator_from_json(load_json_file(out));
        CHECK(M.dim() == 3);

        const int tto_exit = run_cli("check-tto " + out).exit_code;
        if (kind == "tto" || kind == "chain-csym" || kind == "toeplitz") {
            CHECK(tto_exit == 0);
        } else {
            CHECK(tto_exit == 1);
        }
        if (kind == "top-csym-only") {
            CHECK(run_cli("check-csym " + out).exit_code == 0);
        }
    }
    CHECK(run_cli("generate --kind top-csym-only --seed 5 --degree 2").exit_code == 2);
}

TEST_CASE("out file and stdout carry the same bytes") {
    const std::string out = "/tmp/ttolab_cli_report.json";
    const auto r = run_cli("verify --name example3 --seed 3 --trials 2 --out " + out);
    CHECK(r.exit_code == 0);
    CHECK(read_file(out) == r.out);
}

TEST_CASE("eval prints the closed-form value") {
    const auto b_path = write_temp(
        "b05.json", R"({"zeros": [[0.0, 0.0], [0.5, 0.0]], "gamma": 0.0, "mode": "plain"})");
    const auto r = run_cli("eval " + b_path + " --z 0.2 0.0");
    CHECK(r.exit_code == 0);
    const Json j = parse_json_text(r.out);
    const Complex value = complex_from_json(j["value"]);
    CHECK(std::abs(value - Complex(-1.0 / 15.0, 0.0)) < 1e-12);
}

TEST_CASE("inverted tolerance band is rejected as invalid input") {
    CHECK(run_cli("verify --name zn --seed 1 --trials 2 --tol 1e-3").exit_code == 2);
}

TEST_CASE("compress emits an operator that stays a tto") {
    const std::string gen = "/tmp/ttolab_cli_tto4.json";
    REQUIRE(run_cli("generate --kind tto --seed 9 --degree 4 --out " + gen).exit_code == 0);
    const std::string sub = "/tmp/ttolab_cli_tto4_sub.json";
    const auto c = run_cli("compress " + gen + " --degree 3 --out " + sub);
    CHECK(c.exit_code == 0);
    const auto M = operator_from_json(load_json_file(sub));
    CHECK(M.dim() == 3);
    CHECK(run_cli("check-tto " + sub).exit_code == 0);
}
