// Integration tests driving the installed CLI binary end to end through a
// shell: exit codes, golden output lines, JSON stability, and the
// catalog-to-file-to-subcommand pipe flow.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code;
    std::string output;  // stdout and stderr merged
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + ZINBIEL_CLI_PATH " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    const int status = pclose(pipe);
    REQUIRE(status != -1);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

const char* kDim2File = R"({"format":1,"name":"A_2^1","dim":2,"products":[
  {"left":1,"right":1,"result":[{"basis":2,"coeff":"1"}]}]})";

const char* kDim3File = R"({"format":1,"name":"A_3^4","dim":3,"products":[
  {"left":1,"right":2,"result":[{"basis":3,"coeff":"1/2"}]},
  {"left":2,"right":1,"result":[{"basis":3,"coeff":"-1/2"}]}]})";

const char* kNonZinbielFile = R"({"format":1,"name":"bad","dim":2,"products":[
  {"left":1,"right":1,"result":[{"basis":1,"coeff":"1"}]}]})";

// Lazily written on first use; doctest assertions are only legal inside a
// running test case, so nothing here may run at static-initialization time.
void ensure_fixtures() {
    static const bool done = [] {
        write_file("cli_dim2.json", kDim2File);
        write_file("cli_dim3.json", kDim3File);
        write_file("cli_bad.json", kNonZinbielFile);
        write_file("cli_malformed.json", "{nope");
        return true;
    }();
    (void)done;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("argument handling exit codes") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("check").exit_code == 2);  // missing file argument
    CHECK(run_cli("catalog").exit_code == 2);
    CHECK(run_cli("catalog report --format yaml").exit_code == 2);
}

TEST_CASE("catalog list") {
    const CliResult r = run_cli("catalog list");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.output) == 24);
    CHECK(r.output.rfind("A_2^1\n", 0) == 0);
    CHECK(contains(r.output, "A_4^16\n"));
}

TEST_CASE("catalog show emits the canonical file") {
    const CliResult r = run_cli("catalog show 'A_2^1'");
    CHECK(r.exit_code == 0);
    CHECK(r.output == std::string(R"({
  "format": 1,
  "name": "A_2^1",
  "dim": 2,
  "products": [
    {
      "left": 1,
      "right": 1,
      "result": [
        {
          "basis": 2,
          "coeff": "1"
        }
      ]
    }
  ]
}
)"));
}

TEST_CASE("catalog show error paths") {
    const CliResult unknown = run_cli("catalog show 'A_9^9'");
    CHECK(unknown.exit_code == 2);
    CHECK(contains(unknown.output, "unknown catalog id"));

    const CliResult missing = run_cli("catalog show 'A_3^6'");
    CHECK(missing.exit_code == 2);
    CHECK(contains(missing.output, "requires parameter 'lambda'"));

    const CliResult forbidden = run_cli("catalog show 'A_3^6' --param lambda=0");
    CHECK(forbidden.exit_code == 2);
    CHECK(contains(forbidden.output, "constraint violated"));

    const CliResult garbled = run_cli("catalog show 'A_3^6' --param lambda");
    CHECK(garbled.exit_code == 2);
    CHECK(contains(garbled.output, "NAME=VALUE"));
}

TEST_CASE("check verifies the identity and reports violations") {
    ensure_fixtures();
    const CliResult good = run_cli("check cli_dim3.json");
    CHECK(good.exit_code == 0);
    CHECK(contains(good.output, "Zinbiel identity holds on all 27 basis triples"));

    const CliResult bad = run_cli("check cli_bad.json");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "violation at (1, 1, 1)"));

    CHECK(run_cli("check no_such_file.json").exit_code == 2);
    const CliResult malformed = run_cli("check cli_malformed.json");
    CHECK(malformed.exit_code == 2);
    CHECK(contains(malformed.output, "error:"));
}

TEST_CASE("inner prints the symbolic matrix and the dimension") {
    ensure_fixtures();
    const CliResult r = run_cli("inner cli_dim3.json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "a_2  -a_1  0\n"));
    CHECK(contains(r.output, "dim Inn = 2\n"));
    CHECK(contains(r.output, "B[2]:\n"));
}

TEST_CASE("inner --json carries the rendered matrix") {
    ensure_fixtures();
    const CliResult r = run_cli("--json inner cli_dim3.json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("dim_inn") == 2);
    CHECK(doc.at("symbolic_matrix").at(2) ==
          nlohmann::json::array({"a_2", "-a_1", "0"}));
    CHECK(doc.at("basis").size() == 2);
}

TEST_CASE("der and ann subcommands") {
    ensure_fixtures();
    const CliResult der = run_cli("der cli_dim2.json");
    CHECK(der.exit_code == 0);
    CHECK(contains(der.output, "dim Der = 2\n"));

    const CliResult ann = run_cli("ann cli_dim2.json");
    CHECK(ann.exit_code == 0);
    CHECK(contains(ann.output, "dim Ann_L = 1\n"));
    CHECK(contains(ann.output, "(0, 1)\n"));
    CHECK(contains(ann.output, "Ann_L two-sided ideal: yes\n"));
    CHECK(contains(ann.output, "Ann_R two-sided ideal: yes\n"));
}

TEST_CASE("catalog show output feeds straight back into the subcommands") {
    CHECK(run_cli("catalog show 'A_4^1' > cli_a41.json").exit_code == 0);
    const CliResult inner = run_cli("inner cli_a41.json");
    CHECK(inner.exit_code == 0);
    CHECK(contains(inner.output, "dim Inn = 3\n"));

    CHECK(run_cli("catalog show 'A_3^6' --param lambda=1/2 > cli_a36.json").exit_code == 0);
    const CliResult check = run_cli("check cli_a36.json");
    CHECK(check.exit_code == 0);
    CHECK(contains(check.output, "A_3^6 (lambda = 1/2)"));
}

TEST_CASE("props asserts the property battery") {
    ensure_fixtures();
    const CliResult r = run_cli("props cli_a41.json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "zinbiel identity (64 triples): ok"));
    CHECK(contains(r.output, "derivation space: dim 4"));
    CHECK(contains(r.output, "ad generators that are derivations: 2/4"));
    CHECK(contains(r.output, "all contained in Inn"));
    CHECK(contains(r.output, "Jacobi on the commutator bracket: holds"));
    CHECK(contains(r.output, "all checked properties hold"));

    const CliResult json = run_cli("--json props cli_a41.json");
    CHECK(json.exit_code == 0);
    const auto doc = nlohmann::json::parse(json.output);
    CHECK(doc.at("ok") == true);
    CHECK(doc.at("seed") == 1729);
    CHECK(doc.at("dim_der") == 4);
    CHECK(doc.at("diagnostics").at("generators_that_are_derivations") == 2);

    CHECK(run_cli("props cli_bad.json").exit_code == 1);
}

TEST_CASE("seed flag and environment fallback") {
    ensure_fixtures();
    const CliResult flag = run_cli("--seed 7 props cli_dim2.json");
    CHECK(flag.exit_code == 0);
    CHECK(contains(flag.output, "seed 7)"));

    const CliResult env = run_cli("props cli_dim2.json", "env ZINBIEL_SEED=7 ");
    CHECK(contains(env.output, "seed 7)"));

    const CliResult both = run_cli("--seed 7 props cli_dim2.json", "env ZINBIEL_SEED=9 ");
    CHECK(contains(both.output, "seed 7)"));
}

TEST_CASE("global flags are accepted after the subcommand") {
    ensure_fixtures();
    const CliResult seeded = run_cli("props cli_dim2.json --seed 7");
    CHECK(seeded.exit_code == 0);
    CHECK(contains(seeded.output, "seed 7)"));

    const CliResult inner = run_cli("inner cli_dim2.json --json");
    CHECK(inner.exit_code == 0);
    CHECK(nlohmann::json::parse(inner.output).at("dim_inn") == 0);

    const CliResult report = run_cli("catalog report --json");
    CHECK(report.exit_code == 1);
    CHECK(nlohmann::json::parse(report.output).at("rows").size() == 27);
}

TEST_CASE("catalog report flags the published discrepancies") {
    const CliResult r = run_cli("catalog report");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "27 rows: 19 match, 6 dimension-match-matrix-differs, 2 mismatch"));

    const CliResult md = run_cli("catalog report --format markdown");
    CHECK(md.exit_code == 1);
    CHECK(md.output.rfind("| Class | Case |", 0) == 0);
}

TEST_CASE("report json output is byte-stable") {
    const CliResult a = run_cli("catalog report --format json");
    const CliResult b = run_cli("catalog report --format json");
    CHECK(a.exit_code == 1);
    CHECK(a.output == b.output);
    CHECK(nlohmann::json::parse(a.output).at("rows").size() == 27);

    const CliResult flagged = run_cli("--json catalog report");
    CHECK(flagged.output == a.output);
}

} // TEST_SUITE
