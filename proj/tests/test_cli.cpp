// End-to-end tests of the avgfid executable: golden reports, determinism
// across runs, and the 0/1/2 exit-code contract.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "run_cli.hpp"

using avgfid::testing::read_text_file;
using avgfid::testing::run_cli;

namespace {

const std::string kCli = AVGFID_CLI_PATH;
const std::string kFixtures = AVGFID_FIXTURE_DIR;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

struct GoldenCase {
    const char* name;
    std::string command;
};

const GoldenCase kGoldenCases[] = {
    {"depolarizing_mc.json",
     " compute --channel " + fixture("depolarizing.json") + " --gate " + fixture("gate_identity.json") +
         " --method mc --samples 2000 --seed 7"},
    {"kraus_identity_exact.json",
     " compute --channel " + fixture("kraus_identity.json") + " --gate " + fixture("gate_shift.json") +
         " --method exact"},
    {"composed_experiment.json",
     " compute --channel " + fixture("composed.json") + " --gate " + fixture("gate_identity.json") +
         " --method experiment --shots 500 --repeats 5 --seed 3"},
    {"depolarizing_twirl.json",
     " twirl --channel " + fixture("depolarizing.json") + " --unitaries 1000 --seed 3"},
};

}  // namespace

TEST_CASE("golden reports are byte-stable across runs and match the stored files") {
    for (const auto& test : kGoldenCases) {
        CAPTURE(test.name);
        const auto first = run_cli(kCli + test.command);
        const auto second = run_cli(kCli + test.command);
        REQUIRE(first.exit_code == 0);
        CHECK(first.stdout_text == second.stdout_text);
        CHECK(first.stdout_text == read_text_file(fixture("golden/" + std::string(test.name))));
    }
}

TEST_CASE("compute exact emits the closed-form values") {
    const auto result = run_cli(kCli + " compute --channel " + fixture("depolarizing.json") + " --gate " +
                                fixture("gate_identity.json") + " --method exact");
    REQUIRE(result.exit_code == 0);
    CHECK(result.stdout_text.find("\"value\":9.49999999999999") != std::string::npos);
    CHECK(result.stdout_text.find("\"method\":\"eq12\"") != std::string::npos);
}

TEST_CASE("--out writes the same bytes as stdout") {
    const std::string out_path = "/tmp/avgfid_cli_test_report.json";
    const std::string base = kCli + " compute --channel " + fixture("depolarizing.json") + " --gate " +
                             fixture("gate_identity.json") + " --method exact";
    const auto to_stdout = run_cli(base);
    const auto to_file = run_cli(base + " --out " + out_path);
    REQUIRE(to_file.exit_code == 0);
    CHECK(to_file.stdout_text.empty());
    CHECK(read_text_file(out_path) == to_stdout.stdout_text);
}

TEST_CASE("validate reports invariants and exit code 0") {
    const auto result = run_cli(kCli + " validate --channel " + fixture("composed.json"));
    CHECK(result.exit_code == 0);
    CHECK(result.stdout_text.find("\"valid\":true") != std::string::npos);
    CHECK(result.stdout_text.find("\"kraus_count\":4") != std::string::npos);
}

TEST_CASE("exit code 1 for semantic violations") {
    CHECK(run_cli(kCli + " validate --channel " + fixture("bad_semantic.json")).exit_code == 1);
    // mc without --seed is a semantic failure of the request.
    CHECK(run_cli(kCli + " compute --channel " + fixture("depolarizing.json") + " --gate " +
                  fixture("gate_identity.json") + " --method mc --samples 100")
              .exit_code == 1);
    // Gate dimension mismatch.
    CHECK(run_cli(kCli + " compute --channel " + fixture("depolarizing.json") +
                  " --gate /dev/null --method exact")
              .exit_code == 2);
}

TEST_CASE("exit code 2 for parse and usage failures") {
    CHECK(run_cli(kCli + " validate --channel " + fixture("bad_syntax.json")).exit_code == 2);
    CHECK(run_cli(kCli + " validate --channel /nonexistent.json").exit_code == 2);
    CHECK(run_cli(kCli + " validate").exit_code == 2);           // missing required option
    CHECK(run_cli(kCli + " frobnicate").exit_code == 2);         // unknown subcommand
    CHECK(run_cli(kCli).exit_code == 2);                         // missing subcommand
}
