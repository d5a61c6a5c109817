#include "catch_amalgamated.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "qperiod/catalog.hpp"
#include "qperiod/linkfile.hpp"

using namespace qperiod;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("QPERIOD_CLI");
    REQUIRE(cli != nullptr);
    std::string cmd = std::string(cli) + " " + args + " > cli_out.txt 2> cli_err.txt";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp("cli_out.txt");
    r.err = slurp("cli_err.txt");
    return r;
}

std::string data(const std::string& name) {
    const char* dir = std::getenv("QPERIOD_DATA");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("data files match the built-in diagrams") {
    CHECK(load_link_file(data("unknot.json")).pd == catalog::unknot().pd);
    CHECK(load_link_file(data("trefoil_right_plus1.json")).pd == catalog::trefoil_right(1).pd);
    CHECK(load_link_file(data("trefoil_left.json")).pd.component_count() == 1);
    CHECK(load_link_file(data("hopf_positive.json")).pd == catalog::hopf_positive().pd);
}

TEST_CASE("bracket command") {
    auto r = run_cli("bracket " + data("unknot.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");

    r = run_cli("bracket --renormalized " + data("unknot.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-A^-2 - A^2\n");

    r = run_cli("bracket " + data("trefoil_left.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-A^-5 - A^3 + A^7\n");
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run_cli("bracket " + data("malformed.json")).exit_code == 2);
    CHECK(contains(run_cli("bracket " + data("malformed.json")).err, "MalformedDiagram"));
    CHECK(run_cli("bracket /nonexistent/file.json").exit_code == 2);
    CHECK(run_cli("invariant " + data("unknot.json") + " --p 4").exit_code == 2);
    CHECK(run_cli("bracket").exit_code == 2);
}

TEST_CASE("crossing cap exits with code 3") {
    CHECK(run_cli("--max-crossings 2 bracket " + data("trefoil_left.json")).exit_code == 3);
}

TEST_CASE("jones command") {
    CHECK(run_cli("jones " + data("unknot.json")).out == "1\n");
    CHECK(run_cli("jones " + data("hopf_positive.json")).out == "-t^1/2 - t^5/2\n");
    CHECK(run_cli("jones " + data("trefoil_left.json")).out == "-t^-4 + t^-3 + t^-1\n");
}

TEST_CASE("brieskorn and invariant commands agree") {
    auto b5 = run_cli("brieskorn --n 3 --p 5");
    CHECK(b5.exit_code == 0);
    CHECK(b5.out == "1 - 2A + 2A^2 - A^3\n");
    CHECK(run_cli("brieskorn --n 3 --p 7").out == "-2 + A + 2A^3 - A^4\n");

    auto inv = run_cli("invariant " + data("trefoil_right_plus1.json") + " --p 5");
    CHECK(inv.exit_code == 0);
    CHECK(inv.out == b5.out);

    // Deterministic: identical invocations produce identical bytes.
    CHECK(run_cli("brieskorn --n 3 --p 5").out == b5.out);

    // Observed colored component on a +1-framed unknot.
    CHECK(run_cli("invariant " + data("colored_observed.json") + " --p 7").exit_code == 0);
}

TEST_CASE("report files round-trip") {
    auto r = run_cli("invariant " + data("trefoil_right_plus1.json") + " --p 5 --out cli_report.json");
    REQUIRE(r.exit_code == 0);
    Json j;
    {
        std::ifstream in("cli_report.json");
        in >> j;
    }
    ReportFile parsed = parse_report_file(j);
    CHECK(parsed.criterion == "invariant");
    CHECK(parsed.p == 5);
    CHECK(parsed.verdict == "computed");
    CHECK(parsed.ring == "Z[A]/Phi_10");
    CHECK(parsed.invariant ==
          std::map<long long, std::string>{{0, "1"}, {1, "-2"}, {2, "2"}, {3, "-1"}});
    CHECK(parse_report_file(report_file_json(parsed)) == parsed);
}

TEST_CASE("check subcommand verdicts keep exit code 0") {
    auto fail7 = run_cli("check --brieskorn 3 --p 7");
    CHECK(fail7.exit_code == 0);
    CHECK(contains(fail7.out, "FAIL"));
    CHECK(contains(fail7.out, "not 7-periodic"));

    auto pass5 = run_cli("check --brieskorn 3 --p 5 --json cli_check5.json");
    CHECK(pass5.exit_code == 0);
    CHECK(contains(pass5.out, "PASS"));
    CHECK(contains(pass5.out, "4"));
    ReportFile rep;
    {
        std::ifstream in("cli_check5.json");
        Json j;
        in >> j;
        rep = parse_report_file(j);
    }
    CHECK(rep.criterion == "manifold");
    CHECK(rep.verdict == "pass");
    CHECK(rep.passing_j == std::vector<long long>{4});
    CHECK(rep.ring == "Z/5[A]/Phi_10");

    auto link = run_cli("check --link " + data("trefoil_left.json") + " --p 5");
    CHECK(link.exit_code == 0);
    CHECK(contains(link.out, "jones criterion at p=5: FAIL"));
    CHECK(contains(link.out, "bracket-with-writhe criterion at p=5: FAIL"));

    auto manifold = run_cli("check --manifold " + data("trefoil_right_plus1.json") + " --p 5");
    CHECK(manifold.exit_code == 0);
    CHECK(contains(manifold.out, "PASS"));
}

TEST_CASE("poincare scan command") {
    auto r = run_cli("check --poincare-scan --max-p 13");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "p=5: pass"));
    CHECK(contains(r.out, "p=7: fail"));
    CHECK(contains(r.out, "p=11: fail"));
    CHECK(contains(r.out, "p=13: fail"));
}

TEST_CASE("experiment command") {
    auto r = run_cli("check --experiment --jobs 2 --json cli_experiment.json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "pairs: 108"));
    CHECK(contains(r.out, "criterion holds: 37"));
    CHECK(contains(r.out, "divisibility pairs: 27"));
    Json j;
    {
        std::ifstream in("cli_experiment.json");
        in >> j;
    }
    CHECK(j["totals"]["pairs"] == 108);
    CHECK(j["totals"]["passes"] == 37);
    CHECK(j["rows"].size() == 108);
}
