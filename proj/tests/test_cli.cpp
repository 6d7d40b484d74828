#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "reps/report.hpp"
#include "reps/word.hpp"

using namespace reps;

namespace {

struct CmdResult {
    int rc = -1;
    std::string out;  // stdout and stderr interleaved
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(REPS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::filesystem::path temp_file(const std::string& name, const std::string& bytes) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out.write(bytes.data(), std::streamsize(bytes.size()));
    return path;
}

}  // namespace

TEST_CASE("analyze emits parseable json identical to the library report") {
    const CmdResult res = run_cli("analyze --gen wk --param 4 --format json");
    REQUIRE(res.rc == 0);
    const AnalysisReport parsed = parse_report(res.out);
    const AnalysisReport direct =
        analyze_word(wk_word(4), "wk(4)", {1, 2, 3, 4, 5, 6, 7, 8}, 3, false, "wk", 4);
    CHECK(parsed == direct);
}

TEST_CASE("analyze csv and text modes") {
    const CmdResult csv = run_cli("analyze --word 01011010 --format csv");
    REQUIRE(csv.rc == 0);
    CHECK(csv.out ==
          "start,end,period,exp_num,exp_den,class,gen_left,gen_right,alpha,sigma\n"
          "1,4,2,2,1,primary,,,,\n"
          "2,7,3,2,1,primary,,,,\n"
          "4,5,1,2,1,primary,,,,\n"
          "5,8,2,2,1,primary,,,,\n");

    const CmdResult text = run_cli("analyze --word abc --lambda 1");
    REQUIRE(text.rc == 0);
    CHECK(text.out.find("runs: 0 (0 primary, 0 secondary)") != std::string::npos);
}

TEST_CASE("analyze check flag reports and gates the exit code") {
    const CmdResult res = run_cli("analyze --gen wk --param 10 --lambda 1 --check");
    REQUIRE(res.rc == 0);
    CHECK(res.out.find("checks: 29/29 passed") != std::string::npos);
}

TEST_CASE("file input in byte and code-point modes") {
    const auto raw = temp_file("reps_cli_raw.bin", "01011010");
    const CmdResult byte_mode = run_cli("analyze --file " + raw.string() + " --format csv");
    REQUIRE(byte_mode.rc == 0);
    CHECK(byte_mode.out.find("5,8,2,2,1,primary") != std::string::npos);

    // Two-byte code points: 4 code points vs 8 raw bytes.
    const auto utf8 = temp_file("reps_cli_utf8.txt", "\xCE\xB1\xCE\xB1\xCE\xB2\xCE\xB2");
    const CmdResult bytes = run_cli("analyze --file " + utf8.string() + " --format json");
    REQUIRE(bytes.rc == 0);
    CHECK(parse_report(bytes.out).length == 8);
    const CmdResult points = run_cli("analyze --file " + utf8.string() + " --text --format json");
    REQUIRE(points.rc == 0);
    const AnalysisReport rep = parse_report(points.out);
    CHECK(rep.length == 4);
    CHECK(rep.alphabet == 2);
    REQUIRE(rep.runs.size() == 2);  // the two doubled letters

    const CmdResult missing = run_cli("analyze --file /nonexistent/path");
    CHECK(missing.rc == 2);

    std::filesystem::remove(raw);
    std::filesystem::remove(utf8);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("analyze --word a --format yaml").rc == 2);
    CHECK(run_cli("analyze --word a --file /etc/hosts").rc == 2);
    CHECK(run_cli("analyze").rc == 2);
    CHECK(run_cli("analyze --gen wk").rc == 2);
    CHECK(run_cli("analyze --gen nosuch --param 3").rc == 2);
    CHECK(run_cli("analyze --word a --factor 2").rc == 2);
    CHECK(run_cli("").rc == 2);
    CHECK(run_cli("verify --exhaustive 2").rc == 2);
    CHECK(run_cli("verify --random 1,2").rc == 2);
    CHECK(run_cli("conjecture").rc == 2);
    CHECK(run_cli("conjecture --maxruns 2,3 --factor-sweep 3").rc == 2);
    CHECK(run_cli("conjecture --maxruns 1,5").rc == 2);
    CHECK(run_cli("conjecture --factor-sweep 2").rc == 2);
    CHECK(run_cli("--help").rc == 0);
}

TEST_CASE("verify subcommand") {
    const CmdResult empty = run_cli("verify");
    REQUIRE(empty.rc == 0);
    CHECK(empty.out.find("warning: empty corpus") != std::string::npos);
    CHECK(empty.out.find("\"words\": 0") != std::string::npos);

    const CmdResult small = run_cli("verify --exhaustive 2,6 --family wk:2..6");
    REQUIRE(small.rc == 0);
    CHECK(small.out.find("\"all_passed\": true") != std::string::npos);
    CHECK(small.out.find("29/29 checks passed") != std::string::npos);

    const CmdResult sweep = run_cli("verify --exhaustive 2,5 --lambda-sweep");
    REQUIRE(sweep.rc == 0);
    CHECK(sweep.out.find("\"lambda_sweep\"") != std::string::npos);
}

TEST_CASE("conjecture maxruns table") {
    const CmdResult res = run_cli("conjecture --maxruns 2,6");
    REQUIRE(res.rc == 0);
    CHECK(res.out.find("n=1 mrn=0") != std::string::npos);
    CHECK(res.out.find("n=4 mrn=2 enumerated=8 argmax(1): 0011") != std::string::npos);
    CHECK(res.out.find("n=6 mrn=3") != std::string::npos);
    CHECK(res.out.find("all argmax words secondary-free: yes") != std::string::npos);
}
