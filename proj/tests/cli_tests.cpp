#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef KRADIUS_CLI_PATH
#error "KRADIUS_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Runs the CLI with the given arguments (shell syntax), capturing streams.
/// stdin_text, when nonempty, is piped in through a temp file.
RunResult run(const std::string& args, const std::string& stdin_text = "") {
    static int counter = 0;
    const std::string tag = std::to_string(++counter);
    const std::string out_path = "/tmp/kradius_cli_out_" + tag;
    const std::string err_path = "/tmp/kradius_cli_err_" + tag;
    const std::string in_path = "/tmp/kradius_cli_in_" + tag;

    std::string cmd = std::string(KRADIUS_CLI_PATH) + " " + args;
    if (!stdin_text.empty()) {
        std::ofstream in(in_path);
        in << stdin_text;
        cmd += " < " + in_path;
    }
    cmd += " > " + out_path + " 2> " + err_path;

    const int raw = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    std::remove(in_path.c_str());
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("construct emits the golden 30-term sequence for n=10 k=2") {
    const RunResult r = run("construct --n 10 --k 2");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 31);
    CHECK(lines[0] == "# n=10 k=2");
    const std::vector<std::string> expected{
        "0", "6", "3", "5", "2", "9", "1", "8", "0", "7", "4", "6", "2", "8",
        "4", "5", "1", "7", "3", "9", "0", "5", "2", "7", "8", "3", "4", "9",
        "6", "1"};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(lines[i + 1] == expected[i]);
    }
    CHECK(r.err.find("optimal_2p") != std::string::npos);
    CHECK(r.err.find("length: 30") != std::string::npos);
}

TEST_CASE("construct --n 3 --k 5 prints the single pass") {
    const RunResult r = run("construct --n 3 --k 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "# n=3 k=5\n0\n1\n2\n");
}

TEST_CASE("construct round-trips through verify") {
    const std::string path = "/tmp/kradius_cli_seq.txt";
    CHECK(run("construct --n 50 --k 2 --out " + path).exit_code == 0);
    const RunResult v = run("verify " + path);
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("k_radius=yes") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("construct JSON output carries the length") {
    const RunResult r = run("construct --n 2000 --k 2 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"length\":1102716") != std::string::npos);
}

TEST_CASE("verify reads stdin and flags missing pairs") {
    const RunResult r = run("verify -", "# n=4 k=2\n0\n1\n2\n3\n");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("k_radius=no") != std::string::npos);
    CHECK(r.out.find("missing: (0, 3)") != std::string::npos);
}

TEST_CASE("verify accepts the 21-term sequence at k=2") {
    std::string body = "# n=9 k=2\n";
    for (const char* s :
         {"0", "1", "6", "4", "3", "7", "8", "0", "4", "2", "5",
          "0", "3", "2", "1", "8", "5", "6", "7", "2", "1"}) {
        body += s;
        body += '\n';
    }
    const RunResult r = run("verify - --format json", body);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"is_k_radius\":true") != std::string::npos);
    CHECK(r.out.find("\"covered_pairs\":36") != std::string::npos);
}

TEST_CASE("verify --k overrides the header radius") {
    const std::string body = "# n=4 k=2\n0\n1\n2\n3\n";
    CHECK(run("verify - --k 3", body).exit_code == 0);
    CHECK(run("verify - --k 1", body).exit_code == 1);
}

TEST_CASE("verify exits 2 on parse errors") {
    const RunResult r = run("verify -", "not a header\n");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("underline output round-trips") {
    const RunResult c = run("construct --n 10 --k 2 --show-underlines");
    CHECK(c.exit_code == 0);
    CHECK(lines_of(c.out)[1] == "0");
    CHECK(lines_of(c.out)[2] == "_1");  // symbol 6 = 5 + 1
    const RunResult v = run("verify -", c.out);
    CHECK(v.exit_code == 0);

    CHECK(run("construct --n 9 --k 2 --show-underlines").exit_code == 2);
}

TEST_CASE("bound prints applicable formulas") {
    const RunResult r = run("bound --n 10 --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("mod4_lower=30") != std::string::npos);
    CHECK(r.out.find("general_lower=23") != std::string::npos);

    const RunResult j = run("bound --n 9 --k 1 --format json");
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"ghosh_exact\":37") != std::string::npos);
}

TEST_CASE("search reports the optimum for n=4 k=2") {
    const RunResult r = run("search --n 4 --k 2 --budget 1e6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("status=optimal") != std::string::npos);
    CHECK(r.out.find("best_length=5") != std::string::npos);

    const RunResult j = run("search --n 5 --k 2 --format json");
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"best_length\":7") != std::string::npos);
    CHECK(j.out.find("\"status\":\"optimal\"") != std::string::npos);
}

TEST_CASE("search refuses big alphabets without --allow-long") {
    const RunResult r = run("search --n 13 --k 2");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("--allow-long") != std::string::npos);
}

TEST_CASE("bench emits one CSV row per grid point") {
    const RunResult r = run("bench --k 2 --n-list 200,500,1000,2000");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] ==
          "n,k,strategy,q_used,length,lower_bound,ratio,build_time,"
          "verify_time");
    CHECK(lines[1].substr(0, 22) == "200,2,auto,37,15636,99");
    // The ratio column (7th) decreases down the list.
    double last_ratio = 10.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream row(lines[i]);
        std::string field;
        for (int f = 0; f < 7; ++f) std::getline(row, field, ',');
        const double ratio = std::stod(field);
        CHECK(ratio <= last_ratio);
        last_ratio = ratio;
    }
}

TEST_CASE("bench keeps going after a failing row") {
    const RunResult r =
        run("bench --k 2 --n-list 9,10 --strategies optimal_2p");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[1].find("error") != std::string::npos);
    CHECK(lines[2].substr(0, 20) == "10,2,optimal_2p,,30,");
}

TEST_CASE("bench JSON is a well-formed array") {
    const RunResult r =
        run("bench --k 2 --n-list 10,14 --strategies auto,ghosh_base "
            "--format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.front() == '[');
    CHECK(lines_of(r.out).size() >= 5);  // 4 rows plus brackets
    CHECK(r.out.find("\"strategy\":\"ghosh_base\"") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("construct").exit_code == 2);             // missing --n/--k
    CHECK(run("construct --n 5").exit_code == 2);       // missing --k
    CHECK(run("frobnicate --n 5 --k 2").exit_code == 2);
    CHECK(run("construct --n 5 --k 2 --strategy bogus").exit_code == 2);
    CHECK(run("bench --k 2").exit_code == 2);           // missing --n-list
    CHECK(run("construct --n 9 --k 2 --strategy optimal_2p").exit_code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("construct --help").exit_code == 0);
}

TEST_CASE("JSON sequence output is accepted back by verify") {
    const RunResult c = run("construct --n 15 --k 2 --format json");
    CHECK(c.exit_code == 0);
    const RunResult v = run("verify -", c.out);
    CHECK(v.exit_code == 0);
}
