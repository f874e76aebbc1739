#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const char* binary() {
    const char* bin = std::getenv("FALC_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "FALC_BIN must point at the falc binary");
    return bin;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    const auto out = dir / ("falc_cli_out_" + std::to_string(++counter));
    const auto err = dir / ("falc_cli_err_" + std::to_string(counter));
    const std::string cmd = "FALC_CACHE= " + std::string(binary()) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r{WEXITSTATUS(status), slurp(out), slurp(err)};
    std::filesystem::remove(out);
    std::filesystem::remove(err);
    return r;
}

}  // namespace

TEST_CASE("report command") {
    auto r6 = run_cli("report --n 6");
    CHECK(r6.exit_code == 0);
    CHECK(r6.out.find("-10/3") != std::string::npos);
    CHECK(r6.out.find("non-arithmetic") != std::string::npos);

    auto r3 = run_cli("report --n 3");
    CHECK(r3.exit_code == 0);
    CHECK(r3.out.find("x^2 + 1") != std::string::npos);

    auto r5 = run_cli("report --n 5 --twists 01111");
    CHECK(r5.exit_code == 0);
    CHECK(r5.out.find("hidden symmetries: 10") != std::string::npos);

    auto json = run_cli("report --n 4 --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.out.find("\"schema\": \"falc/report/1\"") != std::string::npos);
    CHECK(json.out.find("\"verdict\": \"arithmetic\"") != std::string::npos);
}

TEST_CASE("report usage errors") {
    CHECK(run_cli("report --n 2").exit_code == 1);
    CHECK(run_cli("report --n 5 --twists 011").exit_code == 1);
    CHECK(run_cli("report --n 5 --twists 012a1").exit_code == 1);
    CHECK(run_cli("report").exit_code == 1);
    CHECK(run_cli("report --n 5 --v0 -1").exit_code == 1);
    CHECK(run_cli("report --n 5 --precision 16").exit_code == 1);
    CHECK(run_cli("report --n 5 --digits 0").exit_code == 1);
    // a named but unreadable external table is missing data
    CHECK(run_cli("report --n 7 --nr-table /nonexistent/table.json").exit_code == 3);
}

TEST_CASE("report with v0 bound") {
    auto r = run_cli("report --n 5 --v0 0.039");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("vol/v0") != std::string::npos);
}

TEST_CASE("fields command") {
    auto eq = run_cli("fields --equal 3 6");
    CHECK(eq.exit_code == 0);
    CHECK(eq.out.substr(0, 5) == "false");

    auto eq77 = run_cli("fields --equal 7 7");
    CHECK(eq77.exit_code == 0);
    CHECK(eq77.out.substr(0, 4) == "true");

    auto table = run_cli("fields --table --max 10 --format csv");
    CHECK(table.exit_code == 0);
    long rows = std::count(table.out.begin(), table.out.end(), '\n');
    CHECK(rows == 9);  // header + 8 rows
    CHECK(table.out.find("3,2,x^2 + 1,12") != std::string::npos);

    CHECK(run_cli("fields").exit_code == 1);
    CHECK(run_cli("fields --table --max 2").exit_code == 1);
}

TEST_CASE("classify command") {
    auto r = run_cli("classify --range 3..10 --format csv");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);  // header
    long arithmetic = 0;
    while (std::getline(lines, line))
        if (line.find(",arithmetic,") != std::string::npos) ++arithmetic;
    CHECK(arithmetic == 2);  // n = 3 and n = 4 only

    CHECK(run_cli("classify --range nonsense").exit_code == 1);
    CHECK(run_cli("classify --range 10..3").exit_code == 1);

    // unreadable table: warning, computation proceeds
    auto warn = run_cli("classify --range 7..8 --nr-table /nonexistent/t.json");
    CHECK(warn.exit_code == 0);
    CHECK(warn.err.find("warning") != std::string::npos);
}

TEST_CASE("cache behaviour") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto cache = dir / "falc_cli_cache.json";
    std::filesystem::remove(cache);

    auto plain = run_cli("report --n 9 --format json");
    auto first = run_cli("report --n 9 --format json --cache " + cache.string());
    auto second = run_cli("report --n 9 --format json --cache " + cache.string());
    CHECK(plain.exit_code == 0);
    CHECK(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    // cache on/off and cold/warm give byte-identical reports
    CHECK(plain.out == first.out);
    CHECK(first.out == second.out);
    CHECK(std::filesystem::exists(cache));

    // corrupt the cache: the report recomputes with a warning
    {
        std::ofstream f(cache);
        f << "{\"schema\": \"falc/cache/1\", \"entries\": [{\"n\": 9}]}";
    }
    auto corrupt = run_cli("report --n 9 --format json --cache " + cache.string());
    CHECK(corrupt.exit_code == 0);
    CHECK(corrupt.out == plain.out);
    CHECK(corrupt.err.find("warning") != std::string::npos);
    std::filesystem::remove(cache);
}

TEST_CASE("verify command") {
    // the full suites run in the acceptance test; here exercise the command
    // surface with the cheapest suite plus the cache re-verification path
    const auto dir = std::filesystem::temp_directory_path();
    const auto bad = dir / "falc_bad_cache.json";
    {
        std::ofstream f(bad);
        f << "not json at all";
    }
    auto r = run_cli("verify --suite symmetry --cache " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("FAIL  cache-verification") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
    std::filesystem::remove(bad);

    auto j = run_cli("verify --suite symmetry --format json");
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"suite\": \"symmetry\"") != std::string::npos);
    CHECK(j.out.find("\"pass\": true") != std::string::npos);
    CHECK(j.out.find("\"passed\"") != std::string::npos);

    CHECK(run_cli("verify --suite bogus").exit_code == 1);
}
