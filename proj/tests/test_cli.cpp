#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(QCHOW_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("classify is byte-identical across runs") {
    const auto a = run("classify --format json");
    const auto b = run("classify --format json --jobs 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"Cayley\"") != std::string::npos);
}

TEST_CASE("replay subcommand succeeds") {
    const auto r = run("verify-paper --format markdown");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ConclusionAgrees") != std::string::npos);
    CHECK(r.out.find("Disagree |") == std::string::npos);
}

TEST_CASE("calculators") {
    auto r = run("chi --n 5 --c1 0 --c2 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("chi_hrr = -11/2") != std::string::npos);
    CHECK(r.out.find("chi_printed = -11/12") != std::string::npos);

    r = run("segre --c1 -1 --c2 3 --twist 7/2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("s6_closed_form_q6 = -82223/32") != std::string::npos);

    r = run("bound --n 6 --c1 0");
    CHECK(r.out.find("nef_c2_bound = 3") != std::string::npos);
    r = run("bound --n 12");
    CHECK(r.out.find("sin_incompatibility = Excluded") != std::string::npos);

    r = run("chow-check --n 6");
    CHECK(r.out.find("middle_relations = NotApplicable") != std::string::npos);
    r = run("chow-check --n 7");
    CHECK(r.out.find("middle_relations = true") != std::string::npos);
}

TEST_CASE("contract errors exit with 1") {
    CHECK(run("classify --n-min 4").exit_code == 1);
    CHECK(run("classify --format xml").exit_code == 1);
    CHECK(run("classify --c2-max 1").exit_code == 1);
    CHECK(run("chi --n 6 --formula printed").exit_code == 1);
    CHECK(run("chi --c1 1/0").exit_code == 1);
    CHECK(run("bound --n 4").exit_code == 1);
    CHECK(run("no-such-command").exit_code == 1);
}

TEST_CASE("--out writes the report to a file") {
    const std::string path = (std::filesystem::temp_directory_path() / "qchow_cli_out_test.json").string();
    const auto r = run("classify --n-min 5 --n-max 6 --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string text;
    std::array<char, 4096> buf{};
    while (const std::size_t n = std::fread(buf.data(), 1, buf.size(), f)) text.append(buf.data(), n);
    std::fclose(f);
    std::remove(path.c_str());
    CHECK(text == run("classify --n-min 5 --n-max 6").out);
}
