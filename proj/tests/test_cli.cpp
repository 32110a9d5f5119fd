// End-to-end checks of the command line interface: contract examples, exit
// codes, golden-file comparison and byte-level reproducibility.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(UNISTOCH_CLI_PATH) + " " + args + " 2>&1";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("exact moment values through the cli") {
    const CliResult sym = run_cli("exact-moment --ensemble U --n 5 --symbolic");
    CHECK(sym.exit_code == 0);
    CHECK(sym.output.find("\"34\"") != std::string::npos); // numerator of m_5

    const CliResult pt = run_cli("exact-moment --ensemble O --n 2 --dim 6");
    CHECK(pt.exit_code == 0);
    CHECK(pt.output.find("\"num\": \"1\"") != std::string::npos);
    CHECK(pt.output.find("\"den\": \"4\"") != std::string::npos);

    const CliResult sp = run_cli("exact-moment --ensemble S --n 2 --dim 3");
    CHECK(sp.exit_code == 0);
    CHECK(sp.output.find("\"num\": \"2\"") != std::string::npos);
    CHECK(sp.output.find("\"den\": \"7\"") != std::string::npos);

    const CliResult shifted = run_cli("exact-moment --ensemble BDI --n 1 --a 3 --b 1 --shifted");
    CHECK(shifted.exit_code == 0);
    CHECK(shifted.output.find("\"den\": \"4\"") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("exact-moment --ensemble U --n 2").exit_code == 2);      // missing --dim
    CHECK(run_cli("tables --family GO --n 3 --budget 1000").exit_code == 3); // refusal
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("exact-moment --ensemble CII --n 1 --a 2 --b 2").exit_code == 2);
}

TEST_CASE("table check against stored references") {
    CHECK(run_cli("tables --family FU --n 4 --check").exit_code == 0);
    CHECK(run_cli("tables --family FBDI --n 2 --check").exit_code == 0);
    const CliResult unknown = run_cli("tables --family GU --n 2 --check");
    CHECK(unknown.exit_code == 0);
    CHECK(unknown.output.find("no reference stored") != std::string::npos);
}

TEST_CASE("golden table files") {
    for (const char* name : {"FU_2", "FU_3", "FU_4", "FO_2", "FO_3", "FO_4", "FAI_2", "FAI_3",
                             "FAI_4", "FAII_2", "FAII_3", "FAII_4", "FAIII_1", "FAIII_2", "FAIII_3",
                             "FBDI_1", "FBDI_2", "GU_1", "GU_2", "GO_1", "GO_2"}) {
        std::string family(name);
        const auto underscore = family.find('_');
        const std::string n = family.substr(underscore + 1);
        family = family.substr(0, underscore);
        const CliResult got = run_cli("tables --family " + family + " --n " + n);
        INFO(name);
        CHECK(got.exit_code == 0);
        CHECK(got.output == slurp(std::string(UNISTOCH_GOLDEN_DIR) + "/" + name + ".json"));
    }
}

TEST_CASE("sampling is byte reproducible and asymptotics are exact") {
    const std::string args = "sample --ensemble O --dim 12 --count 4 --seed 31 --summary /dev/null";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    const CliResult one = run_cli("sample --ensemble U --dim 1 --count 3 --summary /dev/null");
    CHECK(one.exit_code == 0);
    CHECK(std::count(one.output.begin(), one.output.end(), '\n') == 3);

    const CliResult as = run_cli("asymptotics --ensemble U --quantity singular --n 2 --terms 4");
    CHECK(as.exit_code == 0);
    // T_{2,4} = 2, earlier coefficients vanish
    CHECK(as.output.find("\"j\": 4") != std::string::npos);
    CHECK(as.output.find("\"num\": \"2\"") != std::string::npos);
}
