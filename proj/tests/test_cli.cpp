#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "abcmin/cli.hpp"
#include "abcmin/search.hpp"
#include "abcmin/tree.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = abcmin::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string num17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("abcmin_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("cli search emits one JSON record") {
    CliRun r = run_cli({"search", "36"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out ==
          "{\"t\":36,\"abc\":35.354818154559382,\"family\":\"MixedOnly\","
          "\"parameters\":{\"d_R\":0,\"d_M\":16,\"l\":14,\"k_R\":0,\"s_R\":0,"
          "\"k_M\":11,\"s_M\":0},\"order\":39,\"unique\":true}\n");
}

TEST_CASE("cli scan prints CSV and reports change points on stderr") {
    CliRun r = run_cli({"scan", "18", "19"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "t,abc,family,d_R,d_M,l,k_R,s_R,k_M,s_M,order,unique\n"
          "18,17.4928556845359,Star,0,0,0,18,0,0,0,19,true\n"
          "19,18.488380282207363,DoubleStar,0,0,0,10,0,9,0,21,true\n");
    CHECK(r.err == "change points: 19\n");

    CliRun flat = run_cli({"scan", "36", "37"});
    CHECK(flat.code == 0);
    CHECK(flat.err == "change points: none\n");
}

TEST_CASE("cli scan --csv writes the file instead") {
    TempDir tmp;
    fs::path csv = tmp.path / "scan.csv";
    CliRun r = run_cli({"scan", "18", "19", "--csv", csv.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(csv) ==
          "t,abc,family,d_R,d_M,l,k_R,s_R,k_M,s_M,order,unique\n"
          "18,17.4928556845359,Star,0,0,0,18,0,0,0,19,true\n"
          "19,18.488380282207363,DoubleStar,0,0,0,10,0,9,0,21,true\n");
}

TEST_CASE("cli scan accepts a thread count") {
    CliRun one = run_cli({"--threads", "1", "scan", "36", "40"});
    CliRun two = run_cli({"--threads", "2", "scan", "36", "40"});
    CHECK(one.code == 0);
    CHECK(two.code == 0);
    CHECK(one.out == two.out);
    CHECK(one.err == two.err);
}

TEST_CASE("cli oracle") {
    std::string expected = "{\"t\":3,\"trees_considered\":1,\"min_abc\":" +
                           num17(std::sqrt(6.0)) +
                           ",\"minimizer_codes\":[\"(()()())\"]}\n";
    CliRun r = run_cli({"oracle", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == expected);

    TempDir tmp;
    fs::path dir = tmp.path / "minimizers";
    CliRun e = run_cli({"oracle", "3", "--emit-trees", dir.string()});
    CHECK(e.code == 0);
    std::string body = slurp(dir / "t3_minimizer_1.txt");
    CHECK(body.substr(0, 8) == "# abc = ");
    abcmin::Tree t = abcmin::parse_tree(body);
    CHECK(abcmin::abc_index(t) == std::sqrt(6.0));
}

TEST_CASE("cli table") {
    CliRun r = run_cli({"table1"});
    CHECK(r.code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 13);
    CHECK(lines[0] == " k         c_120      diff_120         c_inf      diff_inf");
    CHECK(lines[6] == "10    0.98472395    0.00000000    0.98361384    0.00000000");

    TempDir tmp;
    fs::path csv = tmp.path / "t1.csv";
    CliRun c = run_cli({"table1", "--csv", csv.string()});
    CHECK(c.code == 0);
    CHECK(c.out == r.out);
    CHECK(slurp(csv).substr(0, 32) == "k,c_120,diff_120,c_inf,diff_inf\n");
}

TEST_CASE("cli verify") {
    CliRun r = run_cli({"verify", "noRandM2"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 20) == "{\"name\":\"noRandM2\",\"");
    CHECK(r.out.find("\"passed\":true") != std::string::npos);
    CHECK(r.out.find("\"worst_point\":{\"d\":14}") != std::string::npos);

    CliRun bad = run_cli({"verify", "bogus"});
    CHECK(bad.code == 3);
    CHECK(bad.err.substr(0, 7) == "error: ");
}

TEST_CASE("cli tree build round trip") {
    TempDir tmp;
    for (long t : {19L, 36L, 53L}) {
        CAPTURE(t);
        fs::path file = tmp.path / ("tree" + std::to_string(t) + ".txt");
        CliRun b = run_cli({"tree", "build", std::to_string(t), "--out",
                            file.string()});
        CHECK(b.code == 0);
        CliRun a = run_cli({"abc", file.string()});
        CHECK(a.code == 0);
        CHECK(a.out == num17(abcmin::minimal_tree(t).abc) + "\n");
    }
    CliRun stdout_build = run_cli({"tree", "build", "36"});
    CHECK(stdout_build.code == 0);
    CHECK(stdout_build.out.substr(0, 38) ==
          "# MixedOnly d_M=16 l=14 k_M=11 s_M=0\n#");
}

TEST_CASE("cli usage errors exit 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"search"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"search", "36", "--bogus-flag"}).code == 2);
    CHECK(run_cli({"tree"}).code == 2);
}

TEST_CASE("cli input errors exit 3") {
    CliRun missing = run_cli({"abc", "/nonexistent/tree.txt"});
    CHECK(missing.code == 3);
    CHECK(missing.err.substr(0, 7) == "error: ");

    CHECK(run_cli({"search", "1"}).code == 3);
    CHECK(run_cli({"oracle", "50"}).code == 3);

    TempDir tmp;
    fs::path garbled = tmp.path / "garbled.txt";
    std::ofstream(garbled) << "0 1\nnot an edge\n";
    CHECK(run_cli({"abc", garbled.string()}).code == 3);
}

TEST_CASE("cli help exits 0") {
    CliRun r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("search") != std::string::npos);
    CHECK(r.out.find("verify") != std::string::npos);
}
