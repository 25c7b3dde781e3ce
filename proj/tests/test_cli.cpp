#include "helpers.hpp"

#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(LIK_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
    int status = pclose(f);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("compute eta: row contract and the table value") {
    auto r = run_cli("compute --family eta --n-max 20 --precision-bits 256");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 21);
    CHECK(lines[0] == "index,value,err_est,route");
    // row for eta_10 starts "10,-5.66605..."
    CHECK(lines[11].rfind("10,-5.66605", 0) == 0);
    CHECK(lines[11].find("eta_sigma") != std::string::npos);
}

TEST_CASE("compute b: leading row value") {
    auto r = run_cli("compute --family b --n-max 5 --precision-bits 192");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[1].rfind("0,8.3787706", 0) == 0);
}

TEST_CASE("compute lambda: two-route table with discrepancy column") {
    auto r = run_cli("compute --family lambda --n-max 10 --routes A,B --precision-bits 192");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 11);  // header + 10 rows
    CHECK(lines[0] == "index,value_A,err_est_A,value_B,err_est_B,max_discrepancy");
    CHECK(lines[1].rfind("1,", 0) == 0);
    CHECK(lines[10].rfind("10,", 0) == 0);
}

TEST_CASE("compute gamma json emits the production route") {
    auto r = run_cli("compute --family gamma --n-max 3 --precision-bits 192 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["rows"].size() == 3);
    CHECK(j["rows"][0]["route"] == "limit_em");
    std::string g0 = j["rows"][0]["value"].get<std::string>();
    CHECK(g0.rfind("5.77215664", 0) == 0);
    CHECK(g0.find("e-01") != std::string::npos);
}

TEST_CASE("verify: exit 0, suite size, schema") {
    auto r = run_cli("verify --n-max 8");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["summary"]["failed"].get<long>() == 0);
    CHECK(j["results"].size() >= 25);
    bool found = false;
    for (const auto& c : j["results"])
        if (c["check_id"] == "bell_xi_sigma_n2") {
            found = true;
            CHECK(c.contains("residual"));
        }
    CHECK(found);
}

TEST_CASE("verify at starved precision reports a shortfall") {
    auto r = run_cli("verify --n-max 30 --precision-bits 64");
    CHECK(r.exit_code == 3);
}

TEST_CASE("scan: violation list, deep ratio, alpha") {
    auto r = run_cli("scan --n-max 61 --precision-bits 256 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    std::vector<long> v = j["violations"].get<std::vector<long>>();
    REQUIRE(!v.empty());
    CHECK(v.front() == 1);  // the decisive violation
    CHECK(j["best_alpha"].get<std::string>().rfind("1.68", 0) == 0);
    // ratio at k = 50 prints as 1.0000000
    for (const auto& row : j["rows"])
        if (row["k"].get<long>() == 50) CHECK(row["ratio"].get<std::string>().rfind("1.000000", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("compute --family nosuch --n-max 4").exit_code == 2);
    CHECK(run_cli("compute --no-such-flag").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("report").exit_code == 2);  // report requires --out
}

TEST_CASE("byte-identical reruns") {
    auto a = run_cli("verify --n-max 12 --precision-bits 192");
    auto b = run_cli("verify --n-max 12 --precision-bits 192");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);

    auto c = run_cli("compute --family lambda --n-max 8 --routes A,B,C,D --precision-bits 192");
    auto d = run_cli("compute --family lambda --n-max 8 --routes A,B,C,D --precision-bits 192");
    REQUIRE(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("report command writes the file under LIK_OUT_DIR") {
    std::string dir = "/tmp/lik_out_test";
    int rc = std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
    REQUIRE(rc == 0);
    std::string cmd = "LIK_OUT_DIR=" + dir + " " + std::string(LIK_CLI_PATH) +
                      " report --n-max 6 --precision-bits 192 --out r.json > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
    std::ifstream f(dir + "/r.json");
    REQUIRE(f.good());
    nlohmann::ordered_json j;
    f >> j;
    CHECK(j["summary"]["failed"].get<long>() == 0);
}
