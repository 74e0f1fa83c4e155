#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {
std::string g_binary;

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_binary + " " + args + " 2>&1";
    std::array<char, 512> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (fgets(buf.data(), int(buf.size()), p)) out += buf.data();
    int status = pclose(p);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}
}  // namespace

TEST_CASE("goss subcommand") {
    auto r1 = run("goss --q 3 --k 1");
    CHECK(r1.code == 0);
    CHECK(r1.out == "X\n");
    auto r3 = run("goss --q 3 --k 3");
    CHECK(r3.code == 0);
    CHECK(r3.out == "X^3\n");
    auto r0 = run("goss --q 3 --k 0");
    CHECK(r0.code == 2);
}

TEST_CASE("expand subcommand") {
    auto re = run("expand --form E --q 3 --order 5");
    CHECK(re.code == 0);
    CHECK(re.out.find("(1)*t") == 0);
    auto rd = run("expand --form delta --route both --q 3 --order 12");
    CHECK(rd.code == 0);
    CHECK(rd.out.find("routes agree: true") != std::string::npos);
    auto rz = run("expand --form Ek --k 1 --q 3 --order 5");
    CHECK(rz.code == 0);
    CHECK(rz.out.find("does not divide") != std::string::npos);
    auto rbad = run("expand --form what --q 3");
    CHECK(rbad.code == 2);
}

TEST_CASE("json outputs parse and match the documented schemas") {
    auto rg = run("--json goss --q 3 --k 4");
    CHECK(rg.code == 0);
    auto jg = nlohmann::json::parse(rg.out);
    CHECK(jg["k"] == 4);
    CHECK(jg["coeffs"].is_array());

    auto rx = run("--json expand --form delta --q 3 --order 10");
    auto jx = nlohmann::json::parse(rx.out);
    CHECK(jx["weight"] == 8);
    CHECK(jx["type"] == 0);
    CHECK(jx["series"]["val"] == 2);
    CHECK(jx["series"]["prec"] == 10);
    CHECK(jx["series"]["coeffs"].is_array());

    auto rt = run("--json tate --q 3 --order 8");
    auto jt = nlohmann::json::parse(rt.out);
    CHECK(jt.contains("g1"));
    CHECK(jt.contains("g2"));
    CHECK(jt.contains("E_mu"));

    auto rn = run("--json nhf --e2-power 1 --q 3 --order 6");
    auto jn = nlohmann::json::parse(rn.out);
    CHECK(jn["weight"] == 2);
    CHECK(jn["type"] == 1);
    CHECK(jn["depth"] == 1);
    CHECK(jn["components"].size() == 2);
}

TEST_CASE("module subcommand") {
    auto r = run("--json module --a T^2 --q 3");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rank"] == 1);
    CHECK(j["phi_theta"].size() == 2);
    // C_{theta^2} = theta^2 + (theta + theta^q) tau + tau^2
    CHECK(j["phi_a"].size() == 3);
    CHECK(j["phi_a"][1] == "T^3+T");
    auto rz = run("module --a 0 --q 3");
    CHECK(rz.code == 2);
}

TEST_CASE("eval subcommand") {
    auto r = run("--json eval --form E --q 3 --point '{\"m\":2,\"e\":1,\"terms\":[[-1,\"zeta\"]]}' "
                 "--order 40");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("value"));
    CHECK(j["tail_valuation"].get<long long>() > 40);
    // a K_infty point is rejected (fixed by phi)
    auto rbad = run("--json eval --form E --q 3 --point '{\"m\":2,\"e\":1,\"terms\":[[-1,\"1\"]]}'");
    CHECK(rbad.code == 2);
}

TEST_CASE("check subcommand exits zero on success") {
    auto r = run("check --suite tate --q 2 --prec 16");
    CHECK(r.code == 0);
    CHECK(r.out.find("g2 lowest order = 1 (= q-1)") != std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("deterministic output for fixed config and seed") {
    auto a = run("check --suite symbolic --q 2 --prec 16 --seed 7");
    auto b = run("check --suite symbolic --q 2 --prec 16 --seed 7");
    CHECK(a.out == b.out);
    CHECK(a.code == 0);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-dmf-binary>\n");
        return 2;
    }
    g_binary = argv[argc - 1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv);
    return ctx.run();
}
