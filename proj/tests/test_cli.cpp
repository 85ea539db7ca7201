#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    CliRun r;
    std::string cmd = std::string(CARLGOSS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("zeta poly golden output") {
    CliRun r = run_cli("zeta poly --q 2 --ring A --n -1");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["version"] == "1.0.0");
    CHECK(j["config"]["command"] == "zeta poly");
    CHECK(j["config"]["ring"] == "A(q=2)");
    CHECK(j["result"]["flavor"] == "poly");
    CHECK(j["result"]["deg_z_bound"] == 1);
    CHECK(j["result"]["deg_z"] == 1);
    CHECK(j["result"]["poly_in_z"] == "1+z");
}

TEST_CASE("zeta padic golden outputs") {
    CliRun r = run_cli("zeta padic --q 3 --P t --n 1 --s 1");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["flavor"] == "p_adic");
    CHECK(j["result"]["cutoff_D"] == 8);
    CHECK(j["result"]["digits"] == 9);
    CHECK(j["result"]["exact"] == false);
    // zeta_P(1) is a 1-unit mod t
    CHECK(j["result"]["value"]["val"] == 0);
    CHECK(j["result"]["value"]["unit"] == "t^8+t^7+t^6+t^5+t^3+t+1");

    // q = 2: the unit 1 is torsion, so zeta_P(1) vanishes to full precision
    CliRun r2 = run_cli("zeta padic --q 2 --P t^2+t+1 --n 1 --s 1");
    REQUIRE(r2.code == 0);
    json j2 = json::parse(r2.out);
    CHECK(j2["result"]["value"]["zero_to_prec"] == true);
    CHECK(j2["result"]["value"]["val"] == 4);
}

TEST_CASE("fitting golden outputs") {
    CliRun a = run_cli("fitting --q 2 --prime t^2+t+1");
    REQUIRE(a.code == 0);
    json ja = json::parse(a.out);
    CHECK(ja["result"]["cyclic"] == true);
    CHECK(ja["result"]["deformed"] == false);
    CHECK(ja["result"]["factors"] == json({"1", "t^2+t"}));
    CHECK(ja["result"]["fitting"] == "t^2+t");

    CliRun b = run_cli("fitting --q 3 --ring \"Fq^r[t](r=2)\" --prime t");
    REQUIRE(b.code == 0);
    json jb = json::parse(b.out);
    CHECK(jb["config"]["ring"] == "Fq^r[t](q=3,r=2)");
    CHECK(jb["result"]["fitting"] == "t^2+2");

    CliRun c = run_cli("fitting --q 3 --ring \"Fq^r[t](r=2)\" --prime t --deformed");
    REQUIRE(c.code == 0);
    json jc = json::parse(c.out);
    CHECK(jc["result"]["deformed"] == true);
    CHECK(jc["result"]["fitting"] == "t^2+2*z^2");
}

TEST_CASE("quick verification suite passes and ignores the worker count") {
    CliRun w1 = run_cli("verify all --level quick --workers 1");
    REQUIRE(w1.code == 0);
    json j = json::parse(w1.out);
    CHECK(j["pass"] == true);
    CHECK(j["results"].size() == 25);
    for (const auto& rep : j["results"]) CHECK(rep["pass"] == true);

    CliRun w2 = run_cli("verify all --level quick --workers 2");
    CliRun w8 = run_cli("verify all --level quick --workers 8");
    CHECK(w2.code == 0);
    CHECK(w8.code == 0);
    CHECK(w1.out == w2.out); // byte-identical
    CHECK(w1.out == w8.out);
}

TEST_CASE("seed is echoed but does not change results") {
    CliRun a = run_cli("zeta poly --q 3 --n -2 --seed 7");
    CliRun b = run_cli("zeta poly --q 3 --n -2 --seed 99");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    json ja = json::parse(a.out), jb = json::parse(b.out);
    CHECK(ja["config"]["seed"] == 7);
    CHECK(jb["config"]["seed"] == 99);
    CHECK(ja["result"] == jb["result"]);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("zeta inf --q 2 --n 0 --prec 5").code == 2);  // usage: n must be >= 1
    CHECK(run_cli("zeta poly --q 2 --n -1 --bogus").code == 2); // unknown flag
    CHECK(run_cli("zeta padic --q 2 --P t^2 --n 1").code == 2); // usage: P not irreducible
    CHECK(run_cli("verify taelman --q 6").code == 2);           // usage: q not a prime power
    // computation error: certificate level s = 0 cannot cover n = 2
    CHECK(run_cli("zeta padic --q 2 --P t^2+t+1 --n 2 --s 0").code == 3);
}

TEST_CASE("verify taelman emits a full report") {
    CliRun r = run_cli("verify taelman --q 3");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["config"]["prec"] == 10);
    REQUIRE(j["results"].size() == 1);
    const json& rep = j["results"][0];
    CHECK(rep["identity"] == "taelman_K");
    CHECK(rep["pass"] == true);
    CHECK(rep["precision"] == "t^-10");
}

} // TEST_SUITE("cli")
