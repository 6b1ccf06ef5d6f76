// End-to-end exit-code and output-format matrix for the CLI binary.
// The binary path comes from the PARITY_CLI environment variable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    const char* bin = std::getenv("PARITY_CLI");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("group order json matches the documented shape")
{
    RunResult r = run_cli("--format json group order --kind CP --n 3");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["order"] == 24);
}

TEST_CASE("exit code 2 on parameter errors")
{
    CHECK(run_cli("group order --kind XX --n 3").exit_code == 2);
    CHECK(run_cli("lattice prop1 --partition 0,2").exit_code == 2);
    CHECK(run_cli("lattice prop1").exit_code == 2);          // missing required option
    CHECK(run_cli("group kernel --n 50 --parity 1").exit_code == 2); // cap
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("chart eval --x 1/0,2 --partition 2").exit_code == 2);
}

TEST_CASE("exit code 1 when a verification fails")
{
    // impossible tolerance forces the residue check to fail
    CHECK(run_cli("--tol 1e-30 unitary decompose --n 4").exit_code == 1);
}

TEST_CASE("verification subcommands pass on the shipped build")
{
    RunResult listings = run_cli("verify listings");
    CHECK(listings.exit_code == 0);
    CHECK(listings.out.find("PASS") != std::string::npos);

    RunResult prop1 = run_cli("lattice prop1 --partition 2,1");
    CHECK(prop1.exit_code == 0);
    CHECK(prop1.out.find("jp_order=8") != std::string::npos);
    CHECK(prop1.out.find("PASS") != std::string::npos);

    RunResult json_prop1 = run_cli("--format json lattice prop1 --partition 2,2");
    CHECK(json_prop1.exit_code == 0);
    json j = json::parse(json_prop1.out);
    CHECK(j["pass"] == true);
    CHECK(j["params"]["jp_order"] == "64");
    CHECK(j["params"]["kernel_order"] == "2");
    CHECK(j["params"]["rotation_order"] == "32");
}

TEST_CASE("json outputs parse and round-trip for core subcommands")
{
    for (const std::string args :
         {std::string("--format json group kernel --n 2 --parity 2"),
          std::string("--format json chart eval --x 3/4,1/4,5 --partition 2,1"),
          std::string("--format json chart eval --x 1/2,1/2 --partition 2 --spherical"),
          std::string("--format json lattice complex --partition 2,1"),
          std::string("--format json lie closure --partition 2,1 --minimal"),
          std::string("--format json lie p --partition 2,1"),
          std::string("--format json quotient table --partition 2,1"),
          std::string("--format json unitary decompose --n 3 --seed 5"),
          std::string("--format json group iso --a CP:2 --b BP:2"),
          std::string("--format json group jp --partition 2,1"),
          std::string("--format json verify listings")}) {
        RunResult r = run_cli(args);
        INFO(args);
        CHECK(r.exit_code == 0);
        CHECK_NOTHROW((void)json::parse(r.out));
    }
}

TEST_CASE("chart json carries spherical angles as pi multiples")
{
    RunResult r = run_cli("--format json chart eval --x 1/2,1/2 --partition 2 --spherical");
    json j = json::parse(r.out);
    CHECK(j[0]["phi"] == "1");
    CHECK(j[0]["theta"][0] == "1/2");
}

TEST_CASE("iso verdicts")
{
    RunResult no = run_cli("--format json group iso --a CP:2 --b BP:2");
    CHECK(json::parse(no.out)["isomorphic"] == false);
    RunResult yes = run_cli("--format json group iso --a CP:2 --b JP:2");
    CHECK(json::parse(yes.out)["isomorphic"] == true);
    RunResult full = run_cli("--format json group iso --a full:3 --b P:3");
    CHECK(json::parse(full.out)["isomorphic"] == true);
}

TEST_CASE("element grammar round-trips through the CLI")
{
    RunResult r = run_cli("--format json group compose --a 'π:[2,1];ε:[+1,-1]' --b 'π:[2,1];ε:[+1,-1]'");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["result"] == "π:[1,2];ε:[-1,-1]");

    RunResult inv = run_cli("--format json group inverse --g 'π:[2,1];ε:[+1,-1]'");
    CHECK(json::parse(inv.out)["result"] == "π:[2,1];ε:[-1,+1]");
}
