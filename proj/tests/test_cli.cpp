#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QLAB_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (fgets(buf.data(), buf.size(), p)) out += buf.data();
    int rc = pclose(p);
    return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("cohomology command") {
    auto r = run_cli("cohomology --quandle R:4 --degree 2 --mod 2");
    CHECK(r.status == 0);
    CHECK(r.out == "dim = 4\n");

    r = run_cli("cohomology --quandle S4 --degree 3 --integral");
    CHECK(r.status == 0);
    CHECK(r.out.find("Z_2") != std::string::npos);

    r = run_cli("cohomology --quandle S4 --degree 3 --mod 4");
    CHECK(r.status == 0);
    CHECK(r.out.find("Z_2 x Z_2 x Z_4") != std::string::npos);
}

TEST_CASE("invariant commands") {
    auto r = run_cli("invariant fig8 --cocycle eta11");
    CHECK(r.status == 0);
    CHECK(r.out == "16\n");

    r = run_cli("invariant knot --quandle S4 --cocycle s4-phi --braid 1,1,1 --strands 2");
    CHECK(r.status == 0);
    CHECK(r.out == "4+12t\n");

    r = run_cli("invariant torus --n 2 --k 4 --quandle R:4 --cocycle theta1");
    CHECK(r.status == 0);
    CHECK(r.out == "8+8t\n");

    r = run_cli("invariant twistspin --m 3 --k 2 --quandle R:3 --cocycle 3-2-A --method both");
    CHECK(r.status == 0);
    CHECK(r.out.find("movie: 3+6t\n") != std::string::npos);
    CHECK(r.out.find("chart: 3+6t^2\n") != std::string::npos);
    CHECK(r.out.find("yes") != std::string::npos);
}

TEST_CASE("json output round-trips through the parser") {
    auto r = run_cli("--json invariant knot --quandle S4 --cocycle s4-phi --braid 1,1,1 --strands 2");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "invariant knot");
    CHECK(j["value"]["modulus"] == 2);
    CHECK(j["value"]["coeffs"]["0"] == "4");
    CHECK(j["value"]["coeffs"]["1"] == "12");
    CHECK(j["colorings"] == "16");
    CHECK(j.contains("elapsed_ms"));

    // identical invocations give identical values
    auto r2 = run_cli("--json invariant knot --quandle S4 --cocycle s4-phi --braid 1,1,1 --strands 2");
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j["value"] == j2["value"]);
}

TEST_CASE("period command") {
    auto r = run_cli("period --quandle S4 --n 2");
    CHECK(r.status == 0);
    CHECK(r.out == "period = 3\n");
}

TEST_CASE("quandle command") {
    auto r = run_cli("quandle --quandle R:3");
    CHECK(r.status == 0);
    CHECK(r.out.find("order 3") != std::string::npos);

    r = run_cli("quandle --quandle L:9:4 --isomorphic-to L:9:7");
    CHECK(r.status == 0);
    CHECK(r.out.find("isomorphic:") != std::string::npos);

    r = run_cli("quandle --quandle L:5:2 --isomorphic-to L:5:3");
    CHECK(r.status == 0);
    CHECK(r.out.find("not isomorphic") != std::string::npos);

    r = run_cli("quandle --quandle L:9:4 --self-dual");
    CHECK(r.status == 0);
    CHECK(r.out == "self-dual\n");
}

TEST_CASE("usage and data errors exit 2") {
    CHECK(run_cli("quandle --quandle X:9").status == 2);
    CHECK(run_cli("quandle --quandle L:4:2").status == 2);
    CHECK(run_cli("invariant fig8 --cocycle eta1 --mod 4").status == 2);  // not a cocycle mod 4
    CHECK(run_cli("invariant twistspin --m 3 --k 3 --quandle R:3 --cocycle 3-2-A --method chart").status == 2);
    CHECK(run_cli("cohomology --quandle R:3 --degree 2").status == 2);
}

TEST_CASE("cocycle basis emission parses back") {
    auto r = run_cli("cocycle --quandle R:3 --degree 2 --mod 3");
    CHECK(r.status == 0);
    CHECK(r.out.find("# cocycle basis: R:3 degree 2 mod 3") != std::string::npos);
}

TEST_CASE("table command smoke test") {
    auto r = run_cli("table --which fig8");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
