#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <sepstar/cli.hpp>
#include <sepstar/serialize.hpp>

using namespace sepstar;

namespace
{

struct Run {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("star of zbar and z on the flat line")
{
    const Run r = run({"star", "--potential", "flat", "--n", "1", "--f", "zbar1", "--g", "z1", "--nu-order", "2"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j["text"] == Json::parse(R"({"0":"z1*zbar1","1":"1","2":"0"})"));
    CHECK(j["command"] == "star");
    CHECK(j["base_point"] == "origin");
    CHECK(j["jet_order"] == 2);
    CHECK(j["phi_order"] == 10);
    CHECK(j["series"]["1"]["1"] == "1");
}

TEST_CASE("tensor T at the origin")
{
    const Run r = run({"tensor-t", "--potential", "flat", "--n", "1", "--nu-order", "2", "--at-origin"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["text"] == Json::parse(R"({"0":"1","1":"eta1*etabar1","2":"1/2*eta1^2*etabar1^2"})"));
}

TEST_CASE("verify exits 0 on a passing suite")
{
    const Run r = run({"verify", "--potential", "fubini-study", "--n", "1", "--nu-order", "4", "--seed", "7"});
    CHECK(r.code == 0);
    const Json j = r.json();
    CHECK(j["passed"] == true);
    CHECK(j["config"]["seed"] == 7);
    CHECK(j["checks"].size() > 20);
}

TEST_CASE("left symbol and geometry commands")
{
    const Run l = run({"lsymbol", "--potential", "flat", "--f", "zbar1^2", "--nu-order", "2"});
    REQUIRE(l.code == 0);
    CHECK(l.json()["text"] == Json::parse(R"({"0":"zbar1^2","1":"2*zbar1*etabar1","2":"etabar1^2"})"));

    const Run g = run({"geom", "--potential", "fubini-study", "--at-origin", "--jet-order", "4"});
    REQUIRE(g.code == 0);
    const Json j = g.json();
    CHECK(j["curvature"]["1,1,1,1"] == Json::parse(R"({"1":"2"})"));
    CHECK(j["rho22"] == Json::parse(R"({"eta1^2*etabar1^2":"2"})"));
    CHECK(j["inverse_metric"]["1,1"] == Json::parse(R"({"1":"1"})"));
}

TEST_CASE("product of three functions")
{
    const Run r = run({"star", "--f", "zbar1", "--g", "zbar1", "--h", "z1^2", "--nu-order", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["text"]["2"] == "2");
}

TEST_CASE("expression potentials and output determinism")
{
    const std::vector<std::string> args{"star", "--n", "2", "--potential", "z1*zbar1 + z2*zbar2 + 1/4*z1^2*zbar1*zbar2",
                                        "--f", "zbar1*zbar2", "--g", "z1 + z2^2", "--nu-order", "3"};
    const Run a = run(args);
    const Run b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("config file with inline override")
{
    const std::string path = "sepstar_cli_test_config.json";
    {
        std::ofstream f(path);
        f << R"({"n": 1, "potential": "flat", "nu_order": 1, "f": "zbar1", "g": "z1"})";
    }
    const Run r = run({"star", "--config", path, "--nu-order", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["nu_order"] == 2);
    CHECK(r.json()["text"]["1"] == "1");
    {
        std::ofstream f(path);
        f << R"({"n": 1, "colour": "red"})";
    }
    const Run bad = run({"star", "--config", path, "--f", "1", "--g", "1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("unknown config key 'colour'") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("errors exit with code 2")
{
    const Run index = run({"star", "--n", "2", "--f", "z3", "--g", "z1"});
    CHECK(index.code == 2);
    CHECK(index.err.find("index 3 exceeds dimension 2") != std::string::npos);
    CHECK(index.out.empty());

    CHECK(run({"star", "--f", "z1"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"star", "--n", "0", "--f", "1", "--g", "1"}).code == 2);
    CHECK(run({"geom", "--potential", "z1*zbar1*z1*zbar1"}).code == 2);
    const Run low = run({"star", "--potential", "fubini-study", "--f", "zbar1", "--g", "z1", "--nu-order", "3",
                         "--phi-order", "4"});
    CHECK(low.code == 2);
    CHECK(low.err.find("raise --phi-order") != std::string::npos);
    CHECK(run({"verify", "--samples", "0"}).code == 2);
}

TEST_CASE("help")
{
    const Run r = run({"star", "--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("--nu-order") != std::string::npos);
}
