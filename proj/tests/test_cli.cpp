#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "polar/cli.hpp"

namespace {

std::string data(const std::string& name) { return std::string(POLAR_DATA_DIR) + "/" + name; }

struct Run {
    int exit;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = polar::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("all subcommands succeed on the running example") {
    for (const char* cmd : {"gecc", "conormal", "polar", "main1", "main2", "empty", "leattach",
                            "milnor", "family"}) {
        Run r = cli({cmd, "--input", data("example2_6.json")});
        CHECK(r.exit == 0);
        CHECK(!r.out.empty());
        CHECK(r.err.empty());
    }
}

TEST_CASE("negative verdict reports exit code two") {
    Run r = cli({"main1", "--input", data("rem_main2.json")});
    CHECK(r.exit == 2);
    CHECK(r.out.find("verdicts FALSE") != std::string::npos);

    Run rj = cli({"main1", "--input", data("rem_main2.json"), "--json"});
    CHECK(rj.exit == 2);
    auto doc = nlohmann::json::parse(rj.out);
    CHECK(doc["result"]["verdicts"]["hold"] == false);

    Run rm2 = cli({"main2", "--input", data("rem_main2.json")});
    CHECK(rm2.exit == 2);
}

TEST_CASE("documented worked values through the command line") {
    Run milnor = cli({"milnor", "--input", data("cusp.json")});
    CHECK(milnor.exit == 0);
    CHECK(milnor.out == "2\n");

    Run polar = cli({"polar", "--input", data("example3_5.json"), "--json"});
    CHECK(polar.exit == 0);
    auto doc = nlohmann::json::parse(polar.out);
    const auto& curve = doc["result"]["curve"];
    REQUIRE(curve.size() == 1);
    CHECK(curve[0]["coeff_by_degree"]["0"]["rank"] == 2);
    CHECK(curve[0]["coeff_by_degree"].size() == 1);
}

TEST_CASE("usage problems exit with code 64") {
    CHECK(cli({"frobnicate", "--input", "x.json"}).exit == 64);
    CHECK(cli({"polar"}).exit == 64);
    CHECK(cli({"polar", "--input", "x.json", "--order", "degrevlex"}).exit == 64);
    CHECK(cli({}).exit == 64);
}

TEST_CASE("missing and malformed inputs exit with code 1") {
    CHECK(cli({"polar", "--input", data("no_such_file.json")}).exit == 1);

    std::string bad = std::string(POLAR_DATA_DIR) + "/../build/bad_problem.json";
    {
        std::ofstream f(bad);
        f << R"({"variables":["x","y"],"shift":1,"strata":[{"name":"a","closure":["x"],"dim":1}],"g":"x"})";
    }
    Run r = cli({"polar", "--input", bad});
    CHECK(r.exit == 1);
    CHECK(r.err.find("/f") != std::string::npos);  // schema error names the field

    {
        std::ofstream f(bad);
        f << R"({"variables":["x","y"],"shift":1,"strata":[{"name":"a","closure":["x"],"dim":0}],"f":"x","g":"y"})";
    }
    Run r2 = cli({"polar", "--input", bad});
    CHECK(r2.exit == 1);
    CHECK(r2.err.find("dim") != std::string::npos);
}

TEST_CASE("budget can be exhausted via the environment") {
    setenv("POLAR_BUDGET", "2", 1);
    Run r = cli({"gecc", "--input", data("example2_6.json")});
    unsetenv("POLAR_BUDGET");
    CHECK(r.exit == 1);
    CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("output is byte-stable and JSON re-parses to itself") {
    for (const char* cmd : {"gecc", "polar", "main1", "empty", "family"}) {
        Run a = cli({cmd, "--input", data("example2_6.json"), "--json", "--seed", "7"});
        Run b = cli({cmd, "--input", data("example2_6.json"), "--json", "--seed", "7"});
        CHECK(a.out == b.out);
        auto doc = nlohmann::json::parse(a.out);
        CHECK(doc.dump(2) + "\n" == a.out);
        CHECK(doc["seed"] == 7);
    }
}

TEST_CASE("golden documents") {
    struct Golden {
        std::vector<std::string> args;
        const char* file;
    };
    const Golden cases[] = {
        {{"polar", "--input", data("example3_5.json"), "--json"}, "polar_example3_5.json"},
        {{"main1", "--input", data("example2_6.json"), "--json"}, "main1_example2_6.json"},
        {{"main1", "--input", data("rem_main2.json"), "--json"}, "main1_rem_main2.json"},
        {{"gecc", "--input", data("two_planes.json"), "--json"}, "gecc_two_planes.json"},
        {{"leattach", "--input", data("cusp.json"), "--json"}, "leattach_cusp.json"},
    };
    for (const auto& c : cases) {
        Run r = cli(c.args);
        std::string path = std::string(POLAR_GOLDEN_DIR) + "/" + c.file;
        std::ifstream in(path);
        REQUIRE_MESSAGE(in.good(), "missing golden file ", path);
        std::stringstream want;
        want << in.rdbuf();
        CHECK_MESSAGE(r.out == want.str(), "golden mismatch for ", c.file);
    }
}
