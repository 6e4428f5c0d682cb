#include <doctest.h>

#include "oracle.hpp"
#include "tokgraph/cli.hpp"
#include "tokgraph/token.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

using namespace tokgraph;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "tokgraph");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args)
{
    auto r = run(std::move(args));
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("help and usage errors")
{
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"spectrum"}).code == 2);
    CHECK(run({"spectrum", "--graph", "cycle:5", "--bogus"}).code == 2);
    CHECK(run({"spectrum", "--graph", "cycle:5", "--method", "magic"}).code == 2);
    CHECK(run({"spectrum", "--graph", "cycle:5", "--k", "0"}).code == 2);
    CHECK(run({"spectrum", "--graph", "cycle:5", "--k", "5"}).code == 2);
    CHECK(run({"spectrum", "--graph", "wheel:5"}).code == 2);
    CHECK(run({"spectrum", "--graph", "path:5", "--method", "lift"}).code == 2);
    CHECK(run({"spectrum", "--graph", "cycle:5", "--k", "3", "--method", "overlift"}).code == 2);
    CHECK(run({"spectrum", "--graph", "file:/nonexistent/graph.txt"}).code == 2);
    CHECK(run({"quotient", "--n", "9", "--shape", "u"}).code == 2);
    CHECK(run({"alpha", "--graph", "petersen", "--delete", "x"}).code == 2);
    CHECK(run({"alpha", "--graph", "petersen", "--delete", "10"}).code == 2);
    CHECK(run({"asympt", "--n", "10", "--r", "10"}).code == 2);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("numerical refusals exit 1")
{
    auto r = run({"spectrum", "--graph", "cycle:20", "--k", "10"});
    CHECK(r.code == 1);
    CHECK(r.err.find("cap") != std::string::npos);
    CHECK(run({"spectrum", "--graph", "cycle:8", "--method", "lift"}).code == 1);
    CHECK(run({"asympt", "--n", "10", "--r", "2"}).code == 1);
}

TEST_CASE("brute spectrum JSON")
{
    auto j = run_json({"spectrum", "--graph", "cycle:6"});
    CHECK(j["n"] == 6);
    CHECK(j["k"] == 2);
    CHECK(j["method"] == "brute");
    CHECK(j["per_r"].empty());
    CHECK(j["lambda_removed"].empty());
    auto s = j["spectrum"].get<std::vector<double>>();
    CHECK(s.size() == 15);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(oracle::max_dev(s, oracle::laplacian_eigs(token_graph(build_family("cycle:6"), 2))) < 1e-11);
}

TEST_CASE("JSON and CSV carry identical values")
{
    auto j = run_json({"spectrum", "--graph", "petersen", "--k", "2"});
    auto r = run({"spectrum", "--graph", "petersen", "--k", "2", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "index,value");
    std::vector<double> csv;
    while (std::getline(in, line)) {
        auto comma = line.find(',');
        CHECK(std::stoul(line.substr(0, comma)) == csv.size());
        csv.push_back(std::strtod(line.c_str() + comma + 1, nullptr));
    }
    CHECK(csv == j["spectrum"].get<std::vector<double>>());
}

TEST_CASE("table format groups multiplicities")
{
    auto r = run({"spectrum", "--graph", "complete:4", "--k", "1", "--format", "table"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("multiplicity") != std::string::npos);
    CHECK(r.out.find("4               3") != std::string::npos);
}

TEST_CASE("output is deterministic")
{
    auto a = run({"overlift", "--n", "12", "--per-r"});
    auto b = run({"overlift", "--n", "12", "--per-r"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("overlift and lift agree with brute force")
{
    for (int n : {6, 8, 9, 10}) {
        const std::string g = "cycle:" + std::to_string(n);
        auto brute = run_json({"spectrum", "--graph", g})["spectrum"].get<std::vector<double>>();
        auto over = run_json({"spectrum", "--graph", g, "--method", "overlift"});
        CHECK(over["method"] == "overlift");
        CHECK(over["per_r"].size() == static_cast<std::size_t>(n));
        CHECK(oracle::max_dev(over["spectrum"].get<std::vector<double>>(), brute) < 1e-10);
        if (n % 4 != 0) {
            auto lift = run_json({"spectrum", "--graph", g, "--method", "lift"});
            CHECK(oracle::max_dev(lift["spectrum"].get<std::vector<double>>(), brute) < 1e-10);
        }
    }
    auto ov = run_json({"overlift", "--n", "8"});
    CHECK(ov["per_r"].empty());
    CHECK(ov["lambda_removed"] == nlohmann::json({4, 4, 4, 4}));
}

TEST_CASE("token edge list round trips")
{
    auto r = run({"token", "--graph", "cycle:5", "--k", "2"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    CHECK(read_edge_list(in) == token_graph(build_family("cycle:5"), 2));

    const std::string path = "tokgraph_cli_test_edges.txt";
    {
        std::ofstream f(path);
        f << r.out;
    }
    auto j = run_json({"alpha", "--graph", "file:" + path});
    CHECK(j["alpha"].get<double>() == doctest::Approx(2 - 2 * std::cos(2 * M_PI / 5)).epsilon(1e-11));
    std::remove(path.c_str());
}

TEST_CASE("alpha")
{
    auto j = run_json({"alpha", "--graph", "petersen"});
    CHECK(j["alpha"].get<double>() == doctest::Approx(2.0).epsilon(1e-11));
    CHECK(j["connected"] == true);
    CHECK_FALSE(j.contains("deleted"));
    auto d = run_json({"alpha", "--graph", "petersen", "--delete", "0"});
    CHECK(d["deleted"] == 0);
    CHECK(d["alpha"].get<double>() == doctest::Approx(1.2679491924).epsilon(1e-9));
    auto k2 = run_json({"alpha", "--graph", "complete_multipartite:2,3", "--k", "2"});
    CHECK(k2["alpha"].get<double>() == doctest::Approx(2.0).epsilon(1e-11));
    auto disc = run_json({"alpha", "--graph", "star:4", "--delete", "0"});
    CHECK(disc["connected"] == false);
    CHECK(disc["alpha"] == 0);
}

TEST_CASE("quotient and asympt")
{
    auto q = run_json({"quotient", "--n", "8", "--shape", "path"});
    CHECK(q["matrix"] == nlohmann::json({{2, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 4, -2}, {0, 0, -4, 4}}));
    CHECK(q["cells"].size() == 4);
    CHECK(q["spectrum"].size() == 4);
    auto u = run_json({"quotient", "--n", "8", "--shape", "u"});
    CHECK(u["cells"].size() == 7);

    auto a = run_json({"asympt", "--n", "1001", "--r", "1"});
    CHECK(a["asymptotic"].size() == a["exact"].size());
    CHECK(a["max_deviation"].get<double>() < 1e-3);
    auto e = run_json({"asympt", "--n", "402", "--r", "3"});
    CHECK(e["asymptotic"].size() == 200);
    CHECK(e["exact"].size() == 200);
}

TEST_CASE("verify suites")
{
    auto inv = run({"verify", "--suite", "invariants"});
    CHECK(inv.code == 0);
    CHECK(inv.err.find("0 failed") != std::string::npos);

    auto all = run({"verify", "--suite", "all"});
    CHECK(all.code == 1);
    auto j = nlohmann::json::parse(all.out);
    CHECK(j["failures"] == 2);
    std::vector<std::string> failed;
    for (const auto& c : j["checks"])
        if (!c["pass"].get<bool>() && !c.value("informational", false)) failed.push_back(c["name"]);
    CHECK(failed == std::vector<std::string>{"K_1,2 alpha minus larger side", "Petersen alpha minus vertex vs 1.26"});

    auto t = run({"verify", "--suite", "paper-tables", "--format", "table"});
    CHECK(t.code == 1);
    CHECK(t.out.find("FAIL  Petersen alpha minus vertex") != std::string::npos);
}
