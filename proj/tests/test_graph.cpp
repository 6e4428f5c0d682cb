#include <doctest.h>

#include "oracle.hpp"
#include "tokgraph/graph.hpp"
#include "tokgraph/token.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

using namespace tokgraph;

TEST_CASE("cycle:4 edges")
{
    auto g = build_family("cycle:4");
    CHECK(g.order() == 4);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("odd graphs")
{
    auto o3 = build_family("odd:3");
    CHECK(o3.order() == 10);
    for (int v = 0; v < 10; ++v) CHECK(o3.degree(v) == 3);
    CHECK(o3 == build_family("petersen"));
    CHECK(build_family("odd:2") == build_family("complete:3"));
    auto o4 = build_family("odd:4");
    CHECK(o4.order() == 35);
    for (int v = 0; v < 35; ++v) CHECK(o4.degree(v) == 4);
}

TEST_CASE("other families")
{
    auto s = build_family("star:5");
    CHECK(s.degree(0) == 4);
    CHECK(s.size() == 4);
    auto km = build_family("complete_multipartite:2,2,3");
    CHECK(km.order() == 7);
    CHECK(km.size() == 2 * 2 + 2 * 3 + 2 * 3);
    CHECK_FALSE(km.adjacent(0, 1));
    CHECK(km.adjacent(1, 2));
    auto q = build_family("hypercube:3");
    CHECK(q.size() == 12);
    CHECK(q.adjacent(0, 4));
    CHECK_FALSE(q.adjacent(0, 3));
    CHECK(build_family("path:1").order() == 1);
}

TEST_CASE("malformed family descriptors")
{
    for (auto bad : {"cycle:2", "cycle", "cycle:", "cycle:4,5", "cycle:x", "odd:1", "hypercube:0", "path:0",
                     "complete_multipartite:2,,3", "complete_multipartite:0,2", "petersen:3", "triangle:3", ""})
        CHECK_THROWS_AS(build_family(bad), GraphError);
}

TEST_CASE("laplacian")
{
    auto l = laplacian(build_family("complete:3"));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(l(i, j) == (i == j ? 2 : -1));
    auto p2 = laplacian(build_family("path:2"));
    CHECK(p2(0, 0) == 1);
    CHECK(p2(0, 1) == -1);
    auto s = eig_sym(to_real(laplacian(build_family("cycle:4")))).spectrum;
    const std::vector<double> want = {0, 2, 2, 4};
    CHECK(oracle::max_dev(s.values, want) < 1e-12);
}

TEST_CASE("cycle spectrum follows 4 sin^2(j pi / n)")
{
    for (int n = 3; n <= 20; ++n) {
        std::vector<double> want;
        for (int j = 0; j < n; ++j) want.push_back(4.0 * std::pow(std::sin(j * std::numbers::pi / n), 2));
        std::sort(want.begin(), want.end());
        CHECK(oracle::max_dev(eig_sym(to_real(laplacian(build_family("cycle:" + std::to_string(n))))).spectrum.values,
                              want) < 1e-10);
    }
}

TEST_CASE("delete_vertex")
{
    CHECK(delete_vertex(build_family("cycle:4"), 0) == build_family("path:3"));
    CHECK(delete_vertex(build_family("complete:5"), 2) == build_family("complete:4"));
    auto e = delete_vertex(build_family("star:5"), 0);
    CHECK(e.order() == 4);
    CHECK(e.size() == 0);
    CHECK_THROWS_AS(delete_vertex(build_family("cycle:4"), 4), GraphError);
    CHECK_THROWS_AS(delete_vertex(build_family("cycle:4"), -1), GraphError);
}

TEST_CASE("bipartite classes")
{
    auto c8 = bipartite_classes(build_family("cycle:8"));
    REQUIRE(c8);
    for (int v = 0; v < 8; ++v) CHECK((*c8)[v] == v % 2);
    CHECK_FALSE(bipartite_classes(build_family("cycle:9")));
    CHECK(bipartite_classes(token_graph(build_family("cycle:8"), 2)));
    CHECK_FALSE(bipartite_classes(build_family("petersen")));
}

TEST_CASE("edge list round trip and rejection")
{
    auto g = build_family("petersen");
    std::stringstream ss;
    write_edge_list(ss, g);
    CHECK(read_edge_list(ss) == g);

    std::istringstream swapped("3 2\n1 0\n\n2 1\n");
    CHECK(read_edge_list(swapped) == build_family("path:3"));

    for (auto bad : {"3 2\n0 1\n0 1\n", "3 1\n0 0\n", "3 1\n0 3\n", "3 2\n0 1\n", "3 1\n0 1\n1 2\n", "x y\n", "",
                     "3 1\n0 1 2\n", "-1 0\n"}) {
        std::istringstream in(bad);
        CHECK_THROWS_AS(read_edge_list(in), GraphError);
    }
}

TEST_CASE("property: random graphs")
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        auto g = oracle::random_graph(rng, n, 0.4);
        for (int u = 0; u < n; ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (int v : g.neighbors(u)) CHECK(g.adjacent(v, u));
        }
        auto l = laplacian(g);
        for (int a = 0; a < n; ++a) {
            long long rowsum = 0;
            for (int b = 0; b < n; ++b) rowsum += l(a, b);
            CHECK(rowsum == 0);
        }

        auto s = eig_sym(to_real(l)).spectrum;
        CHECK(s[0] >= -1e-9);
        double trace = 0.0, degsum = 0.0;
        for (double x : s.values) trace += x;
        for (int v = 0; v < n; ++v) degsum += g.degree(v);
        CHECK(std::abs(trace - degsum) <= 1e-8 * std::max(1.0, degsum));
        CHECK(oracle::max_dev(s.values, oracle::laplacian_eigs(g)) < 1e-9);

        const int i = static_cast<int>(rng() % n);
        auto ld = laplacian(delete_vertex(g, i));
        // Deleting then assembling equals removing row/column i, apart from
        // the degree drop of i's neighbours.
        for (int a = 0, ra = 0; a < n; ++a) {
            if (a == i) continue;
            for (int b = 0, rb = 0; b < n; ++b) {
                if (b == i) continue;
                long long want = l(a, b);
                if (a == b && g.adjacent(a, i)) want -= 1;
                CHECK(ld(ra, rb) == want);
                ++rb;
            }
            ++ra;
        }
    }
}
