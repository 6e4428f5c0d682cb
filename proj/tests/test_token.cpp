#include <doctest.h>

#include "oracle.hpp"
#include "tokgraph/combinatorics.hpp"
#include "tokgraph/token.hpp"

#include <cmath>
#include <numbers>

using namespace tokgraph;

TEST_CASE("colex ranking")
{
    const std::vector<std::vector<int>> order = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
    for (std::size_t r = 0; r < order.size(); ++r) {
        CHECK(subset_rank(order[r]) == r);
        CHECK(subset_unrank(r, 4, 2) == order[r]);
    }
    CHECK(subset_unrank(5, 4, 2) == std::vector<int>{2, 3});
    for (std::uint64_t r = 0; r < binomial(10, 3); ++r) CHECK(subset_rank(subset_unrank(r, 10, 3)) == r);
    CHECK_THROWS_AS(subset_unrank(6, 4, 2), std::out_of_range);
    CHECK(pair_rank(3, 1) == subset_rank(std::vector<int>{1, 3}));
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(60, 30) == 118264581564861424ULL);
    CHECK_THROWS(binomial(200, 100));
}

TEST_CASE("token graph basics")
{
    auto g = build_family("petersen");
    CHECK(token_graph(g, 1) == g);
    auto f = token_graph(build_family("cycle:9"), 2);
    CHECK(f.order() == 36);
    CHECK(f.size() == 63);
    auto j42 = token_graph(build_family("complete:4"), 2);
    CHECK(j42.order() == 6);
    for (int v = 0; v < 6; ++v) CHECK(j42.degree(v) == 4);
    CHECK_THROWS_AS(token_graph(g, 0), GraphError);
    CHECK_THROWS_AS(token_graph(g, 10), GraphError);
}

TEST_CASE("property: token graph against bitmask construction")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 7);
        const int k = 1 + static_cast<int>(rng() % (n - 1));
        auto g = oracle::random_graph(rng, n, 0.5);
        auto f = token_graph(g, k);
        CHECK(f.size() == binomial(n - 2, k - 1) * g.size());
        std::vector<unsigned> masks;
        auto adj = oracle::token_adjacency_by_masks(g, k, masks);
        // map bitmask order to colex ranks
        std::vector<int> rank_of(masks.size());
        for (std::size_t i = 0; i < masks.size(); ++i) {
            std::vector<int> s;
            for (int b = 0; b < n; ++b)
                if (masks[i] >> b & 1u) s.push_back(b);
            rank_of[i] = static_cast<int>(subset_rank(s));
        }
        for (std::size_t i = 0; i < masks.size(); ++i) {
            CHECK(static_cast<std::size_t>(f.degree(rank_of[i])) == adj[i].size());
            for (int j : adj[i]) CHECK(f.adjacent(rank_of[i], rank_of[j]));
        }
        if (bipartite_classes(g)) CHECK(bipartite_classes(f));
    }
}

TEST_CASE("binomial matrix")
{
    BinomialMatrix b(3, 2);
    CHECK(b.to_dense() == std::vector<std::vector<int>>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    BinomialMatrix b73(7, 3);
    auto d = b73.to_dense();
    for (const auto& row : d) CHECK(std::accumulate(row.begin(), row.end(), 0) == 3);
    for (int c = 0; c < 7; ++c) {
        int s = 0;
        for (const auto& row : d) s += row[c];
        CHECK(s == 15);
    }
    CHECK(b73.lift(std::vector<double>(7, 1.0)) == std::vector<double>(35, 3.0));
    CHECK_THROWS_AS(BinomialMatrix(3, 4), std::out_of_range);
    CHECK_THROWS_AS(b73.lift(std::vector<double>(6)), MatrixError);
    CHECK_THROWS_AS(b73.project(std::vector<double>(7)), MatrixError);
}

TEST_CASE("lifted eigenvectors")
{
    auto g = build_family("cycle:9");
    auto e = eig_sym(to_real(laplacian(g)), true);
    auto l2 = to_real(laplacian(token_graph(g, 2)));
    BinomialMatrix b(9, 2);
    auto bv = b.lift(e.vectors.column(1));
    auto lbv = matvec(l2, bv);
    for (std::size_t i = 0; i < bv.size(); ++i) lbv[i] -= e.spectrum[1] * bv[i];
    CHECK(norm2(lbv) <= 1e-8);
}

TEST_CASE("projection of a null-space element of B^T")
{
    BinomialMatrix b(6, 2);
    Eigen::MatrixXd bt(6, 15);
    auto d = b.to_dense();
    for (int i = 0; i < 15; ++i)
        for (int j = 0; j < 6; ++j) bt(j, i) = d[i][j];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(bt);
    Eigen::MatrixXd ker = lu.kernel();
    REQUIRE(ker.cols() == 9);
    std::vector<double> u(ker.col(0).data(), ker.col(0).data() + 15);
    for (double x : b.project(u)) CHECK(std::abs(x) < 1e-12);
}

TEST_CASE("algebraic connectivity")
{
    CHECK(algebraic_connectivity(build_family("cycle:9")) ==
          doctest::Approx(4 * std::pow(std::sin(std::numbers::pi / 9), 2)).epsilon(1e-12));
    CHECK(algebraic_connectivity(build_family("path:9")) ==
          doctest::Approx(2 * (1 - std::cos(std::numbers::pi / 9))).epsilon(1e-12));
    CHECK(algebraic_connectivity(build_family("complete:5")) == doctest::Approx(5));
    CHECK(algebraic_connectivity(delete_vertex(build_family("star:5"), 0)) == 0.0);
    CHECK_THROWS_AS(algebraic_connectivity(build_family("path:1")), GraphError);
}

TEST_CASE("kirkland kappa")
{
    CHECK(kirkland_kappa(build_family("petersen"), 3) == doctest::Approx((3 - std::sqrt(3.0)) / 2));
    for (int n = 3; n <= 8; ++n)
        CHECK(kirkland_kappa(build_family("complete:" + std::to_string(n)), 0) == doctest::Approx((n - 1.0) / n));
    CHECK(kirkland_kappa(build_family("hypercube:3"), 5) ==
          doctest::Approx((1 - std::cos(2 * std::numbers::pi / 5))));
    CHECK_THROWS_AS(kirkland_kappa(build_family("star:5"), 0), GraphError);
}

TEST_CASE("connectivity relations")
{
    ConnectivityOptions opt;
    opt.label = "cycle:9";
    auto rep = verify_connectivity_relations(build_family("cycle:9"), 2, opt);
    CHECK(rep.all_pass());
    CHECK(rep.to_json()["graph"] == "cycle:9");
    CHECK(rep.to_json()["checks"].size() == rep.checks.size());

    auto c4 = verify_connectivity_relations(build_family("cycle:4"), 2);
    bool saw_bound = false;
    for (const auto& c : c4.checks)
        if (c.name.find("cycle lower bound") != std::string::npos) {
            saw_bound = true;
            CHECK(c.lhs == doctest::Approx(2.0));
            CHECK(c.rhs == doctest::Approx(2.0));
            CHECK(c.pass);
        }
    CHECK(saw_bound);

    auto o3 = verify_connectivity_relations(build_family("odd:3"), 2);
    CHECK(o3.all_pass());
    CHECK(o3.checks.front().rhs == doctest::Approx(2.0));

    auto c9k3 = verify_connectivity_relations(build_family("cycle:9"), 3);
    CHECK(c9k3.all_pass());

    opt.cap = 30;
    CHECK_THROWS_AS(verify_connectivity_relations(build_family("cycle:9"), 2, opt), CapExceeded);

    auto disc = verify_connectivity_relations(delete_vertex(build_family("star:5"), 0), 2);
    CHECK_FALSE(disc.warnings.empty());
}

TEST_CASE("property: spectral inclusion for h < k <= n/2")
{
    std::mt19937 rng(17);
    int done = 0;
    while (done < 12) {
        const int n = 4 + static_cast<int>(rng() % 7);
        auto g = oracle::random_graph(rng, n, 0.5);
        for (int k = 2; k <= n / 2; ++k) {
            if (binomial(n, k) > 500) continue;
            auto sk = eig_sym(to_real(laplacian(token_graph(g, k)))).spectrum;
            for (int h = 1; h < k; ++h) {
                auto sh = eig_sym(to_real(laplacian(h == 1 ? g : token_graph(g, h)))).spectrum;
                CHECK(spectrum_contains(sk, sh, 1e-8));
            }
        }
        ++done;
    }
}

TEST_CASE("property: multipartite connectivity")
{
    for (auto parts : {"1,1,2", "2,2,3", "1,2,2,4", "3,3,3", "1,1,1,5"}) {
        auto g = build_family(std::string("complete_multipartite:") + parts);
        int n = g.order(), largest = 0;
        for (int v = 0; v < n; ++v) largest = std::max(largest, n - g.degree(v));
        CHECK(algebraic_connectivity(token_graph(g, 2)) == doctest::Approx(n - largest).epsilon(1e-10));
    }
}

TEST_CASE("property: connectivity is invariant under relabeling")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 10);
        auto g = oracle::random_graph(rng, n, 0.45);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> e;
        for (auto [a, b] : g.edges()) e.emplace_back(perm[a], perm[b]);
        CHECK(std::abs(algebraic_connectivity(g) - algebraic_connectivity(Graph(n, e))) < 1e-9);
    }
}
