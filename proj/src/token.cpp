#include "tokgraph/token.hpp"

#include "tokgraph/combinatorics.hpp"
#include "tokgraph/linalg.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace tokgraph {

namespace {

void require_cap(int n, int k, std::uint64_t cap)
{
    const auto size = binomial(n, k);
    if (size > cap)
        throw CapExceeded("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(size) +
                          " exceeds the cap of " + std::to_string(cap));
}

bool is_cycle(const Graph& g)
{
    if (g.order() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

}  // namespace

Graph token_graph(const Graph& g, int k)
{
    const int n = g.order();
    if (k < 1 || k > n - 1)
        throw GraphError("token count k=" + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
    const auto count = binomial(n, k);
    if (count > static_cast<std::uint64_t>(INT_MAX)) throw GraphError("token graph too large");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(binomial(n - 2, k - 1) * g.size());
    std::vector<char> member(n, 0);
    std::vector<int> t(k);
    for (std::uint64_t r = 0; r < count; ++r) {
        auto s = subset_unrank(r, n, k);
        for (int x : s) member[x] = 1;
        for (int a : s) {
            for (int b : g.neighbors(a)) {
                if (member[b]) continue;
                t = s;
                *std::find(t.begin(), t.end(), a) = b;
                std::sort(t.begin(), t.end());
                const auto rt = subset_rank(t);
                if (r < rt) edges.emplace_back(static_cast<int>(r), static_cast<int>(rt));
            }
        }
        for (int x : s) member[x] = 0;
    }
    return Graph(static_cast<int>(count), edges);
}

BinomialMatrix::BinomialMatrix(int n, int k) : n_(n), k_(k)
{
    if (n < 1 || k < 1 || k > n)
        throw std::out_of_range("binomial matrix needs 1 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
    const auto count = binomial(n, k);
    subsets_.reserve(count);
    for (std::uint64_t r = 0; r < count; ++r) subsets_.push_back(subset_unrank(r, n, k));
}

std::vector<double> BinomialMatrix::lift(const std::vector<double>& v) const
{
    if (v.size() != static_cast<std::size_t>(n_)) throw MatrixError("lift: vector length must be n");
    std::vector<double> out(rows(), 0.0);
    for (std::size_t i = 0; i < rows(); ++i)
        for (int x : subsets_[i]) out[i] += v[x];
    return out;
}

std::vector<double> BinomialMatrix::project(const std::vector<double>& u) const
{
    if (u.size() != rows()) throw MatrixError("project: vector length must be C(n,k)");
    std::vector<double> out(n_, 0.0);
    for (std::size_t i = 0; i < rows(); ++i)
        for (int x : subsets_[i]) out[x] += u[i];
    return out;
}

std::vector<std::vector<int>> BinomialMatrix::to_dense() const
{
    std::vector<std::vector<int>> b(rows(), std::vector<int>(n_, 0));
    for (std::size_t i = 0; i < rows(); ++i)
        for (int x : subsets_[i]) b[i][x] = 1;
    return b;
}

double algebraic_connectivity(const Graph& g)
{
    if (g.order() < 2) throw GraphError("algebraic connectivity needs at least 2 vertices");
    if (!is_connected(g)) return 0.0;
    return eig_sym(to_real(laplacian(g))).spectrum[1];
}

double kirkland_kappa(const Graph& g, int i)
{
    if (g.order() < 3) throw GraphError("kappa needs at least 3 vertices");
    auto h = delete_vertex(g, i);
    if (!is_connected(g) || !is_connected(h)) throw GraphError("kappa: G or G minus vertex is disconnected");
    const double a = algebraic_connectivity(g);
    if (a < 1e-12) throw GraphError("kappa: connectivity of G is numerically zero");
    return algebraic_connectivity(h) / a;
}

nlohmann::json to_json(const Check& c)
{
    nlohmann::json j{{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"tol", c.tol}};
    if (c.informational) j["informational"] = true;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

bool ConnectivityReport::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass || c.informational; });
}

nlohmann::json ConnectivityReport::to_json() const
{
    nlohmann::json j{{"graph", graph}, {"k", k}, {"checks", nlohmann::json::array()}};
    for (const auto& c : checks) j["checks"].push_back(tokgraph::to_json(c));
    if (!warnings.empty()) j["warnings"] = warnings;
    return j;
}

ConnectivityReport verify_connectivity_relations(const Graph& g, int k, const ConnectivityOptions& opt)
{
    const int n = g.order();
    if (k < 1 || k > n - 1) throw GraphError("token count k=" + std::to_string(k) + " out of range");
    for (int h = 1; h <= k; ++h) require_cap(n, h, opt.cap);

    ConnectivityReport rep;
    rep.graph = opt.label;
    rep.k = k;
    if (!is_connected(g)) rep.warnings.push_back("graph is disconnected; connectivities are 0");

    std::vector<double> alpha{algebraic_connectivity(g)};
    for (int h = 2; h <= k; ++h) alpha.push_back(algebraic_connectivity(token_graph(g, h)));

    for (int h = 2; h <= k; ++h) {
        Check c{"non_increasing F_" + std::to_string(h - 1) + " >= F_" + std::to_string(h)};
        c.lhs = alpha[h - 2];
        c.rhs = alpha[h - 1];
        c.tol = opt.tol;
        c.pass = c.lhs >= c.rhs - opt.tol;
        if (!c.pass) c.detail = "alpha(F_" + std::to_string(h) + ") exceeds alpha(F_" + std::to_string(h - 1) + ")";
        rep.checks.push_back(c);
    }

    {
        Check c{"alpha(F_k) == alpha(G)"};
        c.lhs = alpha.back();
        c.rhs = alpha.front();
        c.tol = opt.tol;
        c.pass = std::abs(c.lhs - c.rhs) <= opt.tol;
        if (!c.pass) c.detail = "connectivity of the token graph differs from the base graph";
        rep.checks.push_back(c);
    }

    if (k >= 2 && is_cycle(g)) {
        Check c{"cycle lower bound k/(k-1) alpha(P_{n-1})"};
        c.lhs = alpha.back();
        c.rhs = static_cast<double>(k) / (k - 1) * algebraic_connectivity(build_family("path:" + std::to_string(n - 1)));
        c.tol = opt.tol;
        c.pass = c.lhs >= c.rhs - opt.tol;
        if (!c.pass) c.detail = "token graph connectivity below the path bound";
        rep.checks.push_back(c);
    }

    if (k >= 2 && k - 1 <= n - 2) {
        Check c{"xi(G-) bound (informational)"};
        c.informational = true;
        c.tol = opt.tol;
        try {
            for (int h = 1; h <= k - 1; ++h) require_cap(n - 1, h, opt.cap);
            double xi = INFINITY;
            for (int i = 0; i < n; ++i) {
                auto gi = delete_vertex(g, i);
                xi = std::min(xi, algebraic_connectivity(k == 2 ? gi : token_graph(gi, k - 1)));
            }
            c.lhs = alpha.back();
            c.rhs = static_cast<double>(k) / (k - 1) * xi;
            c.pass = c.lhs >= c.rhs - opt.tol;
            c.detail = "only implied when alpha(F_k) < alpha(G)";
            rep.checks.push_back(c);
        } catch (const CapExceeded& e) {
            rep.warnings.push_back(std::string("xi(G-) skipped: ") + e.what());
        }
    }
    return rep;
}

}  // namespace tokgraph
