#pragma once

// Independent reference implementations used only by the tests.

#include "tokgraph/graph.hpp"
#include "tokgraph/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <random>
#include <vector>

namespace oracle {

inline Eigen::MatrixXd dense(const tokgraph::IntSymMatrix& m)
{
    Eigen::MatrixXd a(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) a(i, j) = static_cast<double>(m(i, j));
    return a;
}

inline Eigen::MatrixXd dense(const tokgraph::Matrix& m)
{
    Eigen::MatrixXd a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
    return a;
}

inline Eigen::MatrixXcd dense(const tokgraph::HermMatrix& m)
{
    Eigen::MatrixXcd a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
    return a;
}

template <class M>
std::vector<double> eigvals(const M& a)
{
    Eigen::SelfAdjointEigenSolver<M> es(a, Eigen::EigenvaluesOnly);
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(v.begin(), v.end());
    return v;
}

/// Eigenvalues of a general real matrix whose spectrum is known to be real.
inline std::vector<double> real_eigvals_general(const Eigen::MatrixXd& a)
{
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
    std::vector<double> v;
    for (int i = 0; i < es.eigenvalues().size(); ++i) v.push_back(es.eigenvalues()(i).real());
    std::sort(v.begin(), v.end());
    return v;
}

inline std::vector<double> laplacian_eigs(const tokgraph::Graph& g) { return eigvals(Eigen::MatrixXd(dense(tokgraph::laplacian(g)))); }

/// Direct k-subset construction by bitmask, independent of colex ranking.
inline std::vector<std::vector<int>> token_adjacency_by_masks(const tokgraph::Graph& g, int k, std::vector<unsigned>& masks)
{
    const int n = g.order();
    masks.clear();
    for (unsigned m = 0; m < (1u << n); ++m)
        if (__builtin_popcount(m) == k) masks.push_back(m);
    std::vector<std::vector<int>> adj(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = 0; j < masks.size(); ++j) {
            const unsigned x = masks[i] ^ masks[j];
            if (__builtin_popcount(x) != 2) continue;
            const int a = __builtin_ctz(x), b = 31 - __builtin_clz(x);
            if (g.adjacent(a, b)) adj[i].push_back(static_cast<int>(j));
        }
    return adj;
}

inline tokgraph::Graph random_graph(std::mt19937& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return tokgraph::Graph(n, e);
}

inline double max_dev(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size()) return INFINITY;
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace oracle
