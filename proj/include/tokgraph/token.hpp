#pragma once

#include "tokgraph/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace tokgraph {

/// A dense computation would exceed the configured C(n,k) cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// F_k(G): vertices are the k-subsets of V(G) indexed by colex rank; A ~ B
/// when A and B differ by exchanging the endpoints of one edge of G.
Graph token_graph(const Graph& g, int k);

/// The C(n,k) x n incidence matrix of k-subsets. Rows follow colex rank.
class BinomialMatrix {
public:
    BinomialMatrix(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t rows() const { return subsets_.size(); }
    const std::vector<int>& subset(std::size_t row) const { return subsets_.at(row); }

    /// B v
    std::vector<double> lift(const std::vector<double>& v) const;
    /// B^T u
    std::vector<double> project(const std::vector<double>& u) const;

    std::vector<std::vector<int>> to_dense() const;

private:
    int n_, k_;
    std::vector<std::vector<int>> subsets_;
};

/// Second entry of the ascending Laplacian spectrum. Exactly 0 for a
/// disconnected graph.
double algebraic_connectivity(const Graph& g);

/// alpha(G \ i) / alpha(G).
double kirkland_kappa(const Graph& g, int i);

struct Check {
    Check() = default;
    explicit Check(std::string n) : name(std::move(n)) {}

    std::string name;
    bool pass = true;
    double lhs = 0.0, rhs = 0.0, tol = 0.0;
    bool informational = false;  ///< reported, never counted as a failure
    std::string detail;
};

nlohmann::json to_json(const Check& c);

struct ConnectivityOptions {
    double tol = 1e-8;
    std::uint64_t cap = 5000;
    std::string label;  ///< echoed as "graph" in the report
};

struct ConnectivityReport {
    std::string graph;
    int k = 0;
    std::vector<Check> checks;
    std::vector<std::string> warnings;

    bool all_pass() const;
    nlohmann::json to_json() const;
};

/// Runs the monotone chain alpha(G) >= alpha(F_2) >= ... >= alpha(F_k), the
/// equality alpha(F_k) = alpha(G), the cycle bound
/// alpha(F_k(C_n)) >= k/(k-1) alpha(P_{n-1}) when G is a cycle, and reports
/// k/(k-1) min_i alpha(F_{k-1}(G \ i)) for reference.
/// Throws CapExceeded when some token graph needed has more than cap vertices.
ConnectivityReport verify_connectivity_relations(const Graph& g, int k, const ConnectivityOptions& opt = {});

}  // namespace tokgraph
