#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tokgraph {

/// Raised for malformed family descriptors, edge lists and out-of-range
/// vertex indices.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted and symmetric; loops and multi-edges are
/// rejected on construction. Instances are immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const std::pair<int, int>> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    bool adjacent(int u, int v) const;

    /// Edges as (i, j) with i < j, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
};

/// Dense symmetric integer matrix. Used for Laplacians, where exactness
/// matters for the partition identities.
class IntSymMatrix {
public:
    IntSymMatrix() = default;
    explicit IntSymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

    int dim() const { return n_; }
    std::int64_t operator()(int i, int j) const { return a_[idx(i, j)]; }
    /// Sets both (i,j) and (j,i).
    void set(int i, int j, std::int64_t v);
    void add(int i, int j, std::int64_t v);

    friend bool operator==(const IntSymMatrix&, const IntSymMatrix&) = default;

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
    int n_ = 0;
    std::vector<std::int64_t> a_;
};

/// Builds a named graph from a descriptor such as "cycle:9", "odd:3",
/// "complete_multipartite:2,2,3" or "petersen".
///
/// Canonical labelings:
///   cycle:n     i ~ i±1 mod n
///   path:n      i ~ i+1
///   star:n      center 0, leaves 1..n-1
///   complete_multipartite:n1,...,nr  parts are consecutive index blocks
///   odd:r       (r-1)-subsets of {0..2r-2} in colex order, adjacent when disjoint
///   hypercube:d d-bit integers, adjacent at Hamming distance 1
///   petersen    same labeling as odd:3
Graph build_family(std::string_view spec);

IntSymMatrix laplacian(const Graph& g);

/// G \ i with the remaining vertices renumbered in their original order.
Graph delete_vertex(const Graph& g, int i);

/// BFS 2-coloring; components are started from their lowest vertex, which
/// gets color 0. Empty when the graph has an odd cycle.
std::optional<std::vector<int>> bipartite_classes(const Graph& g);

bool is_connected(const Graph& g);

/// Edge-list text format: "n m" then m lines "i j" with i < j.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace tokgraph
