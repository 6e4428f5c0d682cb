#pragma once

#include "tokgraph/graph.hpp"
#include "tokgraph/linalg.hpp"

#include <boost/rational.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace tokgraph {

class PartitionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Disjoint, covering, nonempty cells over 0..n-1. Each cell is sorted.
class Partition {
public:
    /// Validates the cells; throws PartitionError on overlap, gaps or empty cells.
    Partition(int n, std::vector<std::vector<int>> cells);

    int order() const { return n_; }
    std::size_t size() const { return cells_.size(); }
    const std::vector<int>& cell(std::size_t i) const { return cells_.at(i); }
    const std::vector<std::vector<int>>& cells() const { return cells_; }
    int cell_of(int v) const { return cell_of_.at(v); }

    /// n x r 0/1 characteristic matrix S.
    std::vector<std::vector<int>> characteristic() const;

    nlohmann::json to_json() const;

private:
    int n_;
    std::vector<std::vector<int>> cells_;
    std::vector<int> cell_of_;
};

Partition singleton_partition(int n);

struct RegularityWitness {
    int u, u_prime, cell;
    int count_u, count_u_prime;  ///< neighbors of u, u' inside `cell`
};

struct Regularity {
    bool regular = true;
    std::optional<RegularityWitness> witness;
    explicit operator bool() const { return regular; }
};

/// Integer-exact equitability test.
Regularity is_regular(const Graph& g, const Partition& p);

using Rational = boost::rational<long long>;

/// Q_L = (S^T S)^{-1} S^T L S in exact arithmetic.
class QuotientMatrix {
public:
    QuotientMatrix(std::vector<std::vector<Rational>> entries, std::vector<long long> cell_sizes);

    std::size_t dim() const { return q_.size(); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return q_[i][j]; }
    const std::vector<long long>& cell_sizes() const { return sizes_; }
    bool is_integral() const;

    Matrix to_real() const;
    /// Q is similar to the symmetric D^{-1/2} S^T L S D^{-1/2}; solved that way.
    Spectrum spectrum() const;

    /// Integers where possible, "p/q" strings otherwise.
    nlohmann::json to_json() const;

    friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) = default;

private:
    std::vector<std::vector<Rational>> q_;
    std::vector<long long> sizes_;
};

/// Throws PartitionError when p is not regular.
QuotientMatrix quotient_laplacian(const Graph& g, const Partition& p);

/// Checks L S == S Q exactly.
bool satisfies_ls_eq_sq(const Graph& g, const Partition& p, const QuotientMatrix& q);

enum class F2Shape { path, u };

/// Partitions of F_2(C_n) (pairs indexed by colex rank).
///   path: cell d-1 holds the pairs at cycle distance d, d = 1..floor(n/2).
///   u (n = 2v): the pair {j, j+d mod n}, d < v, goes to cell d-1 when j is
///   even and to cell 2v-1-d when j is odd; antipodal pairs form cell v-1.
Partition f2_cycle_partition(int n, F2Shape shape);

}  // namespace tokgraph
