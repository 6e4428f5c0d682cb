#include "tokgraph/partitions.hpp"

#include "tokgraph/combinatorics.hpp"

#include <algorithm>
#include <cmath>

namespace tokgraph {

Partition::Partition(int n, std::vector<std::vector<int>> cells) : n_(n), cells_(std::move(cells)), cell_of_(n, -1)
{
    if (n < 0) throw PartitionError("partition order must be non-negative");
    for (std::size_t c = 0; c < cells_.size(); ++c) {
        auto& cell = cells_[c];
        if (cell.empty()) throw PartitionError("empty cell " + std::to_string(c));
        std::sort(cell.begin(), cell.end());
        for (int v : cell) {
            if (v < 0 || v >= n) throw PartitionError("vertex " + std::to_string(v) + " out of range");
            if (cell_of_[v] >= 0) throw PartitionError("vertex " + std::to_string(v) + " appears twice");
            cell_of_[v] = static_cast<int>(c);
        }
    }
    for (int v = 0; v < n; ++v)
        if (cell_of_[v] < 0) throw PartitionError("vertex " + std::to_string(v) + " is in no cell");
}

std::vector<std::vector<int>> Partition::characteristic() const
{
    std::vector<std::vector<int>> s(n_, std::vector<int>(cells_.size(), 0));
    for (int v = 0; v < n_; ++v) s[v][cell_of_[v]] = 1;
    return s;
}

nlohmann::json Partition::to_json() const { return {{"cells", cells_}}; }

Partition singleton_partition(int n)
{
    std::vector<std::vector<int>> cells;
    for (int v = 0; v < n; ++v) cells.push_back({v});
    return Partition(n, std::move(cells));
}

namespace {

void require_same_order(const Graph& g, const Partition& p)
{
    if (g.order() != p.order())
        throw PartitionError("partition covers " + std::to_string(p.order()) + " vertices, graph has " +
                             std::to_string(g.order()));
}

// counts[v][j] = neighbors of v in cell j
std::vector<std::vector<int>> cell_counts(const Graph& g, const Partition& p)
{
    std::vector<std::vector<int>> counts(g.order(), std::vector<int>(p.size(), 0));
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbors(v)) ++counts[v][p.cell_of(w)];
    return counts;
}

}  // namespace

Regularity is_regular(const Graph& g, const Partition& p)
{
    require_same_order(g, p);
    auto counts = cell_counts(g, p);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const int u = p.cell(i).front();
        for (int w : p.cell(i))
            for (std::size_t j = 0; j < p.size(); ++j)
                if (counts[w][j] != counts[u][j])
                    return {false, RegularityWitness{u, w, static_cast<int>(j), counts[u][j], counts[w][j]}};
    }
    return {};
}

QuotientMatrix::QuotientMatrix(std::vector<std::vector<Rational>> entries, std::vector<long long> cell_sizes)
    : q_(std::move(entries)), sizes_(std::move(cell_sizes))
{
    if (q_.size() != sizes_.size()) throw PartitionError("quotient: size mismatch");
    for (const auto& row : q_)
        if (row.size() != q_.size()) throw PartitionError("quotient: matrix is not square");
}

bool QuotientMatrix::is_integral() const
{
    for (const auto& row : q_)
        for (const auto& x : row)
            if (x.denominator() != 1) return false;
    return true;
}

Matrix QuotientMatrix::to_real() const
{
    Matrix a(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) a(i, j) = boost::rational_cast<double>(q_[i][j]);
    return a;
}

Spectrum QuotientMatrix::spectrum() const
{
    // M = D Q is symmetric; D^{-1/2} M D^{-1/2} = D^{1/2} Q D^{-1/2}.
    Matrix a(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) {
            const Rational m = q_[i][j] * sizes_[i];
            a(i, j) = boost::rational_cast<double>(m) /
                      std::sqrt(static_cast<double>(sizes_[i]) * static_cast<double>(sizes_[j]));
        }
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j) a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));
    return eig_sym(a).spectrum;
}

nlohmann::json QuotientMatrix::to_json() const
{
    auto rows = nlohmann::json::array();
    for (const auto& row : q_) {
        auto out = nlohmann::json::array();
        for (const auto& x : row) {
            if (x.denominator() == 1)
                out.push_back(x.numerator());
            else
                out.push_back(std::to_string(x.numerator()) + "/" + std::to_string(x.denominator()));
        }
        rows.push_back(std::move(out));
    }
    return rows;
}

QuotientMatrix quotient_laplacian(const Graph& g, const Partition& p)
{
    auto reg = is_regular(g, p);
    if (!reg) {
        const auto& w = *reg.witness;
        throw PartitionError("partition is not regular: vertices " + std::to_string(w.u) + " and " +
                             std::to_string(w.u_prime) + " have " + std::to_string(w.count_u) + " vs " +
                             std::to_string(w.count_u_prime) + " neighbors in cell " + std::to_string(w.cell));
    }
    const std::size_t r = p.size();
    // S^T L S accumulated from the graph, then scaled by (S^T S)^{-1}.
    std::vector<std::vector<long long>> m(r, std::vector<long long>(r, 0));
    for (int v = 0; v < g.order(); ++v) {
        const auto i = static_cast<std::size_t>(p.cell_of(v));
        m[i][i] += g.degree(v);
        for (int w : g.neighbors(v)) m[i][p.cell_of(w)] -= 1;
    }
    std::vector<long long> sizes(r);
    std::vector<std::vector<Rational>> q(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i) {
        sizes[i] = static_cast<long long>(p.cell(i).size());
        for (std::size_t j = 0; j < r; ++j) q[i][j] = Rational(m[i][j], sizes[i]);
    }
    return QuotientMatrix(std::move(q), std::move(sizes));
}

bool satisfies_ls_eq_sq(const Graph& g, const Partition& p, const QuotientMatrix& q)
{
    require_same_order(g, p);
    if (q.dim() != p.size()) return false;
    // (LS)_{vj} = deg(v)[v in C_j] - |N(v) cap C_j|; (SQ)_{vj} = Q_{cell(v), j}.
    auto counts = cell_counts(g, p);
    for (int v = 0; v < g.order(); ++v)
        for (std::size_t j = 0; j < p.size(); ++j) {
            long long ls = -counts[v][j];
            if (static_cast<std::size_t>(p.cell_of(v)) == j) ls += g.degree(v);
            if (q(p.cell_of(v), j) != Rational(ls)) return false;
        }
    return true;
}

Partition f2_cycle_partition(int n, F2Shape shape)
{
    if (n < 4) throw PartitionError("f2_cycle_partition needs n >= 4");
    if (shape == F2Shape::u && n % 2 != 0) throw PartitionError("the U-shaped partition needs even n");
    const int nu = n / 2;
    const std::size_t ncells = shape == F2Shape::path ? nu : 2 * nu - 1;
    std::vector<std::vector<int>> cells(ncells);
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a) {
            const int gap = b - a;
            const int d = std::min(gap, n - gap);
            std::size_t cell;
            if (shape == F2Shape::path || d == nu) {
                cell = d - 1;
            } else {
                const int j = gap == d ? a : b;  // the pair is {j, j+d mod n}
                cell = j % 2 == 0 ? d - 1 : 2 * nu - 1 - d;
            }
            cells[cell].push_back(static_cast<int>(pair_rank(a, b)));
        }
    return Partition(n * (n - 1) / 2, std::move(cells));
}

}  // namespace tokgraph
