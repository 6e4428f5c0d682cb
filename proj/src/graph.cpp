#include "tokgraph/graph.hpp"

#include "tokgraph/combinatorics.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

namespace tokgraph {

Graph::Graph(int n)
{
    if (n < 0) throw GraphError("graph order must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n)
{
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge endpoint out of range: " + std::to_string(u) + " " +
                             std::to_string(v));
        if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw GraphError("duplicate edge");
        edge_count_ += a.size();
    }
    edge_count_ /= 2;
}

bool Graph::adjacent(int u, int v) const
{
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void IntSymMatrix::set(int i, int j, std::int64_t v)
{
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
}

void IntSymMatrix::add(int i, int j, std::int64_t v)
{
    a_[idx(i, j)] += v;
    if (i != j) a_[idx(j, i)] += v;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view spec)
{
    std::vector<int> out;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto item = text.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty())
            throw GraphError("malformed graph spec: " + std::string(spec));
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
        if (text.empty()) throw GraphError("malformed graph spec: " + std::string(spec));
    }
    return out;
}

void require(bool ok, std::string_view spec, const char* what)
{
    if (!ok) throw GraphError("invalid family " + std::string(spec) + ": " + what);
}

Graph cycle(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph path(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph complete_multipartite(const std::vector<int>& parts)
{
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
    const int n = static_cast<int>(part_of.size());
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph odd_graph(int r)
{
    const int ground = 2 * r - 1;
    const auto count = binomial(ground, r - 1);
    if (count > 1'000'000) throw GraphError("odd graph too large");
    const int n = static_cast<int>(count);
    std::vector<std::uint32_t> masks(n);
    for (int v = 0; v < n; ++v)
        for (int x : subset_unrank(static_cast<std::uint64_t>(v), ground, r - 1)) masks[v] |= 1u << x;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((masks[i] & masks[j]) == 0) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph hypercube(int d)
{
    const int n = 1 << d;
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b) {
            int w = v ^ (1 << b);
            if (v < w) e.emplace_back(v, w);
        }
    return Graph(n, e);
}

}  // namespace

Graph build_family(std::string_view spec)
{
    auto colon = spec.find(':');
    auto name = spec.substr(0, colon);
    if (name == "petersen") {
        require(colon == std::string_view::npos, spec, "takes no parameters");
        return odd_graph(3);
    }
    if (colon == std::string_view::npos) throw GraphError("malformed graph spec: " + std::string(spec));
    auto args = parse_int_list(spec.substr(colon + 1), spec);
    auto single = [&]() {
        require(args.size() == 1, spec, "expects one parameter");
        return args[0];
    };

    if (name == "cycle") {
        int n = single();
        require(n >= 3, spec, "n >= 3");
        return cycle(n);
    }
    if (name == "path") {
        int n = single();
        require(n >= 1, spec, "n >= 1");
        return path(n);
    }
    if (name == "complete") {
        int n = single();
        require(n >= 1, spec, "n >= 1");
        return complete_multipartite(std::vector<int>(n, 1));
    }
    if (name == "star") {
        int n = single();
        require(n >= 1, spec, "n >= 1");
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i < n; ++i) e.emplace_back(0, i);
        return Graph(n, e);
    }
    if (name == "complete_multipartite") {
        require(!args.empty(), spec, "needs at least one part");
        for (int p : args) require(p >= 1, spec, "part sizes >= 1");
        return complete_multipartite(args);
    }
    if (name == "odd") {
        int r = single();
        require(r >= 2 && r <= 16, spec, "2 <= r <= 16");
        return odd_graph(r);
    }
    if (name == "hypercube") {
        int d = single();
        require(d >= 1 && d <= 20, spec, "1 <= d <= 20");
        return hypercube(d);
    }
    throw GraphError("unknown graph family: " + std::string(name));
}

IntSymMatrix laplacian(const Graph& g)
{
    IntSymMatrix l(g.order());
    for (int u = 0; u < g.order(); ++u) {
        l.set(u, u, g.degree(u));
        for (int v : g.neighbors(u)) l.set(u, v, -1);
    }
    return l;
}

Graph delete_vertex(const Graph& g, int i)
{
    if (i < 0 || i >= g.order()) throw GraphError("vertex index out of range: " + std::to_string(i));
    auto shift = [i](int v) { return v < i ? v : v - 1; };
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges())
        if (u != i && v != i) e.emplace_back(shift(u), shift(v));
    return Graph(g.order() - 1, e);
}

std::optional<std::vector<int>> bipartite_classes(const Graph& g)
{
    std::vector<int> color(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_connected(const Graph& g)
{
    const int n = g.order();
    if (n <= 1) return true;
    std::vector<int> rank(n), parent(n);
    boost::disjoint_sets<int*, int*> sets(rank.data(), parent.data());
    for (int v = 0; v < n; ++v) sets.make_set(v);
    int components = n;
    for (auto [u, v] : g.edges()) {
        if (sets.find_set(u) != sets.find_set(v)) {
            sets.union_set(u, v);
            --components;
        }
    }
    return components == 1;
}

Graph read_edge_list(std::istream& in)
{
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.find_first_not_of(" \t") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw GraphError("edge list: missing header");
    long long n = -1, m = -1;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0)
            throw GraphError("edge list: malformed header '" + line + "'");
    }
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    for (long long k = 0; k < m; ++k) {
        if (!next_line()) throw GraphError("edge list: expected " + std::to_string(m) + " edges");
        std::istringstream ls(line);
        long long i = -1, j = -1;
        std::string extra;
        if (!(ls >> i >> j) || (ls >> extra)) throw GraphError("edge list: malformed line '" + line + "'");
        if (i < 0 || j < 0 || i >= n || j >= n) throw GraphError("edge list: vertex out of range in '" + line + "'");
        if (i == j) throw GraphError("edge list: loop at vertex " + std::to_string(i));
        const int a = static_cast<int>(i), b = static_cast<int>(j);
        const std::pair<int, int> e = std::minmax(a, b);
        if (!seen.insert(e).second) throw GraphError("edge list: duplicate edge '" + line + "'");
        edges.emplace_back(e);
    }
    if (next_line()) throw GraphError("edge list: trailing content after " + std::to_string(m) + " edges");
    return Graph(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace tokgraph
