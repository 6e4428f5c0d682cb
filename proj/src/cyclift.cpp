#include "tokgraph/cyclift.hpp"

#include "tokgraph/combinatorics.hpp"
#include "tokgraph/token.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace tokgraph {

namespace {

long long mod(long long a, long long m)
{
    a %= m;
    return a < 0 ? a + m : a;
}

cplx root_power(long long e, long long m)
{
    const double t = 2.0 * std::numbers::pi * static_cast<double>(mod(e, m)) / static_cast<double>(m);
    return {std::cos(t), std::sin(t)};
}

}  // namespace

double cos_pi_frac(long long num, long long den)
{
    if (den <= 0) throw std::domain_error("cos_pi_frac: denominator must be positive");
    const long long a = mod(num, 2 * den);
    if (a == 0) return 1.0;
    if (a == den) return -1.0;
    if (2 * a == den || 2 * a == 3 * den) return 0.0;
    return std::cos(std::numbers::pi * static_cast<double>(a) / static_cast<double>(den));
}

// ---------------------------------------------------------------------------
// Voltage graphs

VoltageGraph::VoltageGraph(int vertices, int modulus) : n_(vertices), m_(modulus)
{
    if (vertices < 1) throw VoltageError("voltage graph needs at least one vertex");
    if (modulus < 1) throw VoltageError("group modulus must be positive");
}

void VoltageGraph::check_vertex(int u) const
{
    if (u < 0 || u >= n_) throw VoltageError("base vertex out of range: " + std::to_string(u));
}

int VoltageGraph::degree(int u) const
{
    check_vertex(u);
    return static_cast<int>(std::count_if(arcs_.begin(), arcs_.end(), [u](const Arc& a) { return a.tail == u; }));
}

int VoltageGraph::add_arc(int u, int v, long long volt)
{
    check_vertex(u);
    check_vertex(v);
    arcs_.push_back(Arc{u, v, volt, -1});
    return static_cast<int>(arcs_.size()) - 1;
}

void VoltageGraph::pair_arcs(int a, int b)
{
    if (a < 0 || b < 0 || a >= static_cast<int>(arcs_.size()) || b >= static_cast<int>(arcs_.size()) || a == b)
        throw VoltageError("pair_arcs: bad arc indices");
    arcs_[a].reverse = b;
    arcs_[b].reverse = a;
}

int VoltageGraph::add_edge(int u, int v, long long volt)
{
    const int a = add_arc(u, v, volt);
    pair_arcs(a, add_arc(v, u, -volt));
    return a;
}

int VoltageGraph::add_loop(int u, long long volt) { return add_edge(u, u, volt); }

void VoltageGraph::validate() const
{
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
        const auto& arc = arcs_[a];
        if (arc.reverse < 0) throw VoltageError("arc " + std::to_string(a) + " is unpaired");
        const auto& rev = arcs_[arc.reverse];
        if (rev.reverse != static_cast<int>(a) || rev.tail != arc.head || rev.head != arc.tail)
            throw VoltageError("arc " + std::to_string(a) + " has an inconsistent reverse");
        if (mod(arc.volt + rev.volt, m_) != 0)
            throw VoltageError("arc " + std::to_string(a) + ": reverse voltage is not the inverse");
    }
}

// ---------------------------------------------------------------------------
// Laurent matrices

void LaurentMatrix::add(int i, int j, long long exponent, long long coef)
{
    auto& p = p_.at(idx(i, j));
    if ((p[exponent] += coef) == 0) p.erase(exponent);
}

HermMatrix LaurentMatrix::evaluate(cplx z) const
{
    HermMatrix a(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (auto [e, c] : (*this)(i, j)) a(i, j) += static_cast<double>(c) * std::pow(z, static_cast<double>(e));
    return a;
}

HermMatrix LaurentMatrix::evaluate_root(long long r, int m) const
{
    HermMatrix a(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (auto [e, c] : (*this)(i, j)) a(i, j) += static_cast<double>(c) * root_power(r * e, m);
    return a;
}

std::string LaurentMatrix::to_string(int i, int j) const
{
    const auto& p = (*this)(i, j);
    if (p.empty()) return "0";
    std::vector<std::pair<long long, long long>> terms(p.begin(), p.end());
    // constant, then z, z^2, ..., then z^-1, z^-2, ...
    std::stable_sort(terms.begin(), terms.end(), [](auto a, auto b) {
        auto key = [](long long e) { return e >= 0 ? std::pair{0, e} : std::pair{1, -e}; };
        return key(a.first) < key(b.first);
    });
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : terms) {
        const long long mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag;
        os << 'z';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

std::string LaurentMatrix::to_string() const
{
    std::ostringstream os;
    for (int i = 0; i < dim_; ++i) {
        os << '[';
        for (int j = 0; j < dim_; ++j) os << (j ? ", " : "") << to_string(i, j);
        os << "]\n";
    }
    return os.str();
}

LaurentMatrix laplacian_base_matrix(const VoltageGraph& vg)
{
    vg.validate();
    LaurentMatrix b(vg.order());
    for (const auto& a : vg.arcs()) {
        b.add(a.tail, a.tail, 0, 1);
        b.add(a.tail, a.head, a.volt, -1);
    }
    return b;
}

Graph lift_graph(const VoltageGraph& vg)
{
    vg.validate();
    const int m = vg.modulus();
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    const auto& arcs = vg.arcs();
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        if (arcs[a].reverse < static_cast<int>(a)) continue;  // one arc per pair
        for (int g = 0; g < m; ++g) {
            const int x = arcs[a].tail * m + g;
            const int y = arcs[a].head * m + static_cast<int>(mod(g + arcs[a].volt, m));
            if (x == y) throw VoltageError("lift has a loop at vertex " + std::to_string(x));
            const std::pair<int, int> e = std::minmax(x, y);
            if (!seen.insert(e).second)
                throw VoltageError("lift has a multi-edge between " + std::to_string(e.first) + " and " +
                                   std::to_string(e.second));
            edges.emplace_back(e);
        }
    }
    return Graph(vg.order() * m, edges);
}

Spectrum lift_spectrum(const VoltageGraph& vg)
{
    auto b = laplacian_base_matrix(vg);
    Spectrum out;
    for (int r = 0; r < vg.modulus(); ++r) out = spectrum_union(out, eig_herm(b.evaluate_root(r, vg.modulus())).spectrum);
    return out;
}

// ---------------------------------------------------------------------------
// Token-graph bases

VoltageGraph odd_cycle_base(int n)
{
    if (n < 5 || n % 2 == 0) throw VoltageError("odd_cycle_base needs odd n >= 5");
    const int nu = (n - 1) / 2;
    VoltageGraph vg(nu, n);
    for (int h = 0; h + 1 < nu; ++h) {
        vg.add_edge(h, h + 1, 0);
        vg.add_edge(h, h + 1, -1);
    }
    vg.add_loop(nu - 1, nu);
    return vg;
}

VoltageGraph even_4r2_base(int n)
{
    if (n < 6 || n % 4 != 2) throw VoltageError("even_4r2_base needs n = 4r+2 >= 6");
    const int r = (n - 2) / 4;
    auto at = [r](int t) { return t + 2 * r; };
    VoltageGraph vg(4 * r + 1, 2 * r + 1);
    for (int t = -2 * r; t < 2 * r; ++t) vg.add_edge(at(t), at(t + 1), 0);
    for (int i = 1; i <= 2 * r; ++i) {
        vg.add_edge(at(-i), at(i - 1), r);
        vg.add_edge(at(i), at(-i + 1), r);
    }
    return vg;
}

std::vector<int> odd_cycle_vertex_map(int n)
{
    if (n < 5 || n % 2 == 0) throw VoltageError("odd_cycle_vertex_map needs odd n >= 5");
    const int nu = (n - 1) / 2;
    std::vector<int> map(static_cast<std::size_t>(nu) * n);
    for (int h = 1; h <= nu; ++h)
        for (int j = 0; j < n; ++j) map[(h - 1) * n + j] = static_cast<int>(pair_rank((j + h) % n, j));
    return map;
}

std::vector<int> even_4r2_vertex_map(int n)
{
    if (n < 6 || n % 4 != 2) throw VoltageError("even_4r2_vertex_map needs n = 4r+2 >= 6");
    const int r = (n - 2) / 4, m = 2 * r + 1;
    std::vector<int> map(static_cast<std::size_t>(4 * r + 1) * m);
    for (int t = -2 * r; t <= 2 * r; ++t) {
        const auto [a, b] = t <= 0 ? std::pair{0, t + 2 * r + 1} : std::pair{2 * r + 1, 4 * r + 2 - t};
        for (int g = 0; g < m; ++g)
            map[(t + 2 * r) * m + g] = static_cast<int>(pair_rank((a + 2 * g) % n, (b + 2 * g) % n));
    }
    return map;
}

// ---------------------------------------------------------------------------
// The reduced tridiagonal problems

TriDiag bstar(int n, int r)
{
    if (n < 4) throw std::domain_error("bstar needs n >= 4");
    if (r < 0 || r >= n) throw std::out_of_range("bstar: r must lie in 0..n-1");
    const int nu = n / 2;
    const double c = cos_pi_frac(r, n);
    TriDiag t;
    t.diag.assign(nu, 4.0);
    t.diag[0] = 2.0;
    t.sub.assign(nu - 1, 2.0 * c);
    t.super = t.sub;
    if (n % 2 == 1) {
        t.diag[nu - 1] = 4.0 + (r % 2 == 1 ? 2.0 : -2.0) * c;
    } else {
        // cos(r(n-1)pi/n) = (-1)^r cos(r pi/n), so the corner is 4c or exactly 0.
        t.sub[nu - 2] = r % 2 == 0 ? 4.0 * c : 0.0;
    }
    return t;
}

Spectrum bstar_spectrum(int n, int r)
{
    auto t = bstar(n, r);
    if (n % 2 == 1) return eig_tridiag_sym(t);
    if (r % 2 == 1) {
        // Last row is (0, ..., 0, 4): split off 4, keep the leading block.
        const std::size_t k = t.dim() - 1;
        TriDiag lead{std::vector<double>(t.diag.begin(), t.diag.begin() + k),
                     std::vector<double>(t.sub.begin(), t.sub.begin() + (k - 1)),
                     std::vector<double>(t.super.begin(), t.super.begin() + (k - 1))};
        auto s = eig_tridiag_sym(lead);
        return spectrum_union(s, make_spectrum({4.0}));
    }
    return eig_tridiag_sym(symmetrize_tridiag(t));
}

nlohmann::json F2CycleSpectrum::to_json() const
{
    nlohmann::json j{{"n", n}, {"method", method}, {"per_r", nlohmann::json::array()}};
    for (std::size_t r = 0; r < per_r.size(); ++r) j["per_r"].push_back({{"r", r}, {"eigs", per_r[r].values}});
    j["spectrum"] = spectrum.values;
    j["lambda_removed"] = lambda_removed;
    return j;
}

namespace {

// Removes the `count` values nearest to 4; all of them must lie within 1e-6.
std::vector<double> remove_fours(Spectrum& s, int count)
{
    std::vector<std::size_t> idx(s.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](auto a, auto b) { return std::abs(s[a] - 4.0) < std::abs(s[b] - 4.0); });
    if (static_cast<int>(idx.size()) < count || std::abs(s[idx[count - 1]] - 4.0) > 1e-6) {
        const double worst = static_cast<int>(idx.size()) < count ? 4.0 : s[idx[count - 1]];
        throw SpectrumMismatch("over-lift union has fewer than " + std::to_string(count) +
                                   " eigenvalues within 1e-6 of 4",
                               worst);
    }
    std::vector<char> drop(s.size(), 0);
    std::vector<double> removed;
    for (int i = 0; i < count; ++i) {
        drop[idx[i]] = 1;
        removed.push_back(s[idx[i]]);
    }
    std::sort(removed.begin(), removed.end());
    std::vector<double> keep;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!drop[i]) keep.push_back(s[i]);
    s.values = std::move(keep);
    return removed;
}

}  // namespace

F2CycleSpectrum f2_cycle_spectrum(int n)
{
    if (n < 4) throw std::domain_error("f2_cycle_spectrum needs n >= 4");
    F2CycleSpectrum out;
    out.n = n;
    out.method = "overlift";
    std::vector<double> all;
    for (int r = 0; r < n; ++r) {
        out.per_r.push_back(bstar_spectrum(n, r));
        all.insert(all.end(), out.per_r.back().values.begin(), out.per_r.back().values.end());
    }
    out.spectrum = make_spectrum(std::move(all));
    if (n % 2 == 0) out.lambda_removed = remove_fours(out.spectrum, n / 2);
    return out;
}

F2CycleSpectrum f2_cycle_lift_spectrum(int n)
{
    VoltageGraph vg = n % 2 == 1 ? odd_cycle_base(n)
                      : n % 4 == 2 ? even_4r2_base(n)
                                   : throw VoltageError("no voltage lift base for n divisible by 4; use the over-lift");
    F2CycleSpectrum out;
    out.n = n;
    out.method = "lift";
    auto b = laplacian_base_matrix(vg);
    for (int r = 0; r < vg.modulus(); ++r) {
        out.per_r.push_back(eig_herm(b.evaluate_root(r, vg.modulus())).spectrum);
        out.spectrum = spectrum_union(out.spectrum, out.per_r.back());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Eigenvectors

LiftedEigenvector reconstruct_eigenvector(int n, int r, const std::vector<cplx>& f)
{
    auto vg = odd_cycle_base(n);
    const int nu = vg.order();
    if (static_cast<int>(f.size()) != nu) throw MatrixError("reconstruct_eigenvector: f must have length (n-1)/2");
    const double fn = norm2(f);
    if (fn == 0.0) throw MatrixError("reconstruct_eigenvector: zero vector");
    auto b = laplacian_base_matrix(vg).evaluate_root(r, n);
    auto bf = matvec(b, f);
    cplx num = 0.0;
    for (int i = 0; i < nu; ++i) num += std::conj(f[i]) * bf[i];
    const double lambda = num.real() / (fn * fn);
    std::vector<cplx> res(nu);
    for (int i = 0; i < nu; ++i) res[i] = bf[i] - lambda * f[i];
    if (norm2(res) > 1e-8 * fn * (1.0 + inf_norm(b)))
        throw MatrixError("reconstruct_eigenvector: f is not an eigenvector of B(zeta^r)");

    std::vector<cplx> y(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int h = 1; h <= nu; ++h)
        for (int j = 0; j < n; ++j) y[pair_rank((j + h) % n, j)] = f[h - 1] * root_power(static_cast<long long>(r) * j, n);
    return {lambda, std::move(y)};
}

std::vector<std::vector<double>> real_eigenvectors(const std::vector<cplx>& y, double tol)
{
    std::vector<std::vector<double>> out;
    std::vector<double> re(y.size()), im(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        re[i] = y[i].real();
        im[i] = y[i].imag();
    }
    const double scale = std::max(norm2(y), 1e-300);
    for (auto* v : {&re, &im}) {
        const double nv = norm2(*v);
        if (nv <= tol * scale) continue;
        for (double& x : *v) x /= nv;
        out.push_back(std::move(*v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closed forms, asymptotics and checks

std::vector<double> closed_form_quotient_eigs(int n)
{
    if (n < 4) throw std::domain_error("closed_form_quotient_eigs needs n >= 4");
    const int nu = n / 2;
    std::vector<double> out;
    if (n % 2 == 0) {
        for (int r = 0; r < nu; ++r) {
            const double s = std::sin(r * std::numbers::pi / (n - 1));
            out.push_back(8.0 * s * s);
        }
    } else {
        for (int r = 1; r <= nu; ++r) {
            const double c = cos_pi_frac(r, n - 1);
            out.push_back(8.0 * c * c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> asymptotic_eigs(int n, int r)
{
    if (n < 4) throw std::domain_error("asymptotic_eigs needs n >= 4");
    if (r < 0 || r >= n) throw std::domain_error("asymptotic_eigs: r must lie in 0..n-1");
    const int nu = n / 2;
    const double c = cos_pi_frac(r, n);
    std::vector<double> out;
    if (n % 2 == 1) {
        for (int k = 1; k <= nu; ++k) {
            const long long num = r % 2 == 1 ? 2 * k - 1 : 2 * (k - 1);
            out.push_back(4.0 + 4.0 * c * cos_pi_frac(num, n - 1));
        }
    } else {
        if (r % 2 == 0 && !(r == nu && nu % 2 == 0))
            throw std::domain_error("asymptotic_eigs: even n needs odd r or r = n/2 with n/2 even");
        for (int k = 1; k < nu; ++k) out.push_back(4.0 + 4.0 * c * cos_pi_frac(2 * k - 1, n - 1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

AlphaEstimate alpha_estimates(int n)
{
    if (n < 5) throw std::domain_error("alpha_estimates needs n >= 5");
    const long long num = n % 2 == 1 ? n - 2 : n - 3;
    AlphaEstimate a{};
    a.estimate = 4.0 + 4.0 * cos_pi_frac(1, n) * cos_pi_frac(num, n - 1);
    a.exact = f2_cycle_spectrum(n).spectrum[1];
    a.limit = 2.0 - 2.0 * cos_pi_frac(2, n);
    return a;
}

GershgorinCheck gershgorin_bound_check(int n, int r)
{
    if (n < 5 || n % 2 == 0) throw std::domain_error("gershgorin_bound_check needs odd n >= 5");
    if (r < 0 || r >= n) throw std::domain_error("gershgorin_bound_check: r must lie in 0..n-1");
    const int folded = std::min(r, n - r);
    const double s = std::sin(folded * std::numbers::pi / (2.0 * n));
    GershgorinCheck g{};
    g.min_eig = bstar_spectrum(n, r)[0];
    g.bound = 4.0 * s * s;
    g.pass = g.min_eig >= g.bound - 1e-9;
    return g;
}

bool TraceReport::all_pass() const
{
    return std::all_of(rows.begin(), rows.end(), [](const TraceRow& t) { return t.pass; });
}

nlohmann::json TraceReport::to_json() const
{
    nlohmann::json j{{"n", n}, {"rows", nlohmann::json::array()}};
    for (const auto& t : rows)
        j["rows"].push_back(
            {{"ell", t.ell}, {"lhs", t.lhs}, {"trace_L", t.trace_l}, {"rhs", t.rhs}, {"pass", t.pass}});
    return j;
}

TraceReport trace_identity_check(int n, int lmax)
{
    if (n < 4 || n % 2 == 1) throw std::domain_error("trace_identity_check needs even n >= 4");
    if (lmax < 0 || lmax > 12) throw std::domain_error("trace_identity_check: lmax must lie in 0..12");
    const int nu = n / 2;

    std::vector<Matrix> bs;
    for (int r = 0; r < n; ++r) bs.push_back(bstar(n, r).to_dense());

    // tr(L^l) from exact integer matvecs, one basis vector at a time.
    auto f = token_graph(build_family("cycle:" + std::to_string(n)), 2);
    const int size = f.order();
    std::vector<long long> traces(lmax + 1, 0);
    std::vector<long long> v(size), w(size);
    for (int i = 0; i < size; ++i) {
        std::fill(v.begin(), v.end(), 0);
        v[i] = 1;
        traces[0] += 1;
        for (int l = 1; l <= lmax; ++l) {
            for (int x = 0; x < size; ++x) {
                long long s = static_cast<long long>(f.degree(x)) * v[x];
                for (int y : f.neighbors(x)) s -= v[y];
                w[x] = s;
            }
            std::swap(v, w);
            traces[l] += v[i];
        }
    }

    TraceReport rep{n, {}};
    std::vector<Matrix> powers;
    for (int r = 0; r < n; ++r) {
        Matrix id(nu, nu);
        for (int i = 0; i < nu; ++i) id(i, i) = 1.0;
        powers.push_back(id);
    }
    for (int l = 0; l <= lmax; ++l) {
        if (l > 0)
            for (int r = 0; r < n; ++r) powers[r] = matmul(powers[r], bs[r]);
        double lhs = 0.0;
        for (const auto& p : powers)
            for (int i = 0; i < nu; ++i) lhs += p(i, i);
        TraceRow row{};
        row.ell = l;
        row.lhs = lhs;
        row.trace_l = traces[l];
        row.rhs = static_cast<double>(traces[l]) + nu * std::pow(4.0, l);
        row.pass = std::abs(row.lhs - row.rhs) <= 1e-6 * std::max(1.0, std::abs(row.rhs));
        rep.rows.push_back(row);
    }
    return rep;
}

bool exactly_one_cycle_eigenvalue(int n, int r)
{
    if (n < 5 || n % 2 == 0) throw std::domain_error("exactly_one_cycle_eigenvalue needs odd n >= 5");
    auto theta = [n](int j) {
        const double s = std::sin(j * std::numbers::pi / n);
        return 4.0 * s * s;
    };
    auto spec = bstar_spectrum(n, r);
    int matches = 0;
    double matched = 0.0;
    for (double x : spec.values)
        for (int j = 0; j < n; ++j)
            if (std::abs(x - theta(j)) <= 1e-7) {
                ++matches;
                matched = x;
                break;
            }
    return matches == 1 && std::abs(matched - theta(r)) <= 1e-7;
}

}  // namespace tokgraph
