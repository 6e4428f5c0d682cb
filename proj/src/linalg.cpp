#include "tokgraph/linalg.hpp"

#include "tokgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tokgraph {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double max_abs(const Matrix& a)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s = std::max(s, std::abs(a(i, j)));
    return s;
}

// std::hypot is exact but slow; the plain form is fine away from overflow.
double pythag(double a, double b)
{
    const double aa = std::abs(a), bb = std::abs(b);
    if (aa < 1e150 && bb < 1e150) return std::sqrt(a * a + b * b);
    return std::hypot(a, b);
}

std::size_t iteration_cap(std::size_t m) { return 64 * std::max<std::size_t>(m, 1); }

// Implicit-shift QL on the tridiagonal (d, e) where e[i] couples i and i+1 and
// e[n-1] is scratch. When z is given its columns are rotated along, so
// starting from the Householder basis yields eigenvectors of the original.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Matrix* z)
{
    const std::size_t n = d.size();
    if (n == 0) return;
    e.resize(n, 0.0);
    e[n - 1] = 0.0;
    const std::size_t cap = iteration_cap(n);
    std::size_t total = 0;

    for (std::size_t l = 0; l < n; ++l) {
        std::size_t m = l;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= kEps * dd) break;
            }
            if (m == l) break;
            if (++total > cap)
                throw NumericalFailure("QL iteration did not converge within " + std::to_string(cap) + " sweeps");

            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = pythag(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t ii = m; ii-- > l;) {
                const double f = s * e[ii];
                const double b = c * e[ii];
                r = pythag(f, g);
                e[ii + 1] = r;
                if (r == 0.0) {
                    d[ii + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[ii + 1] - p;
                r = (d[ii] - g) * s + 2.0 * c * b;
                p = s * r;
                d[ii + 1] = g + p;
                g = c * r - b;
                if (z) {
                    for (std::size_t k = 0; k < z->rows(); ++k) {
                        const double zf = (*z)(k, ii + 1);
                        (*z)(k, ii + 1) = s * (*z)(k, ii) + c * zf;
                        (*z)(k, ii) = c * (*z)(k, ii) - s * zf;
                    }
                }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }
}

template <class Vec>
std::vector<std::size_t> ascending_order(const Vec& d)
{
    std::vector<std::size_t> idx(d.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return d[a] < d[b]; });
    return idx;
}

}  // namespace

Matrix to_real(const IntSymMatrix& m)
{
    Matrix a(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) a(i, j) = static_cast<double>(m(i, j));
    return a;
}

Matrix TriDiag::to_dense() const
{
    const std::size_t m = diag.size();
    Matrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) a(i, i) = diag[i];
    for (std::size_t i = 0; i + 1 < m; ++i) {
        a(i + 1, i) = sub[i];
        a(i, i + 1) = super[i];
    }
    return a;
}

SymEigen eig_sym(const Matrix& input, bool want_vectors)
{
    const std::size_t n = input.rows();
    if (input.cols() != n) throw MatrixError("eig_sym: matrix is not square");
    const double scale = max_abs(input);
    const double sym_tol = 1e-12 * std::max(1.0, scale);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(input(i, j) - input(j, i)) > sym_tol)
                throw MatrixError("eig_sym: matrix is not symmetric at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");

    Matrix a = input;
    Matrix q;
    if (want_vectors) {
        q = Matrix(n, n);
        for (std::size_t i = 0; i < n; ++i) q(i, i) = 1.0;
    }

    // Householder reduction: A <- H A H with H = I - beta v v^T zeroing
    // column k below the subdiagonal.
    std::vector<double> v(n), p(n), w(n), qv(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double tail = 0.0;
        for (std::size_t i = k + 2; i < n; ++i) tail += a(i, k) * a(i, k);
        if (tail == 0.0) continue;
        const double x0 = a(k + 1, k);
        const double norm = std::sqrt(tail + x0 * x0);
        const double alpha = x0 >= 0.0 ? -norm : norm;

        std::fill(v.begin(), v.end(), 0.0);
        v[k + 1] = x0 - alpha;
        for (std::size_t i = k + 2; i < n; ++i) v[i] = a(i, k);
        const double vv = tail + v[k + 1] * v[k + 1];
        const double beta = 2.0 / vv;

        double vp = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
            p[i] = beta * s;
            vp += v[i] * p[i];
        }
        const double half = 0.5 * beta * vp;
        for (std::size_t i = 0; i < n; ++i) w[i] = p[i] - half * v[i];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) -= v[i] * w[j] + w[i] * v[j];

        if (want_vectors) {
            for (std::size_t i = 0; i < n; ++i) {
                double s = 0.0;
                for (std::size_t j = k + 1; j < n; ++j) s += q(i, j) * v[j];
                qv[i] = beta * s;
            }
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j) q(i, j) -= qv[i] * v[j];
        }
    }

    std::vector<double> d(n), e(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = a(i + 1, i);
    ql_implicit(d, e, want_vectors ? &q : nullptr);

    auto order = ascending_order(d);
    SymEigen out;
    out.spectrum.values.reserve(n);
    for (auto i : order) out.spectrum.values.push_back(d[i]);
    if (want_vectors) {
        out.vectors = Matrix(n, n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = q(r, order[c]);
    }
    return out;
}

HermEigen eig_herm(const HermMatrix& input, bool want_vectors)
{
    const std::size_t n = input.rows();
    if (input.cols() != n) throw MatrixError("eig_herm: matrix is not square");
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(input(i, j)));
    const double herm_tol = 1e-12 * std::max(1.0, scale);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(input(i, i).imag()) > herm_tol) throw MatrixError("eig_herm: diagonal is not real");
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(input(i, j) - std::conj(input(j, i))) > herm_tol)
                throw MatrixError("eig_herm: matrix is not Hermitian at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
    }

    HermMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = input(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
            a(j, i) = std::conj(a(i, j));
        }
    }
    HermMatrix vecs(n, n);
    for (std::size_t i = 0; i < n; ++i) vecs(i, i) = 1.0;

    double fro = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) fro += std::norm(a(i, j));
    fro = std::sqrt(fro);
    const double target = 4.0 * kEps * std::max(fro, std::numeric_limits<double>::min());

    const std::size_t cap = iteration_cap(n);
    std::size_t sweep = 0;
    for (;; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) <= target) break;
        if (sweep >= cap)
            throw NumericalFailure("Jacobi iteration did not converge within " + std::to_string(cap) + " sweeps");

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = std::abs(a(p, q));
                if (g == 0.0) continue;
                const double app = a(p, p).real(), aqq = a(q, q).real();
                if (g <= kEps * 1e-3 * (std::abs(app) + std::abs(aqq))) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                // U = diag(1, e^{-i phi}) * [[c, s], [-s, c]] zeroes (p,q).
                const cplx phase = std::conj(a(p, q)) / g;
                const double theta = (aqq - app) / (2.0 * g);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx u00 = c, u01 = s, u10 = -s * phase, u11 = c * phase;

                for (std::size_t i = 0; i < n; ++i) {
                    const cplx xp = a(i, p), xq = a(i, q);
                    a(i, p) = u00 * xp + u10 * xq;
                    a(i, q) = u01 * xp + u11 * xq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx xp = a(p, j), xq = a(q, j);
                    a(p, j) = std::conj(u00) * xp + std::conj(u10) * xq;
                    a(q, j) = std::conj(u01) * xp + std::conj(u11) * xq;
                }
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                if (want_vectors) {
                    for (std::size_t i = 0; i < n; ++i) {
                        const cplx xp = vecs(i, p), xq = vecs(i, q);
                        vecs(i, p) = u00 * xp + u10 * xq;
                        vecs(i, q) = u01 * xp + u11 * xq;
                    }
                }
            }
        }
    }

    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
    auto order = ascending_order(d);
    HermEigen out;
    for (auto i : order) out.spectrum.values.push_back(d[i]);
    if (want_vectors) {
        out.vectors = HermMatrix(n, n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = vecs(r, order[c]);
    }
    return out;
}

Spectrum eig_tridiag_sym(const TriDiag& t)
{
    const std::size_t m = t.diag.size();
    if (m > 0 && (t.sub.size() != m - 1 || t.super.size() != m - 1))
        throw MatrixError("eig_tridiag_sym: inconsistent band lengths");
    double scale = 0.0;
    for (double x : t.diag) scale = std::max(scale, std::abs(x));
    for (double x : t.sub) scale = std::max(scale, std::abs(x));
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (std::abs(t.sub[i] - t.super[i]) > 1e-12 * std::max(1.0, scale))
            throw MatrixError("eig_tridiag_sym: matrix is not symmetric at row " + std::to_string(i + 1));

    std::vector<double> d = t.diag;
    std::vector<double> e(m, 0.0);
    for (std::size_t i = 0; i + 1 < m; ++i) e[i] = t.sub[i];
    ql_implicit(d, e, nullptr);
    std::sort(d.begin(), d.end());
    return make_spectrum(std::move(d));
}

TriDiag symmetrize_tridiag(const TriDiag& t)
{
    const std::size_t m = t.diag.size();
    if (m > 0 && (t.sub.size() != m - 1 || t.super.size() != m - 1))
        throw MatrixError("symmetrize_tridiag: inconsistent band lengths");
    TriDiag out{t.diag, std::vector<double>(t.sub.size()), {}};
    for (std::size_t i = 0; i < t.sub.size(); ++i) {
        const double prod = t.sub[i] * t.super[i];
        if (prod < 0.0)
            throw MatrixError("symmetrize_tridiag: negative off-diagonal product at row " + std::to_string(i + 1));
        out.sub[i] = std::sqrt(prod);
    }
    out.super = out.sub;
    return out;
}

GershgorinEndpoints gershgorin_left(const TriDiag& t)
{
    const std::size_t m = t.diag.size();
    if (m == 0) throw MatrixError("gershgorin_left: empty matrix");
    GershgorinEndpoints g;
    g.rows.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(t.sub[i - 1]);
        if (i + 1 < m) radius += std::abs(t.super[i]);
        g.rows[i] = t.diag[i] - radius;
    }
    g.first = g.rows.front();
    g.last = g.rows.back();
    if (m > 2) g.inner = *std::min_element(g.rows.begin() + 1, g.rows.end() - 1);
    return g;
}

double rayleigh_quotient(const Matrix& l, const std::vector<double>& v)
{
    if (l.rows() != l.cols() || l.cols() != v.size()) throw MatrixError("rayleigh_quotient: dimension mismatch");
    double vv = 0.0;
    for (double x : v) vv += x * x;
    if (vv == 0.0) throw MatrixError("rayleigh_quotient: zero vector");
    auto lv = matvec(l, v);
    double num = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) num += v[i] * lv[i];
    return num / vv;
}

Spectrum make_spectrum(std::vector<double> values, double tol)
{
    std::sort(values.begin(), values.end());
    return Spectrum{std::move(values), tol};
}

Spectrum spectrum_union(const Spectrum& a, const Spectrum& b)
{
    std::vector<double> v;
    v.reserve(a.size() + b.size());
    std::merge(a.values.begin(), a.values.end(), b.values.begin(), b.values.end(), std::back_inserter(v));
    return Spectrum{std::move(v), std::max(a.tol, b.tol)};
}

namespace {

// Walks both sorted lists once. Returns the unmatched part of `a`; sets
// `missing` to the first element of `b` without a partner.
std::vector<double> match_sorted(const std::vector<double>& a, const std::vector<double>& b, double tol,
                                 std::optional<double>& missing)
{
    std::vector<double> rest;
    std::size_t i = 0, j = 0;
    while (j < b.size()) {
        if (i == a.size()) {
            missing = b[j];
            return rest;
        }
        if (std::abs(a[i] - b[j]) <= tol) {
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            rest.push_back(a[i++]);
        } else {
            missing = b[j];
            return rest;
        }
    }
    rest.insert(rest.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    return rest;
}

}  // namespace

Spectrum spectrum_subtract(const Spectrum& a, const Spectrum& b, double tol)
{
    std::optional<double> missing;
    auto rest = match_sorted(a.values, b.values, tol, missing);
    if (missing)
        throw SpectrumMismatch("spectrum_subtract: no match for " + std::to_string(*missing), *missing);
    return Spectrum{std::move(rest), a.tol};
}

bool spectrum_contains(const Spectrum& a, const Spectrum& b, double tol)
{
    std::optional<double> missing;
    match_sorted(a.values, b.values, tol, missing);
    return !missing;
}

bool spectrum_equal(const Spectrum& a, const Spectrum& b, double tol)
{
    return a.size() == b.size() && spectrum_contains(a, b, tol);
}

double spectrum_max_deviation(const Spectrum& a, const Spectrum& b)
{
    if (a.size() != b.size()) throw MatrixError("spectrum_max_deviation: size mismatch");
    double dev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
    return dev;
}

std::vector<std::pair<double, int>> cluster(const Spectrum& s, double tol)
{
    std::vector<std::pair<double, int>> out;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i + 1;
        double sum = s[i];
        while (j < s.size() && s[j] - s[j - 1] <= tol) sum += s[j++];
        out.emplace_back(sum / static_cast<double>(j - i), static_cast<int>(j - i));
        i = j;
    }
    return out;
}

nlohmann::json to_json(const Spectrum& s)
{
    return {{"n", s.size()}, {"tol", s.tol}, {"values", s.values}};
}

Spectrum spectrum_from_json(const nlohmann::json& j)
{
    Spectrum s{j.at("values").get<std::vector<double>>(), j.value("tol", 1e-8)};
    if (j.contains("n") && j.at("n").get<std::size_t>() != s.size())
        throw MatrixError("spectrum JSON: n does not match the value count");
    if (!std::is_sorted(s.values.begin(), s.values.end()))
        throw MatrixError("spectrum JSON: values are not ascending");
    return s;
}

double norm2(const std::vector<double>& v)
{
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double norm2(const std::vector<cplx>& v)
{
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x)
{
    if (a.cols() != x.size()) throw MatrixError("matvec: dimension mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

std::vector<cplx> matvec(const HermMatrix& a, const std::vector<cplx>& x)
{
    if (a.cols() != x.size()) throw MatrixError("matvec: dimension mismatch");
    std::vector<cplx> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

Matrix matmul(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows()) throw MatrixError("matmul: dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

double inf_norm(const Matrix& a)
{
    double best = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

double inf_norm(const HermMatrix& a)
{
    double best = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

}  // namespace tokgraph
