#pragma once

#include "tokgraph/graph.hpp"
#include "tokgraph/linalg.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace tokgraph {

class VoltageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arc tail -> head carrying an element of Z_m. `reverse` is the index of
/// the paired arc, or -1 while unpaired.
struct Arc {
    int tail, head;
    long long volt;
    int reverse = -1;
};

/// Base digraph with a cyclic voltage assignment. Parallel arcs and loops
/// are allowed; every arc must end up paired with a reverse arc carrying the
/// negated voltage.
class VoltageGraph {
public:
    VoltageGraph(int vertices, int modulus);

    int order() const { return n_; }
    int modulus() const { return m_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    /// Out-arcs at u; a loop contributes both of its arcs.
    int degree(int u) const;

    /// u -> v with `volt` and v -> u with `-volt`. Returns the forward index.
    int add_edge(int u, int v, long long volt);
    /// The loop pair u -> u with +volt and -volt.
    int add_loop(int u, long long volt);
    /// A single unpaired arc; pair it later with pair_arcs.
    int add_arc(int u, int v, long long volt);
    void pair_arcs(int a, int b);

    /// Throws VoltageError on an unpaired arc or an inconsistent pair.
    void validate() const;

private:
    void check_vertex(int u) const;

    int n_, m_;
    std::vector<Arc> arcs_;
};

/// Square matrix of integer Laurent polynomials in z.
class LaurentMatrix {
public:
    using Poly = std::map<long long, long long>;  ///< exponent -> coefficient

    explicit LaurentMatrix(int dim) : dim_(dim), p_(static_cast<std::size_t>(dim) * dim) {}

    int dim() const { return dim_; }
    const Poly& operator()(int i, int j) const { return p_[idx(i, j)]; }
    void add(int i, int j, long long exponent, long long coef);

    HermMatrix evaluate(cplx z) const;
    /// Evaluation at zeta^r with zeta = exp(2 pi i / m); exponents are reduced
    /// mod m before the exponential is taken.
    HermMatrix evaluate_root(long long r, int m) const;

    std::string to_string(int i, int j) const;
    std::string to_string() const;

    friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * dim_ + j; }
    int dim_;
    std::vector<Poly> p_;
};

/// B(z): entry (u,v) is -sum z^volt(a) over arcs u -> v, plus deg(u) on the
/// diagonal.
LaurentMatrix laplacian_base_matrix(const VoltageGraph& vg);

/// Lift vertex (u, g) has index u*m + g; each arc u -> v joins (u, g) and
/// (v, g + volt). Throws VoltageError if the lift has loops or multi-edges.
Graph lift_graph(const VoltageGraph& vg);

/// Union of spec B(zeta^r) over r = 0..m-1.
Spectrum lift_spectrum(const VoltageGraph& vg);

/// Base for F_2(C_n), n = 2v+1: path u_1..u_v over Z_n. Consecutive vertices
/// are joined by two arcs u_h -> u_{h+1} with voltages 0 and -1, and u_v
/// carries a loop with voltages +-v.
VoltageGraph odd_cycle_base(int n);

/// Base for F_2(C_n), n = 4r+2: path u_{-2r}..u_{2r} with zero voltages over
/// Z_{2r+1} plus, for i = 1..2r, arcs u_{-i} -> u_{i-1} and u_i -> u_{-i+1}
/// with voltage r. Base vertex u_t has index t + 2r.
VoltageGraph even_4r2_base(int n);

/// Colex rank of the pair represented by each lift vertex. For the odd base
/// (u_h, j) is {j+h, j}; for the 4r+2 base (u_t, g) is the pair
/// {0, t+2r+1} (t <= 0) or {2r+1, 4r+2-t} (t >= 1) shifted by 2g.
std::vector<int> odd_cycle_vertex_map(int n);
std::vector<int> even_4r2_vertex_map(int n);

/// The real v x v tridiagonal matrix with diagonal (2, 4, ..., 4) and
/// off-diagonals 2cos(r pi/n). For odd n the last diagonal entry is
/// 4 + 2(-1)^(r+1) cos(r pi/n). For even n the last subdiagonal entry is
/// 2cos(r pi/n) + 2cos(r(n-1) pi/n).
TriDiag bstar(int n, int r);

/// Spectrum of bstar(n, r), including the asymmetric even-n rows.
Spectrum bstar_spectrum(int n, int r);

struct F2CycleSpectrum {
    int n = 0;
    std::string method;
    std::vector<Spectrum> per_r;  ///< index r
    Spectrum spectrum;
    std::vector<double> lambda_removed;

    nlohmann::json to_json() const;
};

/// spec L(F_2(C_n)) from the n small problems bstar(n, r). For even n the
/// union holds v surplus eigenvalues 4, which are removed (the v values
/// nearest 4, all required within 1e-6). Throws SpectrumMismatch otherwise.
F2CycleSpectrum f2_cycle_spectrum(int n);

/// Same assembly through a genuine voltage lift: odd n or n = 4r+2.
F2CycleSpectrum f2_cycle_lift_spectrum(int n);

struct LiftedEigenvector {
    double lambda;
    std::vector<cplx> y;  ///< indexed by colex rank of the pair
};

/// For odd n and an eigenvector f of B(zeta^r) from odd_cycle_base, returns
/// y({j+h, j}) = f_h zeta^(r j). Throws MatrixError when f is not an
/// eigenvector to within 1e-8.
LiftedEigenvector reconstruct_eigenvector(int n, int r, const std::vector<cplx>& f);

/// Nonzero real and imaginary parts of y, each normalized. For a real
/// symmetric L both parts are eigenvectors for the same eigenvalue.
std::vector<std::vector<double>> real_eigenvectors(const std::vector<cplx>& y, double tol = 1e-10);

/// Eigenvalues of the distance quotient of F_2(C_n), ascending:
/// 8 sin^2(r pi/(n-1)), r = 0..v-1 for even n; 8 cos^2(r pi/(n-1)), r = 1..v
/// for odd n.
std::vector<double> closed_form_quotient_eigs(int n);

/// Large-n approximations of spec bstar(n, r), ascending. Defined for odd n
/// and for even n with r odd or r = n/2 even; throws std::domain_error
/// otherwise.
std::vector<double> asymptotic_eigs(int n, int r);

struct AlphaEstimate {
    double estimate;  ///< closed-form approximation
    double exact;     ///< alpha(F_2(C_n)) from f2_cycle_spectrum
    double limit;     ///< 2 - 2cos(2 pi/n)
};
AlphaEstimate alpha_estimates(int n);

struct GershgorinCheck {
    double min_eig, bound;
    bool pass;
};
/// min spec bstar(n, r) >= 4 sin^2(r' pi/(2n)) - 1e-9 with r' = min(r, n-r).
GershgorinCheck gershgorin_bound_check(int n, int r);

struct TraceRow {
    int ell;
    double lhs;              ///< sum_r tr(bstar(n, r)^ell)
    long long trace_l;       ///< tr(L^ell), exact
    double rhs;              ///< trace_l + v 4^ell
    bool pass;
};
struct TraceReport {
    int n;
    std::vector<TraceRow> rows;
    bool all_pass() const;
    nlohmann::json to_json() const;
};
/// Checks sum_r tr(bstar(n,r)^l) = tr(L^l) + v 4^l for l = 0..lmax with
/// relative tolerance 1e-6. n even, lmax <= 12.
TraceReport trace_identity_check(int n, int lmax);

/// True iff exactly one eigenvalue of bstar(n, r) equals some
/// 4 sin^2(j pi/n) within 1e-7, and it equals 4 sin^2(r pi/n). Odd n.
bool exactly_one_cycle_eigenvalue(int n, int r);

/// cos(num pi / den), exact at the zeros and at +-1.
double cos_pi_frac(long long num, long long den);

}  // namespace tokgraph
