#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace tokgraph {

class IntSymMatrix;

using cplx = std::complex<double>;

/// The eigensolver hit its iteration cap.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix shape or symmetry precondition violated.
class MatrixError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A multiset matching failed; carries the first value that found no partner.
class SpectrumMismatch : public std::runtime_error {
public:
    SpectrumMismatch(const std::string& what, double value) : std::runtime_error(what), value_(value) {}
    double value() const { return value_; }

private:
    double value_;
};

/// Row-major dense matrix.
template <class T>
class Dense {
public:
    Dense() = default;
    Dense(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T{}) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    friend bool operator==(const Dense&, const Dense&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using Matrix = Dense<double>;
using HermMatrix = Dense<cplx>;

Matrix to_real(const IntSymMatrix& m);

/// Ascending eigenvalue multiset. Values are never clustered; `tol` is only
/// used when multiplicities are displayed.
struct Spectrum {
    std::vector<double> values;
    double tol = 1e-8;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
};

/// Tridiagonal matrix; sub[i] is entry (i+1, i), super[i] is entry (i, i+1).
struct TriDiag {
    std::vector<double> diag, sub, super;

    std::size_t dim() const { return diag.size(); }
    bool is_symmetric() const { return sub == super; }
    Matrix to_dense() const;
};

struct SymEigen {
    Spectrum spectrum;
    Matrix vectors;  ///< column j pairs with spectrum[j]; empty if not requested
};

struct HermEigen {
    Spectrum spectrum;
    HermMatrix vectors;
};

/// Householder tridiagonalization followed by implicit-shift QL.
SymEigen eig_sym(const Matrix& a, bool want_vectors = false);

/// Cyclic complex Jacobi rotations.
HermEigen eig_herm(const HermMatrix& a, bool want_vectors = false);

/// Implicit-shift QL on a symmetric tridiagonal matrix.
Spectrum eig_tridiag_sym(const TriDiag& t);

/// Diagonal similarity D^{-1} T D with off-diagonals sqrt(sub*super).
/// Throws MatrixError when some product is negative.
TriDiag symmetrize_tridiag(const TriDiag& t);

struct GershgorinEndpoints {
    std::vector<double> rows;     ///< diag[i] minus the off-diagonal radius of row i
    double first = 0.0;           ///< row 0
    std::optional<double> inner;  ///< smallest endpoint over rows 1..m-2, if any
    double last = 0.0;            ///< row m-1
};

GershgorinEndpoints gershgorin_left(const TriDiag& t);

double rayleigh_quotient(const Matrix& l, const std::vector<double>& v);

// Spectrum multiset algebra. Matching is greedy over the two sorted lists,
// which is an optimal injective matching for interval tolerances.
Spectrum spectrum_union(const Spectrum& a, const Spectrum& b);
Spectrum spectrum_subtract(const Spectrum& a, const Spectrum& b, double tol);
bool spectrum_contains(const Spectrum& a, const Spectrum& b, double tol);
bool spectrum_equal(const Spectrum& a, const Spectrum& b, double tol);
/// Largest elementwise |a_i - b_i|; sizes must agree.
double spectrum_max_deviation(const Spectrum& a, const Spectrum& b);

/// (value, multiplicity) after merging neighbors closer than tol.
std::vector<std::pair<double, int>> cluster(const Spectrum& s, double tol);

Spectrum make_spectrum(std::vector<double> values, double tol = 1e-8);

/// {"n": size, "tol": tol, "values": [...]}.
nlohmann::json to_json(const Spectrum& s);
Spectrum spectrum_from_json(const nlohmann::json& j);

// Small helpers shared by the numerical modules.
double norm2(const std::vector<double>& v);
double norm2(const std::vector<cplx>& v);
std::vector<double> matvec(const Matrix& a, const std::vector<double>& x);
std::vector<cplx> matvec(const HermMatrix& a, const std::vector<cplx>& x);
Matrix matmul(const Matrix& a, const Matrix& b);
double inf_norm(const Matrix& a);
double inf_norm(const HermMatrix& a);

}  // namespace tokgraph
