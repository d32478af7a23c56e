#pragma once

#include <complex>
#include <vector>

#include "qbcap/errors.hpp"

namespace qbcap {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Sizes here are 2, 3 or 4; the
/// implementation is generic but makes no attempt to scale beyond that.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    int dim_ = 0;
    std::vector<cplx> a_;
};

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
cplx trace(const ComplexMatrix& m);
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b); // Tr(a b), no temporary
double frobenius_norm(const ComplexMatrix& m);

/// max_ij |m(i,j) - conj(m(j,i))|
double hermiticity_defect(const ComplexMatrix& m);
/// max_ij |a(i,j) - b(i,j)|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Standard Pauli matrices, basis (|0>, |1>) with sigma_z|0> = +|0>.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix pauli_plus();  // |0><1|
ComplexMatrix pauli_minus(); // |1><0|

/// Eigendecomposition of a Hermitian matrix. values ascending (stable order
/// within degenerate clusters), vectors[k] the matching orthonormal column.
struct Spectrum {
    std::vector<double> values;
    std::vector<std::vector<cplx>> vectors;
};

/// Closed form for dim 2, cyclic Jacobi (off-diagonal threshold 1e-14
/// relative) for dim >= 3. Throws NonHermitian above defect 1e-10.
Spectrum eig_hermitian(const ComplexMatrix& m);

/// Validated density operator: Hermitian, unit trace, positive semidefinite,
/// each within `tol` (integrated trajectories use a looser tol than exact
/// constructions).
class DensityOperator {
public:
    static DensityOperator validated(ComplexMatrix m, double tol = 1e-10);
    static DensityOperator from_pure(const std::vector<cplx>& amplitudes);

    int dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }
    cplx operator()(int i, int j) const { return m_(i, j); }

    double purity() const; // Tr(rho^2)

private:
    explicit DensityOperator(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

enum class Subsystem { Battery, Charger }; // battery is the left (most significant) qubit

/// Reduce a two-qubit state to one qubit. Throws BadDimension unless dim 4.
DensityOperator partial_trace(const DensityOperator& rho, Subsystem keep);

/// Sum of singular values; for Hermitian input the sum of |eigenvalues|.
double trace_norm(const ComplexMatrix& m);

/// rho -> sum_i K_i rho K_i^dag. Throws NotTracePreserving unless
/// sum_i K_i^dag K_i = I within 1e-10.
DensityOperator apply_kraus(const DensityOperator& rho, const std::vector<ComplexMatrix>& ks);

/// sqrt with roundoff clamp: x in [-tol, 0) counts as 0, below -tol throws
/// NotPositiveSemidefinite.
double clamped_sqrt(double x, double tol = 1e-10);

} // namespace qbcap
