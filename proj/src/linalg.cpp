#include "qbcap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qbcap {

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (o.dim_ != dim_) throw DimensionMismatch("matrix add: dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (o.dim_ != dim_) throw DimensionMismatch("matrix sub: dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("matrix mul: dimension mismatch");
    const int n = a.dim_;
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int na = a.dim(), nb = b.dim();
    ComplexMatrix r(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            if (aij == 0.0) continue;
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return r;
}

cplx trace(const ComplexMatrix& m) {
    cplx t = 0.0;
    for (int i = 0; i < m.dim(); ++i) t += m(i, i);
    return t;
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("trace_product: dimension mismatch");
    cplx t = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) t += a(i, j) * b(j, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

double hermiticity_defect(const ComplexMatrix& m) {
    double d = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j <= i; ++j) d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    return d;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff: dimension mismatch");
    double d = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2);
    m(0, 1) = cplx(0.0, -1.0);
    m(1, 0) = cplx(0.0, 1.0);
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

ComplexMatrix pauli_plus() {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    return m;
}

ComplexMatrix pauli_minus() {
    ComplexMatrix m(2);
    m(1, 0) = 1.0;
    return m;
}

namespace {

// Eigen-pair of the Hermitian 2x2 [[a, g], [conj(g), b]]. Returns ascending
// values and exactly orthonormal vectors (second vector is the rotated
// orthogonal complement of the first, so orthogonality is not left to
// cancellation).
void eig2(double a, double b, cplx g, double out_values[2], cplx out_vectors[2][2]) {
    const double half_diff = 0.5 * (a - b);
    const double r = std::hypot(half_diff, std::abs(g));
    const double mean = 0.5 * (a + b);
    out_values[0] = mean - r;
    out_values[1] = mean + r;

    if (std::abs(g) == 0.0) {
        // Diagonal: basis vectors ordered by value, stable for ties.
        const bool swap = a > b;
        out_vectors[0][0] = swap ? 0.0 : 1.0;
        out_vectors[0][1] = swap ? 1.0 : 0.0;
        out_vectors[1][0] = swap ? 1.0 : 0.0;
        out_vectors[1][1] = swap ? 0.0 : 1.0;
        return;
    }

    // Build the top eigenvector from whichever closed form avoids
    // cancellation, then take the orthogonal complement for the other.
    cplx v_top[2];
    if (a >= b) {
        v_top[0] = out_values[1] - b; // = r + half_diff >= r, no cancellation
        v_top[1] = std::conj(g);
    } else {
        v_top[0] = g;
        v_top[1] = out_values[1] - a; // = r - half_diff >= r
    }
    const double n = std::sqrt(std::norm(v_top[0]) + std::norm(v_top[1]));
    v_top[0] /= n;
    v_top[1] /= n;

    out_vectors[1][0] = v_top[0];
    out_vectors[1][1] = v_top[1];
    out_vectors[0][0] = -std::conj(v_top[1]);
    out_vectors[0][1] = std::conj(v_top[0]);
}

double offdiag_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

} // namespace

Spectrum eig_hermitian(const ComplexMatrix& m) {
    if (hermiticity_defect(m) > 1e-10)
        throw NonHermitian("eig_hermitian: matrix is not Hermitian within 1e-10");

    const int n = m.dim();
    Spectrum sp;
    sp.values.resize(n);
    sp.vectors.assign(n, std::vector<cplx>(n, 0.0));

    if (n == 1) {
        sp.values[0] = m(0, 0).real();
        sp.vectors[0][0] = 1.0;
        return sp;
    }

    if (n == 2) {
        double vals[2];
        cplx vecs[2][2];
        eig2(m(0, 0).real(), m(1, 1).real(), m(0, 1), vals, vecs);
        for (int k = 0; k < 2; ++k) {
            sp.values[k] = vals[k];
            sp.vectors[k] = {vecs[k][0], vecs[k][1]};
        }
        return sp;
    }

    // Cyclic Jacobi: each sweep diagonalizes every 2x2 principal submatrix
    // in turn via the closed-form rotation. Quadratic convergence; the fixed
    // sizes here settle in a handful of sweeps.
    ComplexMatrix a = m;
    // Symmetrize so the iteration sees an exactly Hermitian matrix.
    for (int i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (int j = 0; j < i; ++j) {
            const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix vecs = ComplexMatrix::identity(n);
    const double scale = std::max(frobenius_norm(a), 1e-300);

    const int max_sweeps = 100;
    int sweep = 0;
    while (offdiag_norm(a) > 1e-14 * scale) {
        if (++sweep > max_sweeps)
            throw std::runtime_error("eig_hermitian: Jacobi iteration failed to converge");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) <= 1e-300) continue;
                double vals[2];
                cplx rot[2][2]; // rot[k] = k-th eigenvector of the (p,q) block
                eig2(a(p, p).real(), a(q, q).real(), a(p, q), vals, rot);
                // Columns of J restricted to (p,q): J(:,p) = rot[0], J(:,q) = rot[1].
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * rot[0][0] + akq * rot[0][1];
                    a(k, q) = akp * rot[1][0] + akq * rot[1][1];
                }
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(rot[0][0]) * apk + std::conj(rot[0][1]) * aqk;
                    a(q, k) = std::conj(rot[1][0]) * apk + std::conj(rot[1][1]) * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx vkp = vecs(k, p), vkq = vecs(k, q);
                    vecs(k, p) = vkp * rot[0][0] + vkq * rot[0][1];
                    vecs(k, q) = vkp * rot[1][0] + vkq * rot[1][1];
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });
    for (int k = 0; k < n; ++k) {
        sp.values[k] = a(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) sp.vectors[k][i] = vecs(i, order[k]);
    }
    return sp;
}

DensityOperator DensityOperator::validated(ComplexMatrix m, double tol) {
    if (hermiticity_defect(m) > tol)
        throw NonHermitian("density operator: not Hermitian within tolerance");
    if (std::abs(trace(m) - 1.0) > tol)
        throw NotNormalized("density operator: trace differs from 1");
    const Spectrum sp = eig_hermitian(m);
    if (sp.values.front() < -tol)
        throw NotPositiveSemidefinite("density operator: negative eigenvalue");
    return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::from_pure(const std::vector<cplx>& amplitudes) {
    const int n = static_cast<int>(amplitudes.size());
    double nrm2 = 0.0;
    for (const cplx& c : amplitudes) nrm2 += std::norm(c);
    if (std::abs(nrm2 - 1.0) > 1e-10)
        throw NotNormalized("from_pure: amplitudes are not normalized");
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
    return DensityOperator(std::move(m));
}

double DensityOperator::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    double s = 0.0;
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) s += std::norm(m_(i, j));
    return s;
}

DensityOperator partial_trace(const DensityOperator& rho, Subsystem keep) {
    if (rho.dim() != 4) throw BadDimension("partial_trace: expected a two-qubit state");
    ComplexMatrix r(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 2; ++k)
                s += (keep == Subsystem::Battery) ? rho(2 * i + k, 2 * j + k)
                                                  : rho(2 * k + i, 2 * k + j);
            r(i, j) = s;
        }
    return DensityOperator::validated(std::move(r), 1e-8);
}

double trace_norm(const ComplexMatrix& m) {
    if (hermiticity_defect(m) <= 1e-10) {
        ComplexMatrix h = m; // symmetrized view through eig_hermitian
        const Spectrum sp = eig_hermitian(h);
        double s = 0.0;
        for (double v : sp.values) s += std::abs(v);
        return s;
    }
    // General case: singular values from the spectrum of m^dag m.
    const Spectrum sp = eig_hermitian(adjoint(m) * m);
    double s = 0.0;
    for (double v : sp.values) s += std::sqrt(std::max(v, 0.0));
    return s;
}

DensityOperator apply_kraus(const DensityOperator& rho, const std::vector<ComplexMatrix>& ks) {
    const int n = rho.dim();
    ComplexMatrix completeness(n);
    for (const ComplexMatrix& k : ks) {
        if (k.dim() != n) throw DimensionMismatch("apply_kraus: operator dimension mismatch");
        completeness += adjoint(k) * k;
    }
    if (max_abs_diff(completeness, ComplexMatrix::identity(n)) > 1e-10)
        throw NotTracePreserving("apply_kraus: Kraus set does not resolve the identity");

    ComplexMatrix out(n);
    for (const ComplexMatrix& k : ks) out += k * rho.matrix() * adjoint(k);
    return DensityOperator::validated(std::move(out), 1e-10);
}

double clamped_sqrt(double x, double tol) {
    if (x < -tol) throw NotPositiveSemidefinite("clamped_sqrt: argument below -tolerance");
    return x > 0.0 ? std::sqrt(x) : 0.0;
}

} // namespace qbcap
