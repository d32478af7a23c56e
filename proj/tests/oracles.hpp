#pragma once

// Test-only oracles. Each one reaches the target quantity by a route
// independent of the implementation path it is used to check.

#include <cmath>
#include <random>

#include "qbcap/dynamics.hpp"
#include "qbcap/model.hpp"

namespace qbcap::testing {

/// exp(-iHt)|01> assembled from the spectral decomposition of the full 4x4
/// Hamiltonian (no closed-form sector algebra involved).
inline DensityOperator spectral_exponential_state(const HamiltonianParams& params, double t) {
    const Spectrum sp = eig_hermitian(build_total_hamiltonian(params));
    std::vector<cplx> psi(4, 0.0);
    for (int k = 0; k < 4; ++k) {
        const cplx amp = std::conj(sp.vectors[k][1]) * std::exp(cplx(0.0, -sp.values[k] * t));
        for (int i = 0; i < 4; ++i) psi[i] += amp * sp.vectors[k][i];
    }
    double norm2 = 0.0;
    for (const cplx& c : psi) norm2 += std::norm(c);
    const double scale = 1.0 / std::sqrt(norm2);
    for (cplx& c : psi) c *= scale;
    return DensityOperator::from_pure(psi);
}

/// Haar-distributed 2x2 unitary via Gram-Schmidt on a Ginibre matrix (the
/// pivots come out real positive, so no phase fix is needed).
inline void haar_unitary2(std::mt19937_64& rng, cplx u[2][2]) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    cplx g[2][2];
    for (auto& row : g)
        for (cplx& v : row) v = cplx(gauss(rng), gauss(rng));

    const double n1 = std::sqrt(std::norm(g[0][0]) + std::norm(g[1][0]));
    u[0][0] = g[0][0] / n1;
    u[1][0] = g[1][0] / n1;
    const cplx proj = std::conj(u[0][0]) * g[0][1] + std::conj(u[1][0]) * g[1][1];
    cplx c0 = g[0][1] - proj * u[0][0];
    cplx c1 = g[1][1] - proj * u[1][0];
    const double n2 = std::sqrt(std::norm(c0) + std::norm(c1));
    u[0][1] = c0 / n2;
    u[1][1] = c1 / n2;
}

/// Brute-force unitary-orbit capacity: max - min of Tr[U rho U^dag h] over
/// `samples` Haar draws.
inline double orbit_capacity(const DensityOperator& rho, const ComplexMatrix& h, int samples,
                             std::mt19937_64& rng) {
    double lo = 1e300, hi = -1e300;
    for (int s = 0; s < samples; ++s) {
        cplx u[2][2];
        haar_unitary2(rng, u);
        double energy = 0.0;
        for (int i = 0; i < 2; ++i) {
            // (U rho U^dag)_ii, paired with the diagonal of h in its eigenbasis
            cplx diag = 0.0;
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) diag += u[i][j] * rho(j, k) * std::conj(u[i][k]);
            energy += h(i, i).real() * diag.real();
        }
        lo = std::min(lo, energy);
        hi = std::max(hi, energy);
    }
    return hi - lo;
}

/// Diagonal part of rho (the fully dephased state).
inline DensityOperator dephased(const DensityOperator& rho) {
    ComplexMatrix m(rho.dim());
    for (int i = 0; i < rho.dim(); ++i) m(i, i) = rho(i, i).real();
    return DensityOperator::validated(std::move(m));
}

} // namespace qbcap::testing
