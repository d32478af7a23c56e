#include "qbcap/capacity.hpp"

#include <algorithm>
#include <cmath>

#include "qbcap/resources.hpp"

namespace qbcap {

DensityOperator XState::to_density() const {
    double sum = 0.0;
    for (double p : populations) {
        if (p < -1e-12) throw InvalidXState("x-state: negative population");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-10) throw InvalidXState("x-state: populations must sum to 1");
    if (std::norm(corner) > populations[0] * populations[3] + 1e-12)
        throw InvalidXState("x-state: corner coherence violates positivity");
    if (std::norm(center) > populations[1] * populations[2] + 1e-12)
        throw InvalidXState("x-state: center coherence violates positivity");

    ComplexMatrix m(4);
    for (int i = 0; i < 4; ++i) m(i, i) = populations[i];
    m(0, 3) = corner;
    m(3, 0) = std::conj(corner);
    m(1, 2) = center;
    m(2, 1) = std::conj(center);
    return DensityOperator::validated(std::move(m));
}

double capacity_spectral(const DensityOperator& rho, const ComplexMatrix& h) {
    if (rho.dim() != h.dim()) throw DimensionMismatch("capacity: state/Hamiltonian dimensions");
    const std::vector<double> lam = eig_hermitian(rho.matrix()).values;
    const std::vector<double> eps = eig_hermitian(h).values;
    const int d = rho.dim();
    double c = 0.0;
    for (int i = 0; i < d; ++i) c += eps[i] * (lam[i] - lam[d - 1 - i]);
    return std::max(c, 0.0);
}

std::pair<DensityOperator, DensityOperator> active_passive(const DensityOperator& rho,
                                                           const ComplexMatrix& h) {
    if (rho.dim() != h.dim()) throw DimensionMismatch("capacity: state/Hamiltonian dimensions");
    const int d = rho.dim();
    const std::vector<double> lam = eig_hermitian(rho.matrix()).values;
    const Spectrum hs = eig_hermitian(h);

    auto assemble = [&](bool ascending) {
        ComplexMatrix m(d);
        for (int k = 0; k < d; ++k) {
            const double pop = std::max(ascending ? lam[k] : lam[d - 1 - k], 0.0);
            const std::vector<cplx>& v = hs.vectors[k];
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) m(i, j) += pop * v[i] * std::conj(v[j]);
        }
        return DensityOperator::validated(std::move(m));
    };
    return {assemble(true), assemble(false)};
}

CapacityReport capacity_report(const HamiltonianParams& params, double t) {
    CapacityReport r;
    r.battery = capacity_spectral(battery_state(params, t), battery_hamiltonian(params));
    r.charger = capacity_spectral(charger_state(params, t), charger_hamiltonian(params));
    r.total = capacity_spectral(evolved_density(params, t), build_total_hamiltonian(params));
    r.residual = r.total - r.battery - r.charger;
    return r;
}

SubadditivityCheck subadditivity_check(const XState& x, const HamiltonianParams& params) {
    params.validate();
    const DensityOperator rho = x.to_density();
    const DensityOperator rho_b = partial_trace(rho, Subsystem::Battery);
    const DensityOperator rho_c = partial_trace(rho, Subsystem::Charger);

    SubadditivityCheck check;
    check.lhs = capacity_spectral(rho_b, battery_hamiltonian(params)) +
                capacity_spectral(rho_c, charger_hamiltonian(params));
    check.rhs = capacity_spectral(rho, build_total_hamiltonian(params));
    check.holds = check.lhs <= check.rhs + 1e-9;
    return check;
}

bool schur_convexity_check(const DensityOperator& rho, const DensityOperator& sigma,
                           const ComplexMatrix& h) {
    const std::vector<double> lam = eig_hermitian(rho.matrix()).values;
    const std::vector<double> eta = eig_hermitian(sigma.matrix()).values;
    if (!majorizes(lam, eta))
        throw NotMajorized("schur_convexity_check: spectra are not ordered by majorization");
    return capacity_spectral(rho, h) <= capacity_spectral(sigma, h) + 1e-10;
}

} // namespace qbcap
