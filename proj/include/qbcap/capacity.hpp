#pragma once

#include <array>
#include <utility>

#include "qbcap/model.hpp"

namespace qbcap {

/// Capacities along the evolution, all in energy units.
struct CapacityReport {
    double battery = 0.0;
    double charger = 0.0;
    double total = 0.0;
    double residual = 0.0; // total - battery - charger
};

/// Two-qubit state with support on the diagonal and anti-diagonal only.
struct XState {
    std::array<double, 4> populations{}; // diagonal, basis |00>,|01>,|10>,|11>
    cplx corner{};                       // <00|rho|11>
    cplx center{};                       // <01|rho|10>

    /// Throws InvalidXState unless the populations form a distribution and
    /// both off-diagonal discs satisfy their positivity bound.
    DensityOperator to_density() const;
};

/// sum_i eps_i (lam_i - lam_{d-1-i}) with both spectra ascending.
double capacity_spectral(const DensityOperator& rho, const ComplexMatrix& h);

/// (active, passive) pair on the unitary orbit of rho: active pairs ascending
/// populations with ascending energies, passive pairs them in opposition.
/// With degenerate spectra the stable-sort representative is returned.
std::pair<DensityOperator, DensityOperator> active_passive(const DensityOperator& rho,
                                                           const ComplexMatrix& h);

/// Battery, charger and total capacities of the evolved state at time t.
CapacityReport capacity_report(const HamiltonianParams& params, double t);

struct SubadditivityCheck {
    double lhs = 0.0; // C(rho_b; H_b) + C(rho_c; H_c)
    double rhs = 0.0; // C(rho; H)
    bool holds = false;

    double slack() const { return rhs - lhs; }
};

/// Subsystem capacities against the total capacity for an X-state.
SubadditivityCheck subadditivity_check(const XState& x, const HamiltonianParams& params);

/// Requires spectrum(rho) majorized by spectrum(sigma) (throws NotMajorized
/// otherwise); true iff C(rho; h) <= C(sigma; h) + 1e-10.
bool schur_convexity_check(const DensityOperator& rho, const DensityOperator& sigma,
                           const ComplexMatrix& h);

} // namespace qbcap
