#pragma once

#include <vector>

#include "qbcap/model.hpp"

namespace qbcap {

/// Uniformly sampled solution of d(rho)/dt = -i[H, rho] from rho(0) = |01><01|.
struct Trajectory {
    std::vector<double> times;
    std::vector<DensityOperator> states;
    double max_hermitize_correction = 0.0; // largest symmetrization applied per substep
    int substeps_per_sample = 0;           // resolution actually used
};

struct IntegrateOptions {
    /// 0 picks the substep count automatically so the step-doubling estimate
    /// per sample interval stays below local_error_target. A forced positive
    /// value is used as-is and throws StepTooCoarse if its estimate exceeds
    /// 1e-6.
    int substeps_per_sample = 0;
    double local_error_target = 1e-9;
};

/// Classical RK4 between output samples with Hermitian symmetrization after
/// each substep. The closed form is the ground truth; this integrator exists
/// as the independent cross-check.
Trajectory integrate(const HamiltonianParams& params, double t_max, int steps,
                     const IntegrateOptions& opts = {});

/// Tr(rho_b(t_i) H_b) for each sample.
std::vector<double> battery_energy_series(const Trajectory& traj, const HamiltonianParams& params);
std::vector<double> charger_energy_series(const Trajectory& traj, const HamiltonianParams& params);

double trace_distance(const DensityOperator& a, const DensityOperator& b);

} // namespace qbcap
