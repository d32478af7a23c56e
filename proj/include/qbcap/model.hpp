#pragma once

#include "qbcap/linalg.hpp"

namespace qbcap {

/// Model constants of the battery-charger pair. Basis order |b c| with the
/// battery as the left qubit; hbar = 1; the battery gap is 2*omega_b with
/// ground level -omega_b on |0>.
struct HamiltonianParams {
    double omega_b = 1.0; // battery field strength
    double omega_c = 1.0; // charger field strength
    double j1 = 0.0;      // flip-flop strength
    double j2 = 0.0;      // Ising strength

    /// Throws InvalidParams unless omega_b > 0 and all fields are finite.
    void validate() const;

    double detuning() const { return omega_c - omega_b; }
};

/// Spectral data of the model: the two single-excitation levels with the
/// |01>:|10> amplitude ratio of each eigenvector, plus the four total levels.
struct ModelSpectrum {
    double energy_hi = 0.0; // sector level  sqrt(j1^2 + detuning^2) - j2
    double energy_lo = 0.0; // sector level -sqrt(j1^2 + detuning^2) - j2
    double ratio_hi = 0.0;  // <01|e_hi> / <10|e_hi>, defined only when j1 != 0
    double ratio_lo = 0.0;  // <01|e_lo> / <10|e_lo>, product with ratio_hi is -1
    double total_levels[4] = {0, 0, 0, 0}; // ascending eigenvalues of the 4x4 H

    double gap() const { return energy_hi - energy_lo; } // = 2 sqrt(j1^2 + detuning^2)
};

ModelSpectrum model_spectrum(const HamiltonianParams& params);

/// Amplitudes of the evolved state c01|01> + c10|10> at time t,
/// starting from |01> (battery ground, charger excited).
struct EvolvedState {
    double t = 0.0;
    cplx c01{1.0, 0.0};
    cplx c10{0.0, 0.0};

    double battery_ground_population() const { return std::norm(c01); }
};

ComplexMatrix build_total_hamiltonian(const HamiltonianParams& params);
ComplexMatrix battery_hamiltonian(const HamiltonianParams& params); // diag(-omega_b, +omega_b)
ComplexMatrix charger_hamiltonian(const HamiltonianParams& params); // diag(-omega_c, +omega_c)

/// Restriction of the total Hamiltonian to span{|01>, |10>}.
ComplexMatrix effective_block(const HamiltonianParams& params);

/// Exact evolution inside the single-excitation sector. j1 == 0 is a pure
/// phase on |01> (no transfer).
EvolvedState evolve_closed_form(const HamiltonianParams& params, double t);

/// The 4x4 projector onto the evolved state.
DensityOperator evolved_density(const EvolvedState& state);
DensityOperator evolved_density(const HamiltonianParams& params, double t);

/// Reduced states in closed form: diag(p, 1-p) and diag(1-p, p) with
/// p = [1 + cos(gap*t) + 2 detuning^2/j1^2] / [2 + 2 detuning^2/j1^2].
DensityOperator battery_state(const HamiltonianParams& params, double t);
DensityOperator charger_state(const HamiltonianParams& params, double t);
double battery_ground_population(const HamiltonianParams& params, double t);

} // namespace qbcap
