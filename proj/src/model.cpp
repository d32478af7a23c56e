#include "qbcap/model.hpp"

#include <algorithm>
#include <cmath>

namespace qbcap {

void HamiltonianParams::validate() const {
    if (!(std::isfinite(omega_b) && std::isfinite(omega_c) && std::isfinite(j1) &&
          std::isfinite(j2)))
        throw InvalidParams("model parameters must be finite");
    if (!(omega_b > 0.0))
        throw InvalidParams("omega_b must be positive (the battery gap is 2*omega_b)");
}

ModelSpectrum model_spectrum(const HamiltonianParams& params) {
    params.validate();
    const double delta = params.detuning();
    const double split = std::hypot(params.j1, delta);

    ModelSpectrum sp;
    sp.energy_hi = split - params.j2;
    sp.energy_lo = -split - params.j2;
    if (params.j1 != 0.0) {
        // (split + delta) and (delta - split) cancel on opposite signs of the
        // detuning; rewrite the affected one through ratio_hi * ratio_lo = -1.
        if (delta >= 0.0) {
            sp.ratio_hi = (split + delta) / params.j1;
            sp.ratio_lo = -1.0 / sp.ratio_hi;
        } else {
            sp.ratio_lo = (delta - split) / params.j1;
            sp.ratio_hi = -1.0 / sp.ratio_lo;
        }
    }

    const double w = params.omega_b + params.omega_c;
    double levels[4] = {sp.energy_lo, sp.energy_hi, params.j2 - w, params.j2 + w};
    std::sort(std::begin(levels), std::end(levels));
    std::copy(std::begin(levels), std::end(levels), std::begin(sp.total_levels));
    return sp;
}

ComplexMatrix build_total_hamiltonian(const HamiltonianParams& params) {
    params.validate();
    const ComplexMatrix id = ComplexMatrix::identity(2);
    ComplexMatrix h = cplx(-params.omega_b) * kron(pauli_z(), id);
    h += cplx(-params.omega_c) * kron(id, pauli_z());
    h += cplx(params.j1) * (kron(pauli_plus(), pauli_minus()) + kron(pauli_minus(), pauli_plus()));
    h += cplx(params.j2) * kron(pauli_z(), pauli_z());
    return h;
}

ComplexMatrix battery_hamiltonian(const HamiltonianParams& params) {
    ComplexMatrix h(2);
    h(0, 0) = -params.omega_b;
    h(1, 1) = params.omega_b;
    return h;
}

ComplexMatrix charger_hamiltonian(const HamiltonianParams& params) {
    ComplexMatrix h(2);
    h(0, 0) = -params.omega_c;
    h(1, 1) = params.omega_c;
    return h;
}

ComplexMatrix effective_block(const HamiltonianParams& params) {
    params.validate();
    ComplexMatrix h(2);
    h(0, 0) = params.detuning() - params.j2;  // <01|H|01>
    h(0, 1) = params.j1;
    h(1, 0) = params.j1;
    h(1, 1) = -params.detuning() - params.j2; // <10|H|10>
    return h;
}

EvolvedState evolve_closed_form(const HamiltonianParams& params, double t) {
    params.validate();
    if (!std::isfinite(t)) throw InvalidParams("evolution time must be finite");

    EvolvedState st;
    st.t = t;
    if (params.j1 == 0.0) {
        // Sector block is diagonal: |01> only picks up its own phase.
        st.c01 = std::exp(cplx(0.0, -(params.detuning() - params.j2) * t));
        st.c10 = 0.0;
        return st;
    }

    const ModelSpectrum sp = model_spectrum(params);
    const cplx phase_hi = std::exp(cplx(0.0, -sp.energy_hi * t));
    const cplx phase_lo = std::exp(cplx(0.0, -sp.energy_lo * t));
    const double span = sp.ratio_hi - sp.ratio_lo;
    st.c01 = (sp.ratio_hi * phase_hi - sp.ratio_lo * phase_lo) / span;
    st.c10 = (phase_hi - phase_lo) / span;
    return st;
}

DensityOperator evolved_density(const EvolvedState& state) {
    std::vector<cplx> amps = {0.0, state.c01, state.c10, 0.0};
    return DensityOperator::from_pure(amps);
}

DensityOperator evolved_density(const HamiltonianParams& params, double t) {
    return evolved_density(evolve_closed_form(params, t));
}

double battery_ground_population(const HamiltonianParams& params, double t) {
    params.validate();
    const double delta = params.detuning();
    if (params.j1 == 0.0) return 1.0;
    // Algebraically identical to [1 + cos(gap t) + 2 delta^2/j1^2] /
    // [2 + 2 delta^2/j1^2], without the division by j1^2.
    const double split2 = params.j1 * params.j1 + delta * delta;
    const double c = std::cos(std::sqrt(split2) * t);
    return (params.j1 * params.j1 * c * c + delta * delta) / split2;
}

DensityOperator battery_state(const HamiltonianParams& params, double t) {
    const double p = battery_ground_population(params, t);
    ComplexMatrix m(2);
    m(0, 0) = p;
    m(1, 1) = 1.0 - p;
    return DensityOperator::validated(std::move(m));
}

DensityOperator charger_state(const HamiltonianParams& params, double t) {
    const double p = battery_ground_population(params, t);
    ComplexMatrix m(2);
    m(0, 0) = 1.0 - p;
    m(1, 1) = p;
    return DensityOperator::validated(std::move(m));
}

} // namespace qbcap
