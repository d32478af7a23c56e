#pragma once

#include <array>
#include <vector>

#include "qbcap/linalg.hpp"

namespace qbcap {

/// Pauli correlation matrix t_ij = Tr(rho sigma_i x sigma_j).
struct CorrelationMatrix {
    std::array<std::array<double, 3>, 3> t{};

    std::array<std::array<double, 3>, 3> gram() const; // T T^transpose
};

/// The six measures evaluated for one state at one time. Entanglement,
/// steering, Bell, coherence and imaginarity refer to the two-qubit state;
/// texture refers to the battery qubit.
struct ResourceReport {
    double concurrence = 0.0;
    double steering = 0.0;
    double bell = 0.0;
    double coherence_l1 = 0.0;
    double imaginarity_l1 = 0.0;
    double texture_tr = 0.0;
};

/// Pure-state concurrence sqrt(2[1 - Tr(rho_b^2)]). Throws NotPure when
/// Tr(rho^2) < 1 - 1e-8; mixed-state families get their own closed forms
/// (see noise).
double concurrence(const DensityOperator& state4);

/// Three-setting steering value Tr(T T^t) - 1; positive means steerable.
double steering_f3(const DensityOperator& state4);

/// CHSH violation 2 sqrt(i1 + i2) - 2 from the two largest eigenvalues of
/// T T^t. Returned unclamped.
double bell_chsh(const DensityOperator& state4);

/// Sum of |rho_ij| over i != j.
double coherence_l1(const DensityOperator& rho);

/// Sum of |Im rho_ij| over i != j.
double imaginarity_l1(const DensityOperator& rho);

/// Trace distance to the unique texture-free state |f1><f1| with
/// |f1> = (1/sqrt d) sum_i |i>.
double texture_tr(const DensityOperator& rho);

CorrelationMatrix correlation_matrix(const DensityOperator& state4);

/// All six measures; `battery` must be the reduced battery state of `state4`
/// (checked entrywise).
ResourceReport measure_all(const DensityOperator& state4, const DensityOperator& battery);

/// True iff `eta` majorizes `lam` (lam ~ eta allowed): every top-k partial
/// sum of eta dominates lam's and the totals agree. Inputs ascending,
/// normalized to 1 within 1e-10.
bool majorizes(const std::vector<double>& lam, const std::vector<double>& eta);

} // namespace qbcap
