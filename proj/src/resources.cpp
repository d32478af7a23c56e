#include "qbcap/resources.hpp"

#include <algorithm>
#include <cmath>

namespace qbcap {

std::array<std::array<double, 3>, 3> CorrelationMatrix::gram() const {
    std::array<std::array<double, 3>, 3> g{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += t[i][k] * t[j][k];
            g[i][j] = s;
        }
    return g;
}

double concurrence(const DensityOperator& state4) {
    if (state4.dim() != 4) throw BadDimension("concurrence: expected a two-qubit state");
    if (state4.purity() < 1.0 - 1e-8)
        throw NotPure("concurrence: the purity-based formula needs a pure state");
    const DensityOperator battery = partial_trace(state4, Subsystem::Battery);
    return clamped_sqrt(2.0 * (1.0 - battery.purity()));
}

CorrelationMatrix correlation_matrix(const DensityOperator& state4) {
    if (state4.dim() != 4) throw BadDimension("correlation_matrix: expected a two-qubit state");
    // The nine two-qubit Pauli products never change; build them once.
    static const std::array<ComplexMatrix, 9> kPauliPairs = [] {
        const ComplexMatrix paulis[3] = {pauli_x(), pauli_y(), pauli_z()};
        std::array<ComplexMatrix, 9> out;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) out[3 * i + j] = kron(paulis[i], paulis[j]);
        return out;
    }();

    CorrelationMatrix cm;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            cm.t[i][j] = trace_product(state4.matrix(), kPauliPairs[3 * i + j]).real();
    return cm;
}

namespace {

// Ascending eigenvalues of the 3x3 Gram matrix, via the Hermitian solver.
std::vector<double> gram_eigenvalues(const CorrelationMatrix& cm) {
    const auto g = cm.gram();
    ComplexMatrix m(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = g[i][j];
    return eig_hermitian(m).values;
}

} // namespace

double steering_f3(const DensityOperator& state4) {
    const CorrelationMatrix cm = correlation_matrix(state4);
    double s = -1.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += cm.t[i][j] * cm.t[i][j];
    return s;
}

double bell_chsh(const DensityOperator& state4) {
    const std::vector<double> ev = gram_eigenvalues(correlation_matrix(state4));
    return 2.0 * std::sqrt(std::max(ev[1] + ev[2], 0.0)) - 2.0;
}

double coherence_l1(const DensityOperator& rho) {
    double s = 0.0;
    for (int i = 0; i < rho.dim(); ++i)
        for (int j = 0; j < rho.dim(); ++j)
            if (i != j) s += std::abs(rho(i, j));
    return s;
}

double imaginarity_l1(const DensityOperator& rho) {
    double s = 0.0;
    for (int i = 0; i < rho.dim(); ++i)
        for (int j = 0; j < rho.dim(); ++j)
            if (i != j) s += std::abs(rho(i, j).imag());
    return s;
}

double texture_tr(const DensityOperator& rho) {
    const int d = rho.dim();
    ComplexMatrix diff = rho.matrix();
    const double inv_d = 1.0 / d;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) diff(i, j) -= inv_d;
    return 0.5 * trace_norm(diff);
}

ResourceReport measure_all(const DensityOperator& state4, const DensityOperator& battery) {
    if (state4.dim() != 4 || battery.dim() != 2)
        throw BadDimension("measure_all: expected a two-qubit state and a battery qubit");
    const DensityOperator reduced = partial_trace(state4, Subsystem::Battery);
    if (max_abs_diff(reduced.matrix(), battery.matrix()) > 1e-8)
        throw DimensionMismatch("measure_all: battery is not the reduced state of state4");

    ResourceReport r;
    r.concurrence = concurrence(state4);
    r.steering = steering_f3(state4);
    r.bell = bell_chsh(state4);
    r.coherence_l1 = coherence_l1(state4);
    r.imaginarity_l1 = imaginarity_l1(state4);
    r.texture_tr = texture_tr(battery);
    return r;
}

bool majorizes(const std::vector<double>& lam, const std::vector<double>& eta) {
    if (lam.size() != eta.size() || lam.empty())
        throw LengthMismatch("majorizes: lists must have equal nonzero length");

    auto check_input = [](const std::vector<double>& v) {
        double sum = 0.0;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i > 0 && v[i] < v[i - 1] - 1e-12)
                throw std::invalid_argument("majorizes: list not ascending");
            sum += v[i];
        }
        if (std::abs(sum - 1.0) > 1e-10)
            throw NotNormalized("majorizes: list does not sum to 1");
    };
    check_input(lam);
    check_input(eta);

    // Descending partial sums; 1e-12 slack absorbs roundoff at equality.
    double lam_top = 0.0, eta_top = 0.0;
    const size_t d = lam.size();
    for (size_t k = 0; k < d - 1; ++k) {
        lam_top += lam[d - 1 - k];
        eta_top += eta[d - 1 - k];
        if (eta_top < lam_top - 1e-12) return false;
    }
    return true;
}

} // namespace qbcap
