#include "qbcap/random_states.hpp"

#include <cmath>
#include <numbers>

namespace qbcap {

XState sample_x_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    XState x;
    double total = 0.0;
    for (double& p : x.populations) {
        p = -std::log(1.0 - unit(rng)); // exponential spacings -> flat simplex
        total += p;
    }
    for (double& p : x.populations) p /= total;

    auto disc_point = [&](double radius) {
        const double r = radius * std::sqrt(unit(rng));
        const double phi = 2.0 * std::numbers::pi * unit(rng);
        return cplx(r * std::cos(phi), r * std::sin(phi));
    };
    x.corner = disc_point(std::sqrt(x.populations[0] * x.populations[3]));
    x.center = disc_point(std::sqrt(x.populations[1] * x.populations[2]));
    return x;
}

DensityOperator sample_density(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
    ComplexMatrix rho = g * adjoint(g);
    rho *= 1.0 / trace(rho).real();
    return DensityOperator::validated(std::move(rho));
}

ComplexMatrix sample_hermitian(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
    ComplexMatrix h = g;
    h += adjoint(g);
    h *= 0.5;
    return h;
}

} // namespace qbcap
