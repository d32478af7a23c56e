#include <doctest.h>

#include <random>

#include "qbcap/linalg.hpp"
#include "qbcap/model.hpp"
#include "qbcap/random_states.hpp"

using namespace qbcap;

namespace {

ComplexMatrix diag2(double a, double b) {
    ComplexMatrix m(2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

} // namespace

TEST_CASE("eig_hermitian: diagonal qubit state") {
    const Spectrum sp = eig_hermitian(diag2(0.3, 0.7));
    CHECK(sp.values[0] == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(sp.values[1] == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("eig_hermitian: single-excitation block at the reference params") {
    ComplexMatrix m(2);
    m(0, 0) = -0.1;
    m(0, 1) = 0.1;
    m(1, 0) = 0.1;
    m(1, 1) = -0.1;
    const Spectrum sp = eig_hermitian(m);
    CHECK(sp.values[0] == doctest::Approx(-0.2).epsilon(1e-13));
    CHECK(sp.values[1] == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("eig_hermitian: full Hamiltonian at the reference params") {
    const ComplexMatrix h = build_total_hamiltonian({1.0, 1.0, 0.1, 0.1});
    const Spectrum sp = eig_hermitian(h);
    const double expected[4] = {-1.9, -0.2, 0.0, 2.1};
    for (int i = 0; i < 4; ++i) CHECK(sp.values[i] == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("eig_hermitian: rejects a non-Hermitian input") {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(eig_hermitian(m), NonHermitian);
}

TEST_CASE("eig_hermitian: orthonormality and reconstruction on random 4x4") {
    std::mt19937_64 rng(11);
    double worst_ortho = 0.0, worst_rec = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const ComplexMatrix h = sample_hermitian(rng, 4);
        const Spectrum sp = eig_hermitian(h);

        for (int a = 0; a < 4; ++a) {
            REQUIRE((a == 0 || sp.values[a] >= sp.values[a - 1]));
            for (int b = 0; b < 4; ++b) {
                cplx dot = 0.0;
                for (int i = 0; i < 4; ++i) dot += std::conj(sp.vectors[a][i]) * sp.vectors[b][i];
                worst_ortho = std::max(worst_ortho, std::abs(dot - (a == b ? 1.0 : 0.0)));
            }
        }

        ComplexMatrix rec(4);
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    rec(i, j) += sp.values[k] * sp.vectors[k][i] * std::conj(sp.vectors[k][j]);
        worst_rec = std::max(worst_rec, max_abs_diff(rec, h));
    }
    CHECK(worst_ortho < 1e-10);
    CHECK(worst_rec < 1e-9);
}

TEST_CASE("partial_trace: product and maximally entangled states") {
    const DensityOperator rho01 = DensityOperator::from_pure({0.0, 1.0, 0.0, 0.0});
    const DensityOperator b = partial_trace(rho01, Subsystem::Battery);
    CHECK(std::abs(b(0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(b(1, 1)) < 1e-14);

    const double r = 1.0 / std::sqrt(2.0);
    const DensityOperator bell = DensityOperator::from_pure({0.0, r, r, 0.0});
    const DensityOperator mixed = partial_trace(bell, Subsystem::Battery);
    CHECK(std::abs(mixed(0, 0) - 0.5) < 1e-14);
    CHECK(std::abs(mixed(1, 1) - 0.5) < 1e-14);
    CHECK(std::abs(mixed(0, 1)) < 1e-14);
}

TEST_CASE("partial_trace: resonance evolved state reduces to diag(cos^2, sin^2)") {
    const HamiltonianParams p{1.0, 1.0, 0.25, 0.3};
    const double t = 1.7;
    const DensityOperator b = partial_trace(evolved_density(p, t), Subsystem::Battery);
    const double c = std::cos(p.j1 * t), s = std::sin(p.j1 * t);
    CHECK(std::abs(b(0, 0).real() - c * c) < 1e-12);
    CHECK(std::abs(b(1, 1).real() - s * s) < 1e-12);
}

TEST_CASE("partial_trace: both marginals are unit-trace PSD qubits") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const DensityOperator rho = sample_density(rng, 4);
        for (Subsystem keep : {Subsystem::Battery, Subsystem::Charger}) {
            const DensityOperator q = partial_trace(rho, keep); // validation inside
            CHECK(std::abs(trace(q.matrix()) - 1.0) < 1e-12);
            CHECK(eig_hermitian(q.matrix()).values[0] >= -1e-10);
        }
    }
    CHECK_THROWS_AS(partial_trace(sample_density(rng, 2), Subsystem::Battery), BadDimension);
}

TEST_CASE("trace_norm: fixed values and the |Tr| lower bound") {
    CHECK(trace_norm(ComplexMatrix(3)) == 0.0);
    CHECK(trace_norm(diag2(0.5, -0.5)) == doctest::Approx(1.0).epsilon(1e-14));

    // battery state diag(1,0) against the uniform-texture projector
    ComplexMatrix diff = diag2(1.0, 0.0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) diff(i, j) -= 0.5;
    CHECK(trace_norm(diff) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const ComplexMatrix h = sample_hermitian(rng, 4);
        CHECK(trace_norm(h) >= std::abs(trace(h).real()) - 1e-12);
    }
}

TEST_CASE("trace_norm: general matrices via unitary invariance") {
    // |0><1| has singular values {1, 0}
    ComplexMatrix shift(2);
    shift(0, 1) = 1.0;
    CHECK(trace_norm(shift) == doctest::Approx(1.0).epsilon(1e-12));

    // U diag(d) V has trace norm sum |d_i| for any unitaries U, V
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    auto unitary4 = [&] {
        const Spectrum sp = eig_hermitian(sample_hermitian(rng, 4));
        ComplexMatrix u(4);
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 4; ++i) u(i, k) = sp.vectors[k][i];
        return u;
    };
    for (int trial = 0; trial < 100; ++trial) {
        ComplexMatrix d(4);
        double expected = 0.0;
        for (int i = 0; i < 4; ++i) {
            d(i, i) = coeff(rng);
            expected += std::abs(d(i, i));
        }
        const ComplexMatrix m = unitary4() * d * unitary4();
        CHECK(trace_norm(m) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("eig_hermitian: closed-form 2x2 path under near-degeneracy") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> spread(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        // diagonal gaps and couplings across twelve orders of magnitude
        const double scale = std::pow(10.0, -12.0 * (trial % 6) / 5.0);
        ComplexMatrix m(2);
        m(0, 0) = spread(rng);
        m(1, 1) = m(0, 0).real() + scale * spread(rng);
        m(0, 1) = scale * cplx(spread(rng), spread(rng));
        m(1, 0) = std::conj(m(0, 1));

        const Spectrum sp = eig_hermitian(m);
        REQUIRE(sp.values[0] <= sp.values[1]);
        cplx dot = 0.0;
        ComplexMatrix rec(2);
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j)
                    rec(i, j) += sp.values[k] * sp.vectors[k][i] * std::conj(sp.vectors[k][j]);
                dot += std::conj(sp.vectors[0][i]) * sp.vectors[1][i] * (k == 0 ? 1.0 : 0.0);
            }
        worst = std::max({worst, std::abs(dot), max_abs_diff(rec, m)});
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("apply_kraus: identity channel and completeness check") {
    std::mt19937_64 rng(5);
    const DensityOperator rho = sample_density(rng, 4);
    const DensityOperator out = apply_kraus(rho, {ComplexMatrix::identity(4)});
    CHECK(max_abs_diff(out.matrix(), rho.matrix()) < 1e-14);

    // 0.6 I + 0.4 I fails completeness
    CHECK_THROWS_AS(
        apply_kraus(rho, {cplx(0.6) * ComplexMatrix::identity(4),
                          cplx(0.4) * ComplexMatrix::identity(4)}),
        NotTracePreserving);
}

TEST_CASE("apply_kraus: preserves trace and positivity for random mixed unitaries") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const DensityOperator rho = sample_density(rng, 4);
        // {sqrt(p) U, sqrt(1-p) V} with U, V unitary resolves the identity.
        auto unitary4 = [&] {
            const Spectrum sp = eig_hermitian(sample_hermitian(rng, 4));
            ComplexMatrix u(4);
            for (int k = 0; k < 4; ++k)
                for (int i = 0; i < 4; ++i) u(i, k) = sp.vectors[k][i];
            return u;
        };
        const double p = unit(rng);
        const DensityOperator out =
            apply_kraus(rho, {cplx(std::sqrt(p)) * unitary4(),
                              cplx(std::sqrt(1.0 - p)) * unitary4()});
        CHECK(std::abs(trace(out.matrix()) - 1.0) < 1e-12);
        CHECK(eig_hermitian(out.matrix()).values[0] >= -1e-10);
    }
}

TEST_CASE("density operator validation rejects each broken invariant") {
    ComplexMatrix skew(2);
    skew(0, 0) = 0.5;
    skew(1, 1) = 0.5;
    skew(0, 1) = cplx(0.0, 0.4);
    skew(1, 0) = cplx(0.0, 0.4); // conj would be -0.4i
    CHECK_THROWS_AS(DensityOperator::validated(skew), NonHermitian);

    CHECK_THROWS_AS(DensityOperator::validated(diag2(0.7, 0.7)), NotNormalized);
    CHECK_THROWS_AS(DensityOperator::validated(diag2(1.2, -0.2)), NotPositiveSemidefinite);
}

TEST_CASE("clamped_sqrt: roundoff window and hard failure") {
    CHECK(clamped_sqrt(4.0) == 2.0);
    CHECK(clamped_sqrt(-1e-11) == 0.0);
    CHECK_THROWS_AS(clamped_sqrt(-1e-9), NotPositiveSemidefinite);
}
