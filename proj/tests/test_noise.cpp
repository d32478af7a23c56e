#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qbcap/capacity.hpp"
#include "qbcap/noise.hpp"

using namespace qbcap;

namespace {
const HamiltonianParams kRef{1.0, 1.0, 0.1, 0.1};
const HamiltonianParams kDetuned{1.0, 1.3, 0.6, 0.4};
} // namespace

TEST_CASE("dephasing kraus set: limits and completeness") {
    CHECK_THROWS_AS(dephasing_kraus(-0.1), GammaOutOfRange);
    CHECK_THROWS_AS(dephasing_kraus(1.1), GammaOutOfRange);

    const std::vector<ComplexMatrix> off = dephasing_kraus(0.0);
    CHECK(max_abs_diff(off[0], ComplexMatrix::identity(4)) == 0.0);
    for (int k = 1; k < 4; ++k) CHECK(frobenius_norm(off[k]) == 0.0);

    const std::vector<ComplexMatrix> full = dephasing_kraus(1.0);
    CHECK(frobenius_norm(full[0]) == 0.0);
    CHECK(max_abs_diff(full[3], kron(pauli_z(), pauli_z())) == 0.0);

    for (double g : {0.0, 0.1, 0.25, 0.5, 0.8, 1.0}) {
        ComplexMatrix sum(4);
        for (const ComplexMatrix& k : dephasing_kraus(g)) sum += adjoint(k) * k;
        CHECK(max_abs_diff(sum, ComplexMatrix::identity(4)) < 1e-12);
    }
}

TEST_CASE("gamma = 1/2 wipes the sector coherences, populations stay") {
    const DensityOperator rho = evolved_density(kRef, 7.0);
    const DensityOperator out = apply_kraus(rho, dephasing_kraus(0.5));
    CHECK(std::abs(out(1, 2)) < 1e-15);
    CHECK(std::abs(out(2, 1)) < 1e-15);
    CHECK(std::abs(out(1, 1) - rho(1, 1)) < 1e-15);
    CHECK(std::abs(out(2, 2) - rho(2, 2)) < 1e-15);
}

TEST_CASE("noisy_state: closed form equals the channel route") {
    for (double g : {0.0, 0.1, 0.25, 0.4, 0.5, 0.9}) {
        for (double t : {0.0, 1.3, 5.005, 26.0}) {
            for (const HamiltonianParams& p : {kRef, kDetuned}) {
                const DensityOperator direct = noisy_state(p, t, g);
                const DensityOperator channel =
                    apply_kraus(evolved_density(p, t), dephasing_kraus(g));
                CHECK(max_abs_diff(direct.matrix(), channel.matrix()) < 1e-12);

                // populations unchanged entrywise
                const DensityOperator clean = evolved_density(p, t);
                for (int i = 0; i < 4; ++i)
                    CHECK(std::abs(direct(i, i) - clean(i, i)) < 1e-14);
            }
        }
    }

    const DensityOperator identity_case = noisy_state(kRef, 3.0, 0.0);
    CHECK(max_abs_diff(identity_case.matrix(), evolved_density(kRef, 3.0).matrix()) == 0.0);

    const DensityOperator half = noisy_state(kDetuned, 3.0, 0.5);
    CHECK(std::abs(half(1, 2)) == 0.0);
}

TEST_CASE("noisy_resources: attenuation scaling and the gamma = 1/2 collapse") {
    const double t_bell = std::numbers::pi / (4.0 * kRef.j1);
    CHECK(noisy_resources(kRef, t_bell, 0.25).concurrence ==
          doctest::Approx(0.25).epsilon(1e-12));

    for (const HamiltonianParams& p : {kRef, kDetuned}) {
        for (double t : {0.9, 5.005, 18.0}) {
            const ResourceReport clean = noisy_resources(p, t, 0.0);
            for (double g : {0.1, 0.25, 0.4}) {
                const double att = NoiseParams{g}.attenuation();
                const ResourceReport noisy = noisy_resources(p, t, g);
                CHECK(noisy.concurrence ==
                      doctest::Approx(att * clean.concurrence).epsilon(1e-12));
                CHECK(noisy.coherence_l1 ==
                      doctest::Approx(att * clean.coherence_l1).epsilon(1e-12));
                CHECK(noisy.imaginarity_l1 ==
                      doctest::Approx(att * clean.imaginarity_l1).epsilon(1e-12));
                CHECK(noisy.steering ==
                      doctest::Approx(att * att * clean.steering).epsilon(1e-12));
                CHECK(noisy.texture_tr == doctest::Approx(clean.texture_tr).epsilon(1e-14));
            }

            const ResourceReport dead = noisy_resources(p, t, 0.5);
            CHECK(dead.concurrence == 0.0);
            CHECK(std::abs(dead.steering) < 1e-12);
            CHECK(std::abs(dead.bell) < 1e-12);
            CHECK(dead.coherence_l1 < 1e-12);
            CHECK(dead.imaginarity_l1 < 1e-12);
            CHECK(dead.texture_tr == doctest::Approx(clean.texture_tr).epsilon(1e-14));
        }
    }
}

TEST_CASE("noisy gram matrix keeps the dressed sector pattern") {
    for (double g : {0.0, 0.2, 0.35}) {
        const EvolvedState st = evolve_closed_form(kDetuned, 4.2);
        const auto gram = correlation_matrix(noisy_state(kDetuned, 4.2, g)).gram();
        const double att = NoiseParams{g}.attenuation();
        const double planar = 4.0 * att * att * std::norm(st.c01) * std::norm(st.c10);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double expected = 0.0;
                if (i == j) expected = (i == 2) ? 1.0 : planar;
                CHECK(std::abs(gram[i][j] - expected) < 1e-12);
            }
    }
}

TEST_CASE("noisy capacity relations: invariance, dressed identities, gamma cases") {
    for (const HamiltonianParams& p : {kRef, kDetuned}) {
        const ComplexMatrix h_b = battery_hamiltonian(p);
        for (double t : {0.0, 2.7, 5.005, 33.0}) {
            const double clean_capacity = capacity_spectral(battery_state(p, t), h_b);
            for (double g : {0.0, 0.1, 0.3, 0.45}) {
                const double noisy_capacity = capacity_spectral(
                    partial_trace(noisy_state(p, t, g), Subsystem::Battery), h_b);
                CHECK(std::abs(noisy_capacity - clean_capacity) < 1e-12);

                for (const NoisyRelationCheck& check : noisy_capacity_relations(p, t, g)) {
                    CHECK_FALSE(check.skipped);
                    CHECK(check.residual() < 1e-9);
                }
            }

            // gamma = 1/2: texture relation still holds, dressed ones are skipped
            int skipped = 0;
            for (const NoisyRelationCheck& check : noisy_capacity_relations(p, t, 0.5)) {
                if (check.skipped) {
                    ++skipped;
                    continue;
                }
                CHECK(check.residual() < 1e-9);
            }
            CHECK(skipped == 4);
        }
    }

    CHECK_THROWS_AS(noisy_inverse_relation_residual("entanglement_dressed", kRef, 2.0, 0.5),
                    GammaAtHalf);
    CHECK(noisy_inverse_relation_residual("entanglement_dressed", kRef, 2.0, 0.3) < 1e-9);
    CHECK_THROWS_AS(noisy_inverse_relation_residual("nonsense", kRef, 2.0, 0.3),
                    UnknownRelation);
}

TEST_CASE("gamma = 0 reduces every dressed relation to its noiseless theorem") {
    for (double t : {1.1, 5.005, 12.0}) {
        const double capacity =
            capacity_spectral(battery_state(kDetuned, t), battery_hamiltonian(kDetuned));
        const ResourceReport clean = noisy_resources(kDetuned, t, 0.0);
        const double two_wb = 2.0 * kDetuned.omega_b;

        for (const NoisyRelationCheck& check : noisy_capacity_relations(kDetuned, t, 0.0)) {
            if (check.name == "entanglement_dressed")
                CHECK(check.rhs == doctest::Approx(two_wb * std::sqrt(1.0 - clean.concurrence *
                                                                                clean.concurrence))
                                       .epsilon(1e-12));
            if (check.name == "steering_dressed")
                CHECK(check.rhs ==
                      doctest::Approx(two_wb * std::sqrt(1.0 - 0.5 * clean.steering))
                          .epsilon(1e-12));
            CHECK(check.lhs == doctest::Approx(capacity).epsilon(1e-12));
            CHECK(check.residual() < 1e-9);
        }
    }
}
