#include <doctest.h>

#include <algorithm>
#include <numbers>

#include "oracles.hpp"
#include "qbcap/dynamics.hpp"

using namespace qbcap;

TEST_CASE("integrate: a stationary initial state stays put") {
    // With j1 = 0 the Hamiltonian is diagonal, so |01><01| is a fixed point.
    const HamiltonianParams p{1.0, 0.7, 0.0, 0.4};
    const Trajectory traj = integrate(p, 10.0, 21);
    for (const DensityOperator& state : traj.states) {
        CHECK(std::abs(state(1, 1) - 1.0) < 1e-12);
        CHECK(std::abs(state(0, 0)) < 1e-12);
    }
}

TEST_CASE("integrate: grid shape and input validation") {
    const HamiltonianParams p{1.0, 1.0, 0.1, 0.1};
    const Trajectory traj = integrate(p, 5.0, 6);
    REQUIRE(traj.times.size() == 6);
    CHECK(traj.times.front() == 0.0);
    CHECK(traj.times.back() == doctest::Approx(5.0).epsilon(1e-15));
    for (size_t i = 1; i < traj.times.size(); ++i) CHECK(traj.times[i] > traj.times[i - 1]);

    CHECK_THROWS_AS(integrate(p, -1.0, 10), InvalidParams);
    CHECK_THROWS_AS(integrate(p, 10.0, 1), InvalidParams);
}

TEST_CASE("integrate: forced coarse substeps are rejected") {
    const HamiltonianParams stiff{2.0, 2.0, 1.0, 1.0};
    IntegrateOptions opts;
    opts.substeps_per_sample = 1;
    CHECK_THROWS_AS(integrate(stiff, 50.0, 3, opts), StepTooCoarse);
}

TEST_CASE("integrate: conserved quantities along the flow") {
    const HamiltonianParams p{1.0, 1.2, 0.5, 0.1};
    const Trajectory traj = integrate(p, 50.0, 200);
    CHECK(traj.max_hermitize_correction < 1e-9);
    for (const DensityOperator& state : traj.states) {
        CHECK(std::abs(trace(state.matrix()) - 1.0) < 1e-10);
        CHECK(std::abs(state.purity() - 1.0) < 1e-7);
    }
}

TEST_CASE("integrate: matches the closed form within trace distance 1e-6") {
    for (const HamiltonianParams p :
         {HamiltonianParams{1.0, 1.0, 0.1, 0.1}, HamiltonianParams{1.0, 1.2, 0.5, 1.0},
          HamiltonianParams{0.5, 2.0, 1.0, 0.0}}) {
        const Trajectory traj = integrate(p, 50.0, 101);
        double worst = 0.0;
        for (size_t i = 0; i < traj.times.size(); ++i)
            worst = std::max(worst,
                             trace_distance(traj.states[i], evolved_density(p, traj.times[i])));
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("integrate: reproduces the reference capacity at the first cross-check time") {
    const HamiltonianParams p{1.0, 1.0, 0.1, 0.1};
    const Trajectory traj = integrate(p, 50.0, 1000);
    const DensityOperator battery = partial_trace(traj.states[100], Subsystem::Battery);
    // capacity of a diagonal qubit against diag(-w, w) is 2w|p0 - p1|
    const double capacity =
        2.0 * p.omega_b * std::abs(battery(0, 0).real() - battery(1, 1).real());
    CHECK(capacity == doctest::Approx(1.0789).epsilon(5e-3));
}

TEST_CASE("energy series: endpoints and flip-flop-free conservation") {
    const HamiltonianParams p{1.0, 1.0, 0.1, 0.1};
    const double t_full = std::numbers::pi / (2.0 * p.j1);
    const Trajectory traj = integrate(p, t_full, 2);
    const std::vector<double> battery = battery_energy_series(traj, p);
    CHECK(battery.front() == doctest::Approx(-p.omega_b).epsilon(1e-10));
    CHECK(battery.back() == doctest::Approx(p.omega_b).epsilon(1e-6));

    const HamiltonianParams frozen{1.0, 0.8, 0.0, 1.0};
    const Trajectory still = integrate(frozen, 50.0, 100);
    for (const std::vector<double>& series :
         {battery_energy_series(still, frozen), charger_energy_series(still, frozen)}) {
        const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
        CHECK(*hi - *lo < 1e-9);
    }
}
