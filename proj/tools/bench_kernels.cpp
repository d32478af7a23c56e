// Wall-clock comparison of the serial reference path against the OpenMP path
// for the two scan-heavy workloads: a pointwise identity over a dense time
// grid and the seeded X-state subadditivity batch. Verdicts must match
// bitwise between the two paths; the run fails loudly if they do not.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qbcap/relations.hpp"

using namespace qbcap;
using relations::GridSpec;
using relations::RelationId;
using relations::RelationVerdict;

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

bool identical(const RelationVerdict& a, const RelationVerdict& b) {
    return a.max_residual == b.max_residual && a.samples == b.samples && a.pass == b.pass &&
           a.worst.t == b.worst.t && a.worst.gamma == b.worst.gamma &&
           a.worst.params.omega_b == b.worst.params.omega_b &&
           a.worst.params.omega_c == b.worst.params.omega_c &&
           a.worst.params.j1 == b.worst.params.j1 && a.worst.params.j2 == b.worst.params.j2;
}

int bench_one(RelationId id, const GridSpec& grid) {
    const double t0 = now_seconds();
    const RelationVerdict serial = relations::verify(id, grid, 1e-9, Execution::Serial);
    const double t1 = now_seconds();
    const RelationVerdict parallel = relations::verify(id, grid, 1e-9, Execution::Parallel);
    const double t2 = now_seconds();

    const double serial_s = t1 - t0;
    const double parallel_s = t2 - t1;
    const bool match = identical(serial, parallel);
    std::printf("%-22s samples=%-8zu serial=%8.3fs parallel=%8.3fs speedup=%5.2fx %s\n",
                std::string(relations::relation_name(id)).c_str(), serial.samples, serial_s,
                parallel_s, serial_s / parallel_s, match ? "verdicts-match" : "MISMATCH");
    return match ? 0 : 1;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP: both paths run serially\n");
#endif

    GridSpec grid;
    grid.time_samples = 800; // denser grid so the timing is worth reading
    grid.xstate_samples = 40000;

    int rc = 0;
    rc |= bench_one(RelationId::Thm1Entanglement, grid);
    rc |= bench_one(RelationId::Thm2Subadditivity, grid);
    rc |= bench_one(RelationId::AppBFamily, grid);
    return rc;
}
