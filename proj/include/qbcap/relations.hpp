#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qbcap/grid_scan.hpp"
#include "qbcap/model.hpp"

namespace qbcap::relations {

/// One entry per verified equation; every implemented identity of the model
/// maps to exactly one id.
enum class RelationId {
    Thm1Entanglement,
    Thm2Subadditivity,
    Thm3Residual,
    Thm4Conservation,
    Thm5Steering,
    Thm6Bell,
    Thm7Coherence,
    Thm8Imaginarity,
    Thm9Texture,
    Thm10TextureResidual,
    XidSteeringOfE,
    XidBellOfE,
    XidCoherenceEqE,
    XidImagDecomp,
    XidTextureFamily,
    Tbl1Crosscheck,
    AppBFamily,
};

std::span<const RelationId> all_relations();
std::string_view relation_name(RelationId id);
RelationId relation_from_name(std::string_view name); // throws UnknownRelation

/// Cartesian parameter grid plus the seeded random-state budget. The same
/// spec and seed always reproduce the same verdicts bit for bit.
struct GridSpec {
    std::vector<double> omega_b{0.5, 1.0, 2.0};
    std::vector<double> omega_c{0.5, 1.0, 1.2, 2.0};
    std::vector<double> j1{0.1, 0.5, 1.0};
    std::vector<double> j2{0.0, 0.1, 1.0};
    std::vector<double> gammas{0.0, 0.1, 0.25, 0.4, 0.5};
    int time_samples = 200;
    double t_max = 50.0;
    int xstate_samples = 10000;
    std::uint64_t seed = 1;

    /// Negative-control hook for tests: inflate the named relation's
    /// reported residual by `corruption`.
    std::optional<RelationId> corrupt_relation;
    double corruption = 0.0;

    std::vector<HamiltonianParams> combos() const;
};

struct WorstCase {
    HamiltonianParams params;
    double t = 0.0;
    double gamma = 0.0;
};

struct RelationVerdict {
    RelationId relation{};
    std::size_t samples = 0;
    double max_residual = 0.0; // inequality relations report the worst violation, floored at 0
    double tolerance = 0.0;
    bool pass = false;
    WorstCase worst;
};

/// Tolerance actually applied: identities use `tol` as given; the
/// integrator cross-check keeps its 5e-3 floor (set by the integration
/// accuracy target, not by roundoff).
double effective_tolerance(RelationId id, double tol);

RelationVerdict verify(RelationId id, const GridSpec& grid, double tol,
                       Execution exec = Execution::Parallel);
std::vector<RelationVerdict> verify_many(std::span<const RelationId> ids, const GridSpec& grid,
                                         double tol, Execution exec = Execution::Parallel);
std::vector<RelationVerdict> verify_all(const GridSpec& grid, double tol = 1e-9,
                                        Execution exec = Execution::Parallel);

/// "name samples=... max_residual=... tolerance=... PASS/FAIL" with the
/// worst-case location appended on failure.
std::string format_verdict_line(const RelationVerdict& v);

} // namespace qbcap::relations
