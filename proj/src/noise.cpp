#include "qbcap/noise.hpp"

#include <cmath>

#include "qbcap/capacity.hpp"

namespace qbcap {

void NoiseParams::validate() const {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw GammaOutOfRange("gamma must lie in [0, 1]");
}

std::vector<ComplexMatrix> dephasing_kraus(double gamma) {
    NoiseParams{gamma}.validate();
    const ComplexMatrix id = ComplexMatrix::identity(2);
    const ComplexMatrix z = pauli_z();
    const double root = std::sqrt(gamma * (1.0 - gamma));

    std::vector<ComplexMatrix> ks;
    ks.push_back(cplx(1.0 - gamma) * kron(id, id));
    ks.push_back(cplx(root) * kron(id, z));
    ks.push_back(cplx(root) * kron(z, id));
    ks.push_back(cplx(gamma) * kron(z, z));
    return ks;
}

DensityOperator noisy_state(const HamiltonianParams& params, double t, double gamma) {
    NoiseParams noise{gamma};
    noise.validate();
    const EvolvedState st = evolve_closed_form(params, t);

    ComplexMatrix m(4);
    m(1, 1) = std::norm(st.c01);
    m(2, 2) = std::norm(st.c10);
    m(1, 2) = noise.attenuation() * st.c01 * std::conj(st.c10);
    m(2, 1) = std::conj(m(1, 2));
    return DensityOperator::validated(std::move(m));
}

ResourceReport noisy_resources(const HamiltonianParams& params, double t, double gamma) {
    NoiseParams noise{gamma};
    noise.validate();
    const EvolvedState st = evolve_closed_form(params, t);
    const DensityOperator rho = noisy_state(params, t, gamma);
    const DensityOperator battery = partial_trace(rho, Subsystem::Battery);

    ResourceReport r;
    r.concurrence = noise.attenuation() * 2.0 * std::abs(st.c01) * std::abs(st.c10);
    r.steering = steering_f3(rho);
    r.bell = bell_chsh(rho);
    r.coherence_l1 = coherence_l1(rho);
    r.imaginarity_l1 = imaginarity_l1(rho);
    r.texture_tr = texture_tr(battery);
    return r;
}

namespace {

struct DressedContext {
    double capacity = 0.0; // C(noisy battery state; H_b), equals the noiseless value
    double two_wb = 0.0;
    double attenuation = 0.0;
    double re_cross = 0.0; // Re(c01 conj(c10))
    ResourceReport measures;
};

DressedContext dressed_context(const HamiltonianParams& params, double t, double gamma) {
    DressedContext ctx;
    const EvolvedState st = evolve_closed_form(params, t);
    const DensityOperator rho = noisy_state(params, t, gamma);
    ctx.capacity =
        capacity_spectral(partial_trace(rho, Subsystem::Battery), battery_hamiltonian(params));
    ctx.two_wb = 2.0 * params.omega_b;
    ctx.attenuation = NoiseParams{gamma}.attenuation();
    ctx.re_cross = (st.c01 * std::conj(st.c10)).real();
    ctx.measures = noisy_resources(params, t, gamma);
    return ctx;
}

// Inner expression under the square root of each dressed trade-off.
double dressed_inner(const std::string& name, const DressedContext& ctx) {
    const double a2 = ctx.attenuation * ctx.attenuation;
    const ResourceReport& m = ctx.measures;
    if (name == "entanglement_dressed") return 1.0 - m.concurrence * m.concurrence / a2;
    if (name == "steering_dressed") return 1.0 - m.steering / (2.0 * a2);
    if (name == "bell_dressed") return 1.0 - (m.bell + 0.25 * m.bell * m.bell) / a2;
    if (name == "coherence_imaginarity_dressed")
        return 1.0 - (4.0 * a2 * ctx.re_cross * ctx.re_cross +
                      m.imaginarity_l1 * m.imaginarity_l1) /
                         a2;
    throw UnknownRelation("unknown dressed relation: " + name);
}

// Both sides vanish together at maximal entanglement; the squared form of
// the identity stays conditioned there and the division keeps energy units.
double trade_off_residual(double capacity, double inner, double two_wb) {
    return std::abs(capacity * capacity - two_wb * two_wb * inner) / (2.0 * two_wb);
}

NoisyRelationCheck make_trade_off(const std::string& name, double inner,
                                  const DressedContext& ctx) {
    NoisyRelationCheck c;
    c.name = name;
    c.lhs = ctx.capacity;
    c.rhs = ctx.two_wb * clamped_sqrt(inner);
    c.deviation = trade_off_residual(ctx.capacity, inner, ctx.two_wb);
    return c;
}

const char* const kDressedNames[] = {"entanglement_dressed", "steering_dressed", "bell_dressed",
                                     "coherence_imaginarity_dressed"};

} // namespace

std::vector<NoisyRelationCheck> noisy_capacity_relations(const HamiltonianParams& params, double t,
                                                         double gamma) {
    NoiseParams noise{gamma};
    noise.validate();
    const DressedContext ctx = dressed_context(params, t, gamma);
    const bool at_half = noise.attenuation() == 0.0;

    std::vector<NoisyRelationCheck> checks;
    {
        NoisyRelationCheck c;
        c.name = "capacity_invariant";
        c.lhs = ctx.capacity;
        c.rhs = capacity_spectral(battery_state(params, t), battery_hamiltonian(params));
        c.deviation = std::abs(c.lhs - c.rhs);
        checks.push_back(std::move(c));
    }
    for (const char* name : kDressedNames) {
        if (at_half) {
            NoisyRelationCheck c;
            c.name = name;
            c.lhs = ctx.capacity;
            c.skipped = true;
            checks.push_back(std::move(c));
        } else {
            checks.push_back(make_trade_off(name, dressed_inner(name, ctx), ctx));
        }
    }
    const double texture_inner =
        4.0 * ctx.measures.texture_tr * ctx.measures.texture_tr - 1.0;
    checks.push_back(make_trade_off("texture_noise_free", texture_inner, ctx));
    return checks;
}

double noisy_inverse_relation_residual(const std::string& name, const HamiltonianParams& params,
                                       double t, double gamma) {
    NoiseParams noise{gamma};
    noise.validate();
    if (noise.attenuation() == 0.0)
        throw GammaAtHalf("attenuated relations are singular at gamma = 1/2");
    const DressedContext ctx = dressed_context(params, t, gamma);
    return trade_off_residual(ctx.capacity, dressed_inner(name, ctx), ctx.two_wb);
}

} // namespace qbcap
