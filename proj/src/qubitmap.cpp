#include "triwell/qubitmap.hpp"

#include <cmath>
#include <stdexcept>

#include "triwell/protocol.hpp"

namespace triwell {

namespace {

void check_in_subspace(const PureState& state, const OnePerWellProjector& projector) {
    PureState projected = projector.apply(state);
    const double residual = state.squared_norm() - projected.squared_norm();
    if (residual > kClassifyTol)
        throw std::invalid_argument("state has support outside the one-per-well subspace");
    if (std::abs(state.norm() - 1.0) > kNormTol)
        throw std::invalid_argument("freeze requires a normalized state");
}

}  // namespace

QubitState freeze(const PureState& state) {
    if (state.n_particles() != 3 || state.dim_single() != 6)
        throw std::invalid_argument("freeze requires 3 particles with d = 6");
    static const OnePerWellProjector projector(6, 3);
    check_in_subspace(state, projector);
    // Site-ordered index triples are index-ordered, so the expansion
    // coefficient on (a, b, c) is the qubit amplitude as-is.
    SlaterExpansion expansion = to_slater_expansion(state);
    Vector amp(8);
    for (int sa = 0; sa < 2; ++sa)
        for (int sb = 0; sb < 2; ++sb)
            for (int sc = 0; sc < 2; ++sc)
                amp[4 * sa + 2 * sb + sc] = expansion.coefficient(1 + sa, 3 + sb, 5 + sc);
    return QubitState(3, std::move(amp));
}

QubitState freeze_pair(const PureState& state) {
    if (state.n_particles() != 2 || state.dim_single() != 4)
        throw std::invalid_argument("freeze_pair requires 2 particles with d = 4");
    static const OnePerWellProjector projector(4, 2);
    check_in_subspace(state, projector);
    const double root2 = std::sqrt(2.0);
    Vector amp(4);
    for (int sa = 0; sa < 2; ++sa)
        for (int sb = 0; sb < 2; ++sb)
            amp[2 * sa + sb] = root2 * state.amplitude({1 + sa, 3 + sb});
    return QubitState(2, std::move(amp));
}

IdentityReport verify_measure_identity(const PureState& state) {
    IdentityReport report;
    SlaterExpansion expansion = to_slater_expansion(state);
    QubitState frozen = freeze(state);
    report.c3f = fermionic_concurrence(state);
    report.c3 = concurrenceN(frozen);
    report.ratio = report.c3 / kC3Max;
    report.tau = tangle3(frozen);
    report.tau_f = fermionic_tangle(expansion);
    report.identity_ok = std::abs(report.c3f - report.ratio) <= kClassifyTol;
    if (classify_state(expansion) == StateClass::kWType)
        report.identity_ok = report.identity_ok && report.tau <= kClassifyTol &&
                             report.tau_f <= kClassifyTol;
    return report;
}

}  // namespace triwell
