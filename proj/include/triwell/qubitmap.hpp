#pragma once

#include "triwell/fock.hpp"
#include "triwell/measures.hpp"

namespace triwell {

// Maps a one-per-well three-fermion state to the three distinguishable
// qubits held by agents at wells a, b, c: the Slater coefficient on the
// site-ordered triple (including its sign) becomes the qubit amplitude.
// Throws when the state has support outside the one-per-well subspace.
QubitState freeze(const PureState& state);

// Two-well analogue: one fermion per well of a double well (d = 4)
// becomes a pair of qubits.
QubitState freeze_pair(const PureState& state);

struct IdentityReport {
    double c3f = 0.0;    // fermionic multipartite concurrence
    double c3 = 0.0;     // qubit multipartite concurrence of the frozen state
    double ratio = 0.0;  // c3 / sqrt(3/2)
    double tau = 0.0;    // 3-tangle of the frozen state
    double tau_f = 0.0;  // 3-fermionic tangle
    bool identity_ok = false;
};

// Checks that freezing preserves the amount of entanglement:
// c3f = c3 / sqrt(3/2), and tau = tau_f = 0 for W-type states.
IdentityReport verify_measure_identity(const PureState& state);

// Largest value of the 3-qubit multipartite concurrence, reached by GHZ.
inline constexpr double kC3Max = 1.2247448713915890;  // sqrt(3/2)

}  // namespace triwell
