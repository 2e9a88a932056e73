#pragma once

#include <optional>

#include "triwell/fock.hpp"
#include "triwell/types.hpp"

namespace triwell {

// N distinguishable qubits, amplitudes over |q1 q2 ... qN> with up = 0,
// dn = 1 and qubit 1 most significant.
struct QubitState {
    int n_qubits = 0;
    Vector amplitudes;

    QubitState() = default;
    QubitState(int n, Vector amp);
    double norm() const { return amplitudes.norm(); }
};

struct MeasureReport {
    std::optional<double> c2;       // bipartite concurrence
    std::optional<double> c_n;      // multipartite qubit concurrence
    std::optional<double> tangle;   // 3-tangle
    std::optional<double> c_nf;     // fermionic multipartite concurrence
    std::optional<double> tau_f;    // 3-fermionic tangle
};

// sqrt(2 (1 - Tr rho_A^2)) for a pure bipartite state with local
// dimensions dim_a, dim_b. Throws if the input is not normalized.
double concurrence2(const Vector& amplitudes, int dim_a, int dim_b);
double concurrence2(const QubitState& state);   // two qubits
double concurrence2(const PureState& state);    // two particles, slot split

// 2^{1-N/2} sqrt((2^N - 2) - sum over all proper reductions of Tr rho^2).
double concurrenceN(const QubitState& state);

// Wootters concurrence of a two-qubit density matrix (spin-flip
// eigenvalue construction).
double mixed_concurrence2(const Matrix& rho);

// Residual 3-way entanglement tau = tau_{A(BC)} - tau_AB - tau_AC of a
// 3-qubit pure state, cross-checked internally against the Cayley
// hyperdeterminant route and clipped to [0, 1].
double tangle3(const QubitState& state);

// 4 |Det psi| with Det the degree-4 hyperdeterminant of the 2x2x2
// amplitude tensor. Independent of the reduction-based route above.
double tangle3_hyperdeterminant(const QubitState& state);

// Normalization constant alpha_N for the fermionic concurrence.
double fermionic_alpha(int n_particles, int d);

// sqrt(alpha_N [N - 1 - sum_n binom(N,n) Tr rho_n^2]) for an antisymmetric
// normalized state with (N, d) = (2, 4) or (3, 6). Zero exactly on Slater
// determinants.
double fermionic_concurrence(const PureState& state);

// 3-fermionic tangle of an antisymmetric 3-fermion state with d = 6,
// evaluated from its Slater coefficients P_ijk:
//   4 |[Tr(AB) - P123 P456]^2 - 4 Tr(A# B#) + 4 P123 det A + 4 P456 det B|
// where A, B collect cross coefficients and M# is the adjugate.
double fermionic_tangle(const SlaterExpansion& expansion);

// Adjugate via the explicit cofactor formula (A, B are often singular).
Eigen::Matrix3cd adjugate(const Eigen::Matrix3cd& m);

}  // namespace triwell
