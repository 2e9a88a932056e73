#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "triwell/fock.hpp"
#include "triwell/measures.hpp"
#include "triwell/types.hpp"

namespace triwell {

// Single-particle tunneling amplitudes t_{alpha beta} = <alpha|T|beta>
// between wells a, b, c (rows/columns in that order). Unitary by contract.
class TunnelingMatrix {
public:
    explicit TunnelingMatrix(const Eigen::Matrix3cd& entries);
    const Eigen::Matrix3cd& entries() const { return t_; }
    Complex t(int to_site, int from_site) const { return t_(to_site, from_site); }
    static TunnelingMatrix identity();

private:
    Eigen::Matrix3cd t_;
};

// Spin transition amplitudes s_{sigma sigma'} (rows/columns: up, dn).
class SpinFlip {
public:
    explicit SpinFlip(const Eigen::Matrix2cd& entries);
    const Eigen::Matrix2cd& entries() const { return s_; }
    static SpinFlip identity();

private:
    Eigen::Matrix2cd s_;
};

// Cubic monomials of the spin-flip entries that weight the two spin
// branches of the one-per-well component.
struct ZParams {
    Complex z1, z2, z3, z4, z5, z6;
    static ZParams of(const SpinFlip& s);
    Complex w_up() const { return z6 - z3; }  // weight of the single-dn branch
    Complex w_dn() const { return z5 - z4; }  // weight of the single-up branch
};

// Products of tunneling amplitudes for one, two, or three particles hopping
// between adjacent wells. The three pairwise differences sum to zero by
// construction: d3 is computed as -(d1 + d2).
struct EtaParams {
    Complex eta1, eta2, eta3;
    static EtaParams of(const TunnelingMatrix& t);
    Complex d1() const { return eta3 - eta2; }
    Complex d2() const { return eta2 - eta1; }
    Complex d3() const { return -(d1() + d2()); }
    // |d1|^2 + |d2|^2 + |d3|^2, the detection probability when no spin
    // flip is applied.
    double detection_probability() const;
};

enum class StateClass { kZero, kSlater, kWType, kGhzType, kOther };
const char* to_string(StateClass c);

struct ProtocolOutcome {
    double probability = 0.0;
    std::optional<PureState> final_state;
    SlaterExpansion final_expansion;  // empty when no final state
    EtaParams eta{};
    StateClass classification = StateClass::kZero;
    MeasureReport measures;
};

// A(|a up> x |b up> x |b dn>), the three-fermion initial state with only
// two wells populated.
PureState initial_state_three_well();

// (T x Sigma)^{x3} applied to the initial state. Stays a single Slater
// determinant since the evolution acts locally on each particle.
PureState evolve(const TunnelingMatrix& t, const SpinFlip& s);

struct ProjectedState {
    PureState state;  // unnormalized one-per-well component
    ZParams z;
    EtaParams eta;
};

// The one-per-well component assembled directly from its six-Slater closed
// form, bypassing the 216-dimensional evolution.
ProjectedState analytic_projected_state(const TunnelingMatrix& t, const SpinFlip& s);

// Full tunneling-plus-detection run: evolve, project onto one particle per
// well, normalize, classify, and measure.
ProtocolOutcome run_protocol(const TunnelingMatrix& t, const SpinFlip& s);

// Structural class of a (possibly unnormalized) one-per-well expansion.
// Coefficients are compared against kClassifyTol relative to the largest
// modulus. Two disjoint index triples make a GHZ-type state; three triples
// that pairwise share exactly one index make a W-type state.
StateClass classify_state(const SlaterExpansion& expansion);

// True when s_uu = 0 or s_du = 0, the condition under which the projected
// state collapses to a three-Slater W form for every tunneling matrix.
bool w_condition_check(const SpinFlip& s);

// sqrt((4/3)(1 - sum |r_i|^4)) with r_i the normalized eta differences.
// Throws when all differences vanish.
double w_concurrence_closed_form(const EtaParams& eta);

// Two-fermion variant in a double well (d = 4): split from well a with
// tunneling probability p, then detect one particle per well.
struct TwoWellOutcome {
    double probability = 0.0;
    std::optional<PureState> final_state;
    MeasureReport measures;  // c_nf of the fermion pair, c2 of the frozen qubits
};
TwoWellOutcome two_well_protocol(double p);

struct ScanFailure {
    Eigen::Matrix3cd t;
    Eigen::Matrix2cd s;
    StateClass classification;
    const char* reason;  // "ghz_type" or "eta_count"
};

struct ScanReport {
    long samples = 0;  // total pairs evaluated (random plus structured)
    std::uint64_t seed = 0;
    long count_zero = 0, count_slater = 0, count_w = 0, count_ghz = 0, count_other = 0;
    std::vector<ScanFailure> failures;
    double max_tau_f_other = 0.0;  // largest 3-fermionic tangle seen on OTHER outcomes
    bool ok() const { return failures.empty(); }
};

// Runs the protocol over n_samples Haar-random (T, Sigma) pairs plus a
// deterministic structured grid (spin flips with a zero entry, permutation
// tunneling matrices with phase patterns). Records any GHZ-type outcome as
// a failure, and checks that the count of nonvanishing eta differences is
// never exactly one. Deterministic for a given seed.
ScanReport ghz_no_go_scan(long n_samples, std::uint64_t seed);

}  // namespace triwell
