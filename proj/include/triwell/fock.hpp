#pragma once

#include <array>
#include <map>
#include <span>
#include <vector>

#include "triwell/types.hpp"

namespace triwell {

// Dense first-quantized state of N particles, each living in a d-dimensional
// single-particle space. Amplitudes are stored over the full tensor power
// d^N in row-major order with slot 1 as the most significant digit, and
// single-particle indices are 1-based so they line up with the site/spin
// labelling |1> = |a up>, |2> = |a dn>, |3> = |b up>, ...
class PureState {
public:
    PureState(int n_particles, int dim_single);
    PureState(int n_particles, int dim_single, Vector amplitudes);

    int n_particles() const { return n_particles_; }
    int dim_single() const { return dim_single_; }
    Eigen::Index dim_total() const { return amplitudes_.size(); }

    const Vector& amplitudes() const { return amplitudes_; }
    Vector& amplitudes() { return amplitudes_; }

    Eigen::Index flat_index(std::span<const int> indices) const;
    Complex amplitude(std::span<const int> indices) const;
    Complex amplitude(std::initializer_list<int> indices) const;
    void set_amplitude(std::span<const int> indices, Complex value);

    double norm() const { return amplitudes_.norm(); }
    double squared_norm() const { return amplitudes_.squaredNorm(); }
    PureState normalized() const;

    // True when every particle permutation acts as its sign, entrywise.
    bool is_antisymmetric(double tol = kAlgebraTol) const;

    // State with slots permuted: slot s of the result holds what slot
    // perm[s] held before (perm is 0-based over slots).
    PureState permuted(const std::vector<int>& perm) const;

    // (op x op x ... x op)|psi> for a d x d single-particle operator.
    PureState apply_single_particle(const Matrix& op) const;

private:
    int n_particles_;
    int dim_single_;
    Vector amplitudes_;
};

// |i1> x ... x |iN> as a PureState (1-based indices).
PureState product_state(const std::vector<int>& indices, int d);

// Antisymmetrized, normalized product of N distinct orthonormal
// single-particle states: (1/sqrt(N!)) sum_sigma sgn(sigma) P_sigma.
// Throws on duplicate indices ("Pauli violation") or indices out of 1..d.
PureState slater_determinant(const std::vector<int>& indices, int d);

// Applies the antisymmetrizer (1/sqrt(N!)) sum_sigma sgn(sigma) P_sigma.
// The result is exactly antisymmetric but may have any norm (zero for
// products with a repeated factor).
PureState antisymmetrize(const PureState& state);

double factorial(int n);

// Coefficients P_ijk of an antisymmetric 3-particle state (d = 6) over the
// ordered Slater basis: |psi> = sum_{i<j<k} P_ijk |sl_ijk>. Lookups with
// unordered indices return the signed coefficient.
class SlaterExpansion {
public:
    void set(int i, int j, int k, Complex value);
    // Signed coefficient for any index order; 0 for repeated indices.
    Complex coefficient(int i, int j, int k) const;
    const std::map<std::array<int, 3>, Complex>& coefficients() const { return coeffs_; }
    double squared_norm() const;
    double max_modulus() const;

private:
    std::map<std::array<int, 3>, Complex> coeffs_;
};

SlaterExpansion to_slater_expansion(const PureState& state);
PureState from_slater_expansion(const SlaterExpansion& expansion);

// Reduced density matrix (partial trace of |psi><psi|) over a 1-based list
// of kept subsystem slots, for arbitrary per-slot dimensions.
Matrix partial_trace(const Vector& amplitudes, const std::vector<int>& dims,
                     const std::vector<int>& keep);

class DensityMatrix {
public:
    explicit DensityMatrix(Matrix entries);
    Eigen::Index dim() const { return entries_.rows(); }
    const Matrix& entries() const { return entries_; }
    double purity() const;

private:
    Matrix entries_;
};

// keep: nonempty proper subset of particle slots, 1-based.
DensityMatrix reduced_density(const PureState& state, const std::vector<int>& keep);

// Orthogonal projector onto the subspace where every well holds exactly one
// particle. Sites pair up spin indices: site(i) = (i-1)/2, so d/2 wells.
class OnePerWellProjector {
public:
    OnePerWellProjector(int d, int n_particles);
    PureState apply(const PureState& state) const;
    const Eigen::VectorXd& mask() const { return mask_; }

private:
    int d_;
    int n_;
    Eigen::VectorXd mask_;
};

inline int site_of(int index) { return (index - 1) / 2; }
inline int spin_of(int index) { return (index - 1) % 2; }  // 0 = up, 1 = dn

}  // namespace triwell
