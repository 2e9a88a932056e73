#pragma once

// Test-only oracles, deliberately independent of the library code paths
// they are used to check.

#include <cstdint>

#include "triwell/fock.hpp"
#include "triwell/haar.hpp"
#include "triwell/measures.hpp"
#include "triwell/su3.hpp"

namespace triwell::testing {

// Matrix exponential by plain power series with scaling and squaring.
inline Eigen::Matrix3cd expm_series(const Eigen::Matrix3cd& m) {
    int squarings = 0;
    Eigen::Matrix3cd scaled = m;
    while (scaled.cwiseAbs().maxCoeff() > 0.5) {
        scaled /= 2.0;
        ++squarings;
    }
    Eigen::Matrix3cd result = Eigen::Matrix3cd::Identity();
    Eigen::Matrix3cd term = Eigen::Matrix3cd::Identity();
    for (int k = 1; k <= 30; ++k) {
        term = (term * scaled / static_cast<double>(k)).eval();
        result += term;
    }
    for (int i = 0; i < squarings; ++i) result = (result * result).eval();
    return result;
}

inline PureState random_antisymmetric_state(std::uint64_t seed, int n = 3, int d = 6) {
    GaussianStream g(seed);
    PureState raw(n, d);
    for (Eigen::Index i = 0; i < raw.dim_total(); ++i)
        raw.amplitudes()[i] = Complex(g.normal(), g.normal());
    return antisymmetrize(raw).normalized();
}

inline QubitState random_qubit_state(int n, std::uint64_t seed) {
    GaussianStream g(seed);
    Vector amp(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < amp.size(); ++i) amp[i] = Complex(g.normal(), g.normal());
    return QubitState(n, amp / amp.norm());
}

inline EulerAngles random_angles(std::uint64_t seed) {
    GaussianStream g(seed);
    EulerAngles a;
    a.theta[0] = g.uniform() * M_PI;
    a.theta[1] = g.uniform() * M_PI / 2.0;
    a.theta[2] = g.uniform() * M_PI;
    a.theta[3] = g.uniform() * M_PI / 2.0;
    a.theta[4] = g.uniform() * M_PI;
    a.theta[5] = g.uniform() * M_PI / 2.0;
    a.theta[6] = g.uniform() * M_PI;
    a.theta[7] = g.uniform() * 2.0 * M_PI;
    return a;
}

// Reduced density matrix of slot 1 by direct enumeration of index tuples,
// written without the library's flat-index machinery.
inline Matrix oracle_reduced_slot1(const PureState& state) {
    const int d = state.dim_single();
    const int n = state.n_particles();
    Matrix rho = Matrix::Zero(d, d);
    std::vector<int> rest(n - 1, 1);
    const auto advance = [&]() {
        for (int s = n - 2; s >= 0; --s) {
            if (++rest[s] <= d) return true;
            rest[s] = 1;
        }
        return false;
    };
    bool more = true;
    while (more) {
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j) {
                std::vector<int> left{i}, right{j};
                left.insert(left.end(), rest.begin(), rest.end());
                right.insert(right.end(), rest.begin(), rest.end());
                rho(i - 1, j - 1) += state.amplitude(left) * std::conj(state.amplitude(right));
            }
        more = advance();
    }
    return rho;
}

}  // namespace triwell::testing
