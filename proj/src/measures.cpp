#include "triwell/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace triwell {

namespace {

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
    return r;
}

void check_normalized(double norm) {
    if (std::abs(norm - 1.0) > kNormTol)
        throw std::invalid_argument("state is not normalized");
}

// Clip tiny negative round-off; anything beyond tolerance is a real bug.
double clip_unit_interval(double v, const char* what) {
    if (v < -kClassifyTol || v > 1.0 + kClassifyTol)
        throw std::logic_error(std::string(what) + " outside [0, 1]");
    return std::clamp(v, 0.0, 1.0);
}

// Square root of a radicand assembled from O(1) purities. Values below the
// algebraic tolerance are rounding residue of an identically-zero quantity;
// flooring them keeps sqrt from amplifying 1e-15 noise to 1e-8.
double sqrt_floored(double radicand, const char* what) {
    if (radicand < -kClassifyTol)
        throw std::logic_error(std::string(what) + " radicand is negative");
    if (radicand < kAlgebraTol) return 0.0;
    return std::sqrt(radicand);
}

}  // namespace

QubitState::QubitState(int n, Vector amp) : n_qubits(n), amplitudes(std::move(amp)) {
    if (n < 1) throw std::invalid_argument("need at least one qubit");
    if (amplitudes.size() != (Eigen::Index{1} << n))
        throw std::invalid_argument("qubit amplitude vector has wrong length");
}

double concurrence2(const Vector& amplitudes, int dim_a, int dim_b) {
    if (static_cast<Eigen::Index>(dim_a) * dim_b != amplitudes.size())
        throw std::invalid_argument("bipartite dimensions do not match amplitude length");
    check_normalized(amplitudes.norm());
    Matrix rho_a = partial_trace(amplitudes, {dim_a, dim_b}, {1});
    double purity = (rho_a * rho_a).trace().real();
    return sqrt_floored(2.0 * (1.0 - purity), "concurrence");
}

double concurrence2(const QubitState& state) {
    if (state.n_qubits != 2) throw std::invalid_argument("concurrence2 needs two qubits");
    return concurrence2(state.amplitudes, 2, 2);
}

double concurrence2(const PureState& state) {
    if (state.n_particles() != 2) throw std::invalid_argument("concurrence2 needs two subsystems");
    return concurrence2(state.amplitudes(), state.dim_single(), state.dim_single());
}

double concurrenceN(const QubitState& state) {
    const int n = state.n_qubits;
    if (n < 2) throw std::invalid_argument("concurrenceN needs at least two qubits");
    check_normalized(state.norm());
    std::vector<int> dims(n, 2);
    double purity_sum = 0.0;
    // every nonempty proper subset of qubits
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> keep;
        for (int q = 0; q < n; ++q)
            if (mask & (1u << q)) keep.push_back(q + 1);
        Matrix rho = partial_trace(state.amplitudes, dims, keep);
        purity_sum += (rho * rho).trace().real();
    }
    double val = (std::exp2(n) - 2.0) - purity_sum;
    return std::exp2(1.0 - 0.5 * n) * sqrt_floored(val, "multipartite concurrence");
}

double mixed_concurrence2(const Matrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("mixed_concurrence2 needs a 4x4 density matrix");
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    // sigma_y x sigma_y in the |00>,|01>,|10>,|11> basis
    yy(0, 3) = -1; yy(1, 2) = 1; yy(2, 1) = 1; yy(3, 0) = -1;
    Matrix rho_tilde = yy * rho.conjugate() * yy;
    // Hermitian route sqrt(rho) rho_tilde sqrt(rho): same spectrum as
    // rho rho_tilde but solvable at machine precision, so the structural
    // zero eigenvalues of rank-deficient reductions can be clipped cleanly.
    Eigen::SelfAdjointEigenSolver<Matrix> rho_eig(rho);
    Matrix sqrt_rho = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i)
        sqrt_rho += std::sqrt(std::max(0.0, rho_eig.eigenvalues()[i])) *
                    rho_eig.eigenvectors().col(i) * rho_eig.eigenvectors().col(i).adjoint();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sqrt_rho * rho_tilde * sqrt_rho);
    const double mu_max = std::max(0.0, solver.eigenvalues().maxCoeff());
    std::array<double, 4> lambda{};
    for (int i = 0; i < 4; ++i) {
        double mu = solver.eigenvalues()[i];
        lambda[i] = mu > kAlgebraTol * mu_max ? std::sqrt(mu) : 0.0;
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double tangle3_hyperdeterminant(const QubitState& state) {
    if (state.n_qubits != 3) throw std::invalid_argument("tangle3 needs three qubits");
    auto a = [&](int i, int j, int k) { return state.amplitudes[4 * i + 2 * j + k]; };
    Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                 a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                 a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                 a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
    Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                 a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                 a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                 a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                 a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                 a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
    Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                 a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
    return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

double tangle3(const QubitState& state) {
    if (state.n_qubits != 3) throw std::invalid_argument("tangle3 needs three qubits");
    check_normalized(state.norm());
    const std::vector<int> dims{2, 2, 2};
    Matrix rho_a = partial_trace(state.amplitudes, dims, {1});
    double tau_a_bc = 2.0 * (1.0 - (rho_a * rho_a).trace().real());
    double c_ab = mixed_concurrence2(partial_trace(state.amplitudes, dims, {1, 2}));
    double c_ac = mixed_concurrence2(partial_trace(state.amplitudes, dims, {1, 3}));
    double tau = clip_unit_interval(tau_a_bc - c_ab * c_ab - c_ac * c_ac, "3-tangle");
    double check = tangle3_hyperdeterminant(state);
    if (std::abs(tau - check) > 1e-9)
        throw std::logic_error("3-tangle routes disagree beyond tolerance");
    return tau;
}

double fermionic_alpha(int n_particles, int d) {
    double sum = 0.0;
    for (int n = 1; n <= n_particles - 1; ++n)
        sum += binom(n_particles, n) / binom(d, std::min(n, n_particles - n));
    return 1.0 / (n_particles - 1.0 - sum);
}

double fermionic_concurrence(const PureState& state) {
    const int n = state.n_particles();
    const int d = state.dim_single();
    if (!((n == 2 && d == 4) || (n == 3 && d == 6)))
        throw std::invalid_argument("fermionic concurrence defined for (N, d) = (2, 4) or (3, 6)");
    check_normalized(state.norm());
    if (!state.is_antisymmetric(1e-10))
        throw std::invalid_argument("fermionic concurrence needs an antisymmetric state");
    double purity_sum = 0.0;
    for (int k = 1; k <= n - 1; ++k) {
        std::vector<int> keep(k);
        for (int s = 0; s < k; ++s) keep[s] = s + 1;
        purity_sum += binom(n, k) * reduced_density(state, keep).purity();
    }
    double val = fermionic_alpha(n, d) * (n - 1.0 - purity_sum);
    return sqrt_floored(clip_unit_interval(val, "fermionic concurrence"),
                        "fermionic concurrence");
}

Eigen::Matrix3cd adjugate(const Eigen::Matrix3cd& m) {
    Eigen::Matrix3cd adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // cofactor of (j, i): the 2x2 minor with row j, column i removed
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
        }
    return adj;
}

double fermionic_tangle(const SlaterExpansion& expansion) {
    auto p = [&](int i, int j, int k) { return expansion.coefficient(i, j, k); };
    Eigen::Matrix3cd a, b;
    const int acol[3][2] = {{5, 6}, {6, 4}, {4, 5}};
    const int bcol[3][2] = {{2, 3}, {3, 1}, {1, 2}};
    for (int row = 0; row < 3; ++row)
        for (int col = 0; col < 3; ++col) {
            a(row, col) = p(row + 1, acol[col][0], acol[col][1]);
            b(row, col) = p(row + 4, bcol[col][0], bcol[col][1]);
        }
    Complex p123 = p(1, 2, 3), p456 = p(4, 5, 6);
    Complex tr_ab = (a * b).trace();
    Complex inv = (tr_ab - p123 * p456) * (tr_ab - p123 * p456) -
                  4.0 * (adjugate(a) * adjugate(b)).trace() +
                  4.0 * p123 * a.determinant() + 4.0 * p456 * b.determinant();
    return 4.0 * std::abs(inv);
}

}  // namespace triwell
