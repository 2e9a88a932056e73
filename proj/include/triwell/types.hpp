#pragma once

#include <complex>
#include <Eigen/Dense>

namespace triwell {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Tolerance for algebraic identities (unitarity, antisymmetry, norms).
inline constexpr double kAlgebraTol = 1e-12;
// Tolerance for "is this coefficient zero" classification decisions.
inline constexpr double kClassifyTol = 1e-10;
// Normalization tolerance accepted by entanglement measures.
inline constexpr double kNormTol = 1e-9;

inline bool is_unitary(const Matrix& m, double tol = kAlgebraTol) {
    Matrix delta = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
    return delta.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace triwell
