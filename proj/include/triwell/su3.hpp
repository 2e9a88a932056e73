#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "triwell/protocol.hpp"
#include "triwell/types.hpp"

namespace triwell {

// Euler coordinates of a 3x3 unitary,
//   T = e^{i t1 L3} e^{i t2 L2} e^{i t3 L3} e^{i t4 L5}
//       e^{i t5 L3} e^{i t6 L2} e^{i t7 L3} e^{i t8 L8},
// with L the Gell-Mann matrices. Canonical ranges: t1, t3, t5, t7 in
// [0, pi); t2, t4, t6 in [0, pi/2]; t8 in [0, 2 pi).
struct EulerAngles {
    std::array<double, 8> theta{};  // theta[0] = t1, ..., theta[7] = t8

    double t(int k) const { return theta[k - 1]; }
    // The combination 2 (t3 + t5) the eta differences depend on.
    double theta_sum() const { return 2.0 * (theta[2] + theta[4]); }
};

// Standard Gell-Mann basis, l in 1..8: Hermitian, traceless,
// Tr(L_i L_j) = 2 delta_ij.
Eigen::Matrix3cd gell_mann(int l);

TunnelingMatrix euler_to_matrix(const EulerAngles& angles);

// (|eta3 - eta2|^2, |eta2 - eta1|^2, |eta1 - eta3|^2) in closed form; they
// depend only on t2, t4, t6 and theta = 2 (t3 + t5).
std::array<double, 3> eta_differences_closed_form(const EulerAngles& angles);

struct EqualCoefSolution {
    double theta4;
    double theta;  // 2 (t3 + t5)
};

// Angles (t4, theta) for which the three eta differences have equal
// modulus, given t2, t6 in the open interval (0, pi/2). Solved in the
// cleared polynomial form
//   cos t4 sin t6 cos 2t2 = -cos theta sin 2t2 cos t6,
// which stays regular at t2 = pi/4 where tan(2 t2) diverges. Empty when no
// admissible t4 in (0, pi/2) exists.
std::vector<EqualCoefSolution> solve_equal_coefficients(double theta2, double theta6);

enum class Cos2Theta3Branch { kPlus, kMinus };

// The one-parameter family of direction-symmetric tunneling matrices
// (|t_{ab}|^2 = |t_{ba}|^2) producing equal-modulus eta differences:
// t6 = t2, t1 = t5 = t7 = t8 = 0, with t3 and t4 pinned by t2.
struct SymmetricWSolution {
    double theta2;
    double theta3;
    double theta4;
    Cos2Theta3Branch branch;  // sign of cos 2 t3
    EulerAngles angles() const;
};

SymmetricWSolution symmetric_solution(double theta2);

// Builds the symmetric matrix from the explicit per-entry formulas
// (t_cc = cos t4, t_ab = -t_ba, ...), equal to euler_to_matrix of the
// corresponding angles.
TunnelingMatrix symmetric_matrix_entries(const SymmetricWSolution& sol);

struct CurvePoint {
    double theta2;
    double cos_theta4;
    double p_ab;  // = p_ac
    double p_bc;
    double p_aa;
    double p_bb;  // = p_cc
    double prob;  // detection probability
};

// Transition/permanence probabilities and detection probability along the
// symmetric family, from their closed forms. Every row is cross-checked
// against the explicit matrix entries and a full protocol run.
std::vector<CurvePoint> probability_curves(const std::vector<double>& theta2_grid);

// 2001 points on (0, pi/2), endpoints offset by 1e-6.
std::vector<double> default_theta2_grid(int n_points = 2001);

// CSV with header theta2,cos_theta4,p_ab,p_bc,p_aa,p_bb,P.
void write_curves_csv(std::ostream& out, const std::vector<CurvePoint>& rows);

}  // namespace triwell
