#include "triwell/su3.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "triwell/json_io.hpp"

namespace triwell {

namespace {

using Eigen::Matrix3cd;
const Complex kI(0.0, 1.0);

Matrix3cd exp_lambda3(double theta) {
    Matrix3cd m = Matrix3cd::Identity();
    m(0, 0) = std::exp(kI * theta);
    m(1, 1) = std::exp(-kI * theta);
    return m;
}

Matrix3cd exp_lambda2(double theta) {
    Matrix3cd m = Matrix3cd::Identity();
    m(0, 0) = std::cos(theta);
    m(0, 1) = std::sin(theta);
    m(1, 0) = -std::sin(theta);
    m(1, 1) = std::cos(theta);
    return m;
}

Matrix3cd exp_lambda5(double theta) {
    Matrix3cd m = Matrix3cd::Identity();
    m(0, 0) = std::cos(theta);
    m(0, 2) = std::sin(theta);
    m(2, 0) = -std::sin(theta);
    m(2, 2) = std::cos(theta);
    return m;
}

Matrix3cd exp_lambda8(double theta) {
    Matrix3cd m = Matrix3cd::Zero();
    const double w = theta / std::sqrt(3.0);
    m(0, 0) = std::exp(kI * w);
    m(1, 1) = std::exp(kI * w);
    m(2, 2) = std::exp(-2.0 * kI * w);
    return m;
}

void check_open_quadrant(double theta2, const char* name) {
    if (!(theta2 > 0.0 && theta2 < M_PI / 2.0))
        throw std::invalid_argument(std::string(name) + " must lie in the open interval (0, pi/2)");
}

}  // namespace

Eigen::Matrix3cd gell_mann(int l) {
    Matrix3cd m = Matrix3cd::Zero();
    switch (l) {
        case 1: m(0, 1) = 1; m(1, 0) = 1; break;
        case 2: m(0, 1) = -kI; m(1, 0) = kI; break;
        case 3: m(0, 0) = 1; m(1, 1) = -1; break;
        case 4: m(0, 2) = 1; m(2, 0) = 1; break;
        case 5: m(0, 2) = -kI; m(2, 0) = kI; break;
        case 6: m(1, 2) = 1; m(2, 1) = 1; break;
        case 7: m(1, 2) = -kI; m(2, 1) = kI; break;
        case 8:
            m(0, 0) = 1; m(1, 1) = 1; m(2, 2) = -2;
            m /= std::sqrt(3.0);
            break;
        default:
            throw std::out_of_range("Gell-Mann index must be in 1..8");
    }
    return m;
}

TunnelingMatrix euler_to_matrix(const EulerAngles& a) {
    Matrix3cd m = exp_lambda3(a.t(1)) * exp_lambda2(a.t(2)) * exp_lambda3(a.t(3)) *
                  exp_lambda5(a.t(4)) * exp_lambda3(a.t(5)) * exp_lambda2(a.t(6)) *
                  exp_lambda3(a.t(7)) * exp_lambda8(a.t(8));
    return TunnelingMatrix(m);
}

std::array<double, 3> eta_differences_closed_form(const EulerAngles& a) {
    const double t2 = a.t(2), t4 = a.t(4), t6 = a.t(6);
    const double theta = a.theta_sum();
    const double u = std::cos(t4) * std::sin(t6);
    const double v = std::cos(t6);
    const double x = u * v * std::sin(2.0 * t2) * std::cos(theta);
    const double s2 = std::sin(t2) * std::sin(t2);
    const double c2 = std::cos(t2) * std::cos(t2);
    const double s4sq = std::sin(t4) * std::sin(t4);
    const double d1 = c2 * s4sq * (x + u * u * c2 + v * v * s2);   // |eta3 - eta2|^2
    const double d2 = s2 * s4sq * (-x + u * u * s2 + v * v * c2);  // |eta2 - eta1|^2
    const double d3 = u * u * s4sq;                                // |eta1 - eta3|^2
    return {d1, d2, d3};
}

std::vector<EqualCoefSolution> solve_equal_coefficients(double theta2, double theta6) {
    if (!(theta2 > 0.0 && theta2 < M_PI / 2.0) || !(theta6 > 0.0 && theta6 < M_PI / 2.0))
        return {};  // boundary values make the coefficients collapse
    const double s22 = std::sin(2.0 * theta2);
    const double c22 = std::cos(2.0 * theta2);
    const double root = std::sqrt(4.0 - s22 * s22);  // = sqrt(3 + cos^2 2 t2)
    const double cos_t4 = (std::cos(theta6) / std::sin(theta6)) * s22 / root;
    if (cos_t4 >= 1.0) return {};  // no admissible t4 in (0, pi/2)
    const double cos_theta = -c22 / root;
    return {EqualCoefSolution{std::acos(cos_t4), std::acos(cos_theta)}};
}

EulerAngles SymmetricWSolution::angles() const {
    EulerAngles a;
    a.theta = {0.0, theta2, theta3, theta4, 0.0, theta2, 0.0, 0.0};
    return a;
}

SymmetricWSolution symmetric_solution(double theta2) {
    check_open_quadrant(theta2, "theta2");
    const double c22 = std::cos(2.0 * theta2);
    const double root = std::sqrt(3.0 + c22 * c22);
    const double cos_t4 = 2.0 * std::cos(theta2) * std::cos(theta2) / root;
    // The sign of cos 2 t3 is opposite to cos 2 t2: the other branch
    // would force cos t4 < 0, which is outside the allowed range.
    const double cos_2t3 = -c22 / root;
    SymmetricWSolution sol;
    sol.theta2 = theta2;
    sol.theta3 = 0.5 * std::acos(cos_2t3);
    sol.theta4 = std::acos(cos_t4);
    sol.branch = cos_2t3 >= 0.0 ? Cos2Theta3Branch::kPlus : Cos2Theta3Branch::kMinus;
    return sol;
}

TunnelingMatrix symmetric_matrix_entries(const SymmetricWSolution& sol) {
    const double c2 = std::cos(sol.theta2), s2 = std::sin(sol.theta2);
    const double c4 = std::cos(sol.theta4), s4 = std::sin(sol.theta4);
    const Complex ep = std::exp(kI * sol.theta3);
    const Complex em = std::exp(-kI * sol.theta3);
    const Complex t_cc = c4;
    const Complex t_aa = ep * t_cc * c2 * c2 - em * s2 * s2;
    const Complex t_bb = em * c2 * c2 - ep * t_cc * s2 * s2;
    const Complex t_ab = c2 * s2 * (em + t_cc * ep);
    const Complex t_ac = ep * c2 * s4;
    const Complex t_bc = -ep * s2 * s4;
    Matrix3cd m;
    m << t_aa, t_ab, t_ac,
        -t_ab, t_bb, t_bc,
        -em * t_ac, em * t_bc, t_cc;
    return TunnelingMatrix(m);
}

std::vector<double> default_theta2_grid(int n_points) {
    if (n_points < 2) throw std::invalid_argument("grid needs at least two points");
    const double lo = 1e-6, hi = M_PI / 2.0 - 1e-6;
    std::vector<double> grid(n_points);
    for (int i = 0; i < n_points; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / (n_points - 1);
    return grid;
}

std::vector<CurvePoint> probability_curves(const std::vector<double>& theta2_grid) {
    std::vector<CurvePoint> rows;
    rows.reserve(theta2_grid.size());
    const SpinFlip identity = SpinFlip::identity();
    for (double t2 : theta2_grid) {
        check_open_quadrant(t2, "theta2");
        const double s22 = std::sin(2.0 * t2);
        const double c42 = std::cos(4.0 * t2);
        const double s = std::sin(t2), c = std::cos(t2);
        CurvePoint row;
        row.theta2 = t2;
        row.p_ab = s22 * s22 / (4.0 - s22 * s22);
        row.p_bc = s * s * s * s / (1.0 - s * s * c * c);
        row.p_bb = 8.0 * c * c * c * c / (7.0 + c42);
        row.p_aa = (5.0 + 3.0 * c42) / (7.0 + c42);
        row.prob = 12.0 * s22 * s22 * s22 * s22 / ((7.0 + c42) * (7.0 + c42));

        const SymmetricWSolution sol = symmetric_solution(t2);
        row.cos_theta4 = std::cos(sol.theta4);
        const TunnelingMatrix tm = symmetric_matrix_entries(sol);
        const auto& m = tm.entries();
        const double checks[6] = {
            std::norm(m(0, 1)) - row.p_ab, std::norm(m(0, 2)) - row.p_ab,
            std::norm(m(1, 2)) - row.p_bc, std::norm(m(1, 1)) - row.p_bb,
            std::norm(m(2, 2)) - row.p_bb, std::norm(m(0, 0)) - row.p_aa,
        };
        for (double err : checks)
            if (std::abs(err) > kAlgebraTol)
                throw std::logic_error("curve closed form disagrees with matrix entries");
        if (std::abs(run_protocol(tm, identity).probability - row.prob) > kAlgebraTol)
            throw std::logic_error("curve closed form disagrees with simulated probability");
        rows.push_back(row);
    }
    return rows;
}

void write_curves_csv(std::ostream& out, const std::vector<CurvePoint>& rows) {
    out << "theta2,cos_theta4,p_ab,p_bc,p_aa,p_bb,P\n";
    for (const CurvePoint& r : rows)
        out << format_double(r.theta2) << ',' << format_double(r.cos_theta4) << ','
            << format_double(r.p_ab) << ',' << format_double(r.p_bc) << ','
            << format_double(r.p_aa) << ',' << format_double(r.p_bb) << ','
            << format_double(r.prob) << '\n';
}

}  // namespace triwell
