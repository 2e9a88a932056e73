#include "triwell/protocol.hpp"

#include <cmath>
#include <stdexcept>

#include "triwell/haar.hpp"
#include "triwell/qubitmap.hpp"

namespace triwell {

namespace {

void require_unitary(const Matrix& m, const char* what) {
    if (!is_unitary(m)) throw std::invalid_argument(std::string(what) + " is not unitary");
}

}  // namespace

TunnelingMatrix::TunnelingMatrix(const Eigen::Matrix3cd& entries) : t_(entries) {
    require_unitary(t_, "tunneling matrix");
}

TunnelingMatrix TunnelingMatrix::identity() {
    return TunnelingMatrix(Eigen::Matrix3cd::Identity());
}

SpinFlip::SpinFlip(const Eigen::Matrix2cd& entries) : s_(entries) {
    require_unitary(s_, "spin-flip matrix");
}

SpinFlip SpinFlip::identity() { return SpinFlip(Eigen::Matrix2cd::Identity()); }

ZParams ZParams::of(const SpinFlip& flip) {
    const auto& s = flip.entries();
    const Complex suu = s(0, 0), sud = s(0, 1), sdu = s(1, 0), sdd = s(1, 1);
    return ZParams{
        suu * suu * sud,  // z1
        sdu * sdu * sdd,  // z2
        suu * sud * sdu,  // z3
        sdd * sdu * suu,  // z4
        sdu * sdu * sud,  // z5
        suu * suu * sdd,  // z6
    };
}

EtaParams EtaParams::of(const TunnelingMatrix& tm) {
    const auto& t = tm.entries();
    // sites: a = 0, b = 1, c = 2
    return EtaParams{
        t(0, 0) * t(1, 1) * t(2, 1),  // one hop: b -> c
        t(2, 0) * t(0, 1) * t(1, 1),  // two hops: b -> a, a -> c
        t(1, 0) * t(0, 1) * t(2, 1),  // three hops: a -> b, b -> a, b -> c
    };
}

double EtaParams::detection_probability() const {
    return std::norm(d1()) + std::norm(d2()) + std::norm(d3());
}

const char* to_string(StateClass c) {
    switch (c) {
        case StateClass::kZero: return "zero";
        case StateClass::kSlater: return "slater";
        case StateClass::kWType: return "w_type";
        case StateClass::kGhzType: return "ghz_type";
        case StateClass::kOther: return "other";
    }
    return "other";
}

PureState initial_state_three_well() {
    return antisymmetrize(product_state({1, 3, 4}, 6));
}

PureState evolve(const TunnelingMatrix& t, const SpinFlip& s) {
    Matrix u = Matrix::Zero(6, 6);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y)
                    u(2 * a + x, 2 * b + y) = t.entries()(a, b) * s.entries()(x, y);
    return initial_state_three_well().apply_single_particle(u);
}

ProjectedState analytic_projected_state(const TunnelingMatrix& t, const SpinFlip& s) {
    ZParams z = ZParams::of(s);
    EtaParams eta = EtaParams::of(t);
    PureState out(3, 6);
    struct Term {
        Complex weight;
        std::array<int, 3> up;  // triple multiplying w_up
        std::array<int, 3> dn;  // triple multiplying w_dn
    };
    const Term terms[3] = {
        {eta.d1(), {2, 3, 5}, {1, 4, 6}},
        {eta.d2(), {1, 4, 5}, {2, 3, 6}},
        {eta.d3(), {1, 3, 6}, {2, 4, 5}},
    };
    for (const Term& term : terms) {
        out.amplitudes() += term.weight * z.w_up() *
            slater_determinant({term.up[0], term.up[1], term.up[2]}, 6).amplitudes();
        out.amplitudes() += term.weight * z.w_dn() *
            slater_determinant({term.dn[0], term.dn[1], term.dn[2]}, 6).amplitudes();
    }
    return ProjectedState{std::move(out), z, eta};
}

StateClass classify_state(const SlaterExpansion& expansion) {
    const double max_mod = expansion.max_modulus();
    if (max_mod == 0.0) return StateClass::kZero;
    std::vector<std::array<int, 3>> triples;
    for (const auto& [key, value] : expansion.coefficients())
        if (std::abs(value) > kClassifyTol * max_mod) triples.push_back(key);

    auto shared = [](const std::array<int, 3>& x, const std::array<int, 3>& y) {
        int count = 0;
        for (int i : x)
            for (int j : y)
                if (i == j) ++count;
        return count;
    };

    switch (triples.size()) {
        case 0: return StateClass::kZero;
        case 1: return StateClass::kSlater;
        case 2:
            return shared(triples[0], triples[1]) == 0 ? StateClass::kGhzType
                                                       : StateClass::kOther;
        case 3:
            if (shared(triples[0], triples[1]) == 1 && shared(triples[0], triples[2]) == 1 &&
                shared(triples[1], triples[2]) == 1)
                return StateClass::kWType;
            return StateClass::kOther;
        default:
            return StateClass::kOther;
    }
}

ProtocolOutcome run_protocol(const TunnelingMatrix& t, const SpinFlip& s) {
    static const OnePerWellProjector projector(6, 3);
    ProtocolOutcome outcome;
    outcome.eta = EtaParams::of(t);
    PureState projected = projector.apply(evolve(t, s));
    outcome.probability = projected.squared_norm();
    if (outcome.probability < kClassifyTol) {
        outcome.classification = StateClass::kZero;
        return outcome;
    }
    PureState final_state = projected.normalized();
    outcome.final_expansion = to_slater_expansion(final_state);
    outcome.classification = classify_state(outcome.final_expansion);
    outcome.measures.c_nf = fermionic_concurrence(final_state);
    outcome.measures.tau_f = fermionic_tangle(outcome.final_expansion);
    outcome.final_state = std::move(final_state);
    return outcome;
}

bool w_condition_check(const SpinFlip& s) {
    return std::abs(s.entries()(0, 0)) <= kAlgebraTol ||
           std::abs(s.entries()(1, 0)) <= kAlgebraTol;
}

double w_concurrence_closed_form(const EtaParams& eta) {
    const double p = eta.detection_probability();
    if (p <= 0.0) throw std::invalid_argument("empty W state: all eta differences vanish");
    double quartic_sum = 0.0;
    for (Complex d : {eta.d1(), eta.d2(), eta.d3()}) {
        double r2 = std::norm(d) / p;
        quartic_sum += r2 * r2;
    }
    const double radicand = (4.0 / 3.0) * (1.0 - quartic_sum);
    if (radicand < kAlgebraTol) return 0.0;  // same rounding floor as the general formula
    return std::sqrt(radicand);
}

TwoWellOutcome two_well_protocol(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("tunneling probability outside [0, 1]");
    // Splitting acts on |a sigma> as sqrt(1-p)|a sigma> + sqrt(p)|b sigma>;
    // the |b sigma> column is the real orthogonal completion.
    Eigen::Matrix2cd spatial;
    spatial << std::sqrt(1.0 - p), -std::sqrt(p),
               std::sqrt(p),       std::sqrt(1.0 - p);
    Matrix u = Matrix::Zero(4, 4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int x = 0; x < 2; ++x)
                u(2 * a + x, 2 * b + x) = spatial(a, b);

    PureState evolved =
        antisymmetrize(product_state({2, 1}, 4)).apply_single_particle(u);
    if (fermionic_concurrence(evolved) > kClassifyTol)
        throw std::logic_error("split state is not a Slater determinant");

    static const OnePerWellProjector projector(4, 2);
    PureState projected = projector.apply(evolved);
    TwoWellOutcome outcome;
    outcome.probability = projected.squared_norm();
    if (outcome.probability < kClassifyTol) return outcome;
    PureState final_state = projected.normalized();
    outcome.measures.c_nf = fermionic_concurrence(final_state);
    outcome.measures.c2 = concurrence2(freeze_pair(final_state));
    outcome.final_state = std::move(final_state);
    return outcome;
}

namespace {

// Spin flips with a zero entry: diagonal and antidiagonal phase matrices.
std::vector<Eigen::Matrix2cd> structured_spin_flips() {
    std::vector<Eigen::Matrix2cd> out;
    const Complex phases[4] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
    for (Complex p : phases)
        for (Complex q : phases) {
            Eigen::Matrix2cd diag = Eigen::Matrix2cd::Zero();
            diag(0, 0) = p; diag(1, 1) = q;
            out.push_back(diag);
            Eigen::Matrix2cd anti = Eigen::Matrix2cd::Zero();
            anti(0, 1) = p; anti(1, 0) = q;
            out.push_back(anti);
        }
    return out;
}

// Permutation matrices decorated with per-row phases, plane rotations, and
// the discrete Fourier matrix (whose equal-modulus entries produce a
// maximally entangled W-type outcome).
std::vector<Eigen::Matrix3cd> structured_tunnelings() {
    std::vector<Eigen::Matrix3cd> out;
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    const Complex phases[3] = {1.0, -1.0, Complex(0, 1)};
    for (const auto& perm : perms)
        for (Complex pa : phases)
            for (Complex pb : phases)
                for (Complex pc : phases) {
                    Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
                    const Complex ph[3] = {pa, pb, pc};
                    for (int row = 0; row < 3; ++row) m(row, perm[row]) = ph[row];
                    out.push_back(m);
                }
    for (double angle : {M_PI / 6.0, M_PI / 4.0, M_PI / 3.0})
        for (int axis = 0; axis < 3; ++axis) {
            const int r0 = axis == 0 ? 1 : 0;
            const int r1 = axis == 2 ? 1 : 2;
            Eigen::Matrix3cd m = Eigen::Matrix3cd::Identity();
            m(r0, r0) = std::cos(angle);
            m(r0, r1) = std::sin(angle);
            m(r1, r0) = -std::sin(angle);
            m(r1, r1) = std::cos(angle);
            out.push_back(m);
        }
    Eigen::Matrix3cd fourier;
    const Complex w = std::exp(Complex(0.0, 2.0 * M_PI / 3.0));
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) fourier(j, k) = std::pow(w, j * k) / std::sqrt(3.0);
    out.push_back(fourier);
    return out;
}

}  // namespace

ScanReport ghz_no_go_scan(long n_samples, std::uint64_t seed) {
    if (n_samples < 1) throw std::invalid_argument("need at least one sample");
    ScanReport report;
    report.seed = seed;

    auto record = [&report](const Eigen::Matrix3cd& t, const Eigen::Matrix2cd& s) {
        ProtocolOutcome outcome = run_protocol(TunnelingMatrix(t), SpinFlip(s));
        switch (outcome.classification) {
            case StateClass::kZero: ++report.count_zero; break;
            case StateClass::kSlater: ++report.count_slater; break;
            case StateClass::kWType: ++report.count_w; break;
            case StateClass::kGhzType:
                ++report.count_ghz;
                report.failures.push_back({t, s, outcome.classification, "ghz_type"});
                break;
            case StateClass::kOther:
                ++report.count_other;
                if (outcome.measures.tau_f)
                    report.max_tau_f_other =
                        std::max(report.max_tau_f_other, *outcome.measures.tau_f);
                break;
        }
        // The eta differences sum to zero, so at most zero of them or at
        // least two of them can be nonvanishing.
        const EtaParams& eta = outcome.eta;
        double mods[3] = {std::abs(eta.d1()), std::abs(eta.d2()), std::abs(eta.d3())};
        double max_mod = std::max({mods[0], mods[1], mods[2]});
        int nonzero = 0;
        if (max_mod > 0.0)
            for (double m : mods) nonzero += m > kClassifyTol * max_mod ? 1 : 0;
        if (nonzero == 1)
            report.failures.push_back({t, s, outcome.classification, "eta_count"});
        ++report.samples;
    };

    for (long i = 0; i < n_samples; ++i) {
        GaussianStream gt(mix_seed(seed, 2 * static_cast<std::uint64_t>(i)));
        GaussianStream gs(mix_seed(seed, 2 * static_cast<std::uint64_t>(i) + 1));
        record(haar_unitary(3, gt), haar_unitary(2, gs));
    }
    for (const auto& t : structured_tunnelings())
        for (const auto& s : structured_spin_flips()) record(t, s);
    return report;
}

}  // namespace triwell
