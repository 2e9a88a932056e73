#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle_helpers.hpp"
#include "triwell/measures.hpp"

using namespace triwell;
using triwell::testing::random_antisymmetric_state;
using triwell::testing::random_qubit_state;

namespace {

QubitState ghz3() {
    Vector amp = Vector::Zero(8);
    amp[0] = amp[7] = 1.0 / std::sqrt(2.0);
    return QubitState(3, amp);
}

QubitState w3() {
    Vector amp = Vector::Zero(8);
    amp[1] = amp[2] = amp[4] = 1.0 / std::sqrt(3.0);
    return QubitState(3, amp);
}

PureState ghz_f(Complex c1, Complex c2) {
    SlaterExpansion exp;
    exp.set(1, 2, 3, c1);
    exp.set(4, 5, 6, c2);
    return from_slater_expansion(exp);
}

PureState w_f(Complex c1, Complex c2, Complex c3) {
    SlaterExpansion exp;
    exp.set(2, 3, 5, c1);
    exp.set(1, 4, 5, c2);
    exp.set(1, 3, 6, c3);
    return from_slater_expansion(exp);
}

}  // namespace

TEST_CASE("bipartite concurrence on products and the singlet") {
    Vector product = Vector::Zero(4);
    product[1] = 1.0;  // |0> x |1>
    CHECK(concurrence2(product, 2, 2) == doctest::Approx(0.0).epsilon(1e-14));

    Vector singlet = Vector::Zero(4);
    singlet[1] = 1.0 / std::sqrt(2.0);
    singlet[2] = -1.0 / std::sqrt(2.0);
    // Tr rho_A^2 = 1/2 by hand, so C2 = 1.
    CHECK(concurrence2(singlet, 2, 2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bipartite concurrence rejects unnormalized input") {
    Vector v = Vector::Zero(4);
    v[0] = 2.0;
    CHECK_THROWS_AS(concurrence2(v, 2, 2), std::invalid_argument);
}

TEST_CASE("both reductions of a pure bipartite state have the same purity") {
    GaussianStream g(7);
    Vector amp(12);
    for (Eigen::Index i = 0; i < amp.size(); ++i) amp[i] = Complex(g.normal(), g.normal());
    amp /= amp.norm();
    Matrix rho_a = partial_trace(amp, {3, 4}, {1});
    Matrix rho_b = partial_trace(amp, {3, 4}, {2});
    CHECK(std::abs((rho_a * rho_a).trace().real() - (rho_b * rho_b).trace().real()) < 1e-12);
}

TEST_CASE("multipartite concurrence pins GHZ, W, and product states") {
    CHECK(concurrenceN(ghz3()) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
    // Single-qubit purities of W are 5/9 (enumerated by hand), forcing 2/sqrt(3).
    Matrix rho_a = partial_trace(w3().amplitudes, {2, 2, 2}, {1});
    CHECK((rho_a * rho_a).trace().real() == doctest::Approx(5.0 / 9.0).epsilon(1e-12));
    CHECK(concurrenceN(w3()) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));

    Vector product = Vector::Zero(8);
    product[5] = 1.0;  // |1>|0>|1>
    CHECK(concurrenceN(QubitState(3, product)) == doctest::Approx(0.0).epsilon(1e-12));

    Vector one = Vector::Zero(2);
    one[0] = 1.0;
    CHECK_THROWS_AS(concurrenceN(QubitState(1, one)), std::invalid_argument);
}

TEST_CASE("3-tangle separates the GHZ and W families") {
    CHECK(tangle3(ghz3()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tangle3(w3()) == doctest::Approx(0.0).epsilon(1e-12));

    Vector bisep = Vector::Zero(8);  // |0> x (|00> + |11>)/sqrt(2)
    bisep[0] = bisep[3] = 1.0 / std::sqrt(2.0);
    CHECK(tangle3(QubitState(3, bisep)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("reduction route matches the hyperdeterminant on random 3-qubit states") {
    double max_err = 0.0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        QubitState psi = random_qubit_state(3, 1000 + seed);
        double via_reductions = tangle3(psi);
        double via_hyperdet = tangle3_hyperdeterminant(psi);
        max_err = std::max(max_err, std::abs(via_reductions - via_hyperdet));
        CHECK(via_reductions >= 0.0);
        CHECK(via_reductions <= 1.0);
    }
    CHECK(max_err < 1e-9);
}

TEST_CASE("Wootters concurrence on pure and separable two-qubit density matrices") {
    Vector bell = Vector::Zero(4);
    bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
    Matrix rho = bell * bell.adjoint();
    CHECK(mixed_concurrence2(rho) == doctest::Approx(1.0).epsilon(1e-12));

    Matrix mix = Matrix::Zero(4, 4);
    mix(0, 0) = 0.5;
    mix(3, 3) = 0.5;  // classical mixture of |00> and |11>
    CHECK(mixed_concurrence2(mix) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("particle-split concurrence of the detected pair state") {
    // The post-selected two-fermion state: maximally entangled as fermions
    // (c2f = 1, equal to the frozen qubit concurrence), while the raw
    // particle bipartition of the d = 4 space carries sqrt(3/2).
    PureState pair(2, 4);
    pair.amplitudes() += 0.5 * product_state({2, 3}, 4).amplitudes();
    pair.amplitudes() -= 0.5 * product_state({3, 2}, 4).amplitudes();
    pair.amplitudes() += 0.5 * product_state({4, 1}, 4).amplitudes();
    pair.amplitudes() -= 0.5 * product_state({1, 4}, 4).amplitudes();
    CHECK(fermionic_concurrence(pair) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence2(pair) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
}

TEST_CASE("alpha normalization constants") {
    CHECK(fermionic_alpha(3, 6) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fermionic_alpha(2, 4) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("every slater determinant carries zero fermionic concurrence") {
    CHECK(fermionic_concurrence(slater_determinant({1, 3, 4}, 6)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fermionic_concurrence(slater_determinant({2, 5, 6}, 6)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fermionic_concurrence(slater_determinant({2, 3}, 4)) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("equal-weight GHZ_f is maximally entangled with a flat reduction") {
    PureState psi = ghz_f(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    Matrix rho1 = reduced_density(psi, {1}).entries();
    CHECK((rho1 - Matrix::Identity(6, 6) / 6.0).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(fermionic_concurrence(psi) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("the symmetric W_f state reaches 2 sqrt(2) / 3") {
    const Complex phase = std::exp(Complex(0.0, -M_PI / 3.0));
    PureState psi = w_f(phase / std::sqrt(3.0), std::conj(phase) / std::sqrt(3.0),
                        Complex(-1.0 / std::sqrt(3.0)));
    CHECK(fermionic_concurrence(psi) ==
          doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-10));
}

TEST_CASE("fermionic concurrence requires antisymmetry and a known shape") {
    CHECK_THROWS_AS(fermionic_concurrence(product_state({1, 3, 4}, 6)), std::invalid_argument);
    PureState wrong(2, 6);
    wrong.amplitudes()[1] = 1.0;
    CHECK_THROWS_AS(fermionic_concurrence(wrong), std::invalid_argument);
}

TEST_CASE("both purity routes agree for three fermions") {
    PureState psi = random_antisymmetric_state(61);
    CHECK(std::abs(reduced_density(psi, {1}).purity() -
                   reduced_density(psi, {1, 2}).purity()) < 1e-12);
}

TEST_CASE("adjugate satisfies adj(M) M = det(M) I") {
    GaussianStream g(62);
    Eigen::Matrix3cd m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = Complex(g.normal(), g.normal());
    Eigen::Matrix3cd prod = adjugate(m) * m;
    Eigen::Matrix3cd expected = m.determinant() * Eigen::Matrix3cd::Identity();
    CHECK((prod - expected).cwiseAbs().maxCoeff() < 1e-12);
    // rank-1 input has a vanishing adjugate
    Eigen::Matrix3cd rank1 = Eigen::Matrix3cd::Zero();
    rank1(0, 2) = 3.7;
    CHECK(adjugate(rank1).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("3-fermionic tangle selects GHZ_f and vanishes on W_f and slaters") {
    SlaterExpansion ghz;
    ghz.set(1, 2, 3, 1.0 / std::sqrt(2.0));
    ghz.set(4, 5, 6, 1.0 / std::sqrt(2.0));
    CHECK(fermionic_tangle(ghz) == doctest::Approx(1.0).epsilon(1e-12));

    GaussianStream g(63);
    SUBCASE("random coefficients on the three-slater W patterns") {
        for (const auto& triples :
             {std::array<std::array<int, 3>, 3>{{{2, 3, 5}, {1, 4, 5}, {1, 3, 6}}},
              std::array<std::array<int, 3>, 3>{{{1, 4, 6}, {2, 3, 6}, {2, 4, 5}}},
              std::array<std::array<int, 3>, 3>{{{1, 2, 3}, {1, 4, 5}, {2, 4, 6}}}}) {
            SlaterExpansion w;
            double norm2 = 0;
            for (const auto& t : triples) {
                Complex c(g.normal(), g.normal());
                w.set(t[0], t[1], t[2], c);
                norm2 += std::norm(c);
            }
            for (const auto& t : triples)
                w.set(t[0], t[1], t[2], w.coefficient(t[0], t[1], t[2]) / std::sqrt(norm2));
            CHECK(fermionic_tangle(w) == doctest::Approx(0.0).epsilon(1e-12));
        }
    }

    SlaterExpansion single;
    single.set(1, 2, 3, 1.0);
    CHECK(fermionic_tangle(single) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("measures are invariant under shared single-particle unitaries") {
    PureState psi = random_antisymmetric_state(64);
    double c3f = fermionic_concurrence(psi);
    double tau_f = fermionic_tangle(to_slater_expansion(psi));
    for (std::uint64_t seed : {70u, 71u, 72u}) {
        Matrix v = haar_unitary(6, seed);
        PureState rotated = psi.apply_single_particle(v);
        CHECK(std::abs(fermionic_concurrence(rotated) - c3f) < 1e-10);
        CHECK(std::abs(fermionic_tangle(to_slater_expansion(rotated)) - tau_f) < 1e-9);
    }
}

TEST_CASE("pair concurrence is invariant under shared unitaries too") {
    PureState pair = random_antisymmetric_state(65, 2, 4);
    double c2f = fermionic_concurrence(pair);
    for (std::uint64_t seed : {80u, 81u, 82u}) {
        PureState rotated = pair.apply_single_particle(haar_unitary(4, seed));
        CHECK(std::abs(fermionic_concurrence(rotated) - c2f) < 1e-10);
    }
}

TEST_CASE("fermionic concurrence stays inside the unit interval") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        double c = fermionic_concurrence(random_antisymmetric_state(8000 + seed));
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
    }
}
