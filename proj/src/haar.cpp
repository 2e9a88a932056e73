#include "triwell/haar.hpp"

#include <cmath>

namespace triwell {

double GaussianStream::uniform() {
    // 53 random bits mapped to (0, 1]
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Matrix haar_unitary(int n, GaussianStream& stream) {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(stream.normal(), stream.normal());
    Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // fold the R diagonal phases into Q so the distribution is Haar
    for (int j = 0; j < n; ++j) {
        Complex d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return q;
}

Matrix haar_unitary(int n, std::uint64_t seed) {
    GaussianStream stream(seed);
    return haar_unitary(n, stream);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace triwell
