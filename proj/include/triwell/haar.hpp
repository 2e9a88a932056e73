#pragma once

#include <cstdint>
#include <random>

#include "triwell/types.hpp"

namespace triwell {

// Deterministic standard normals built from the raw mt19937_64 bit stream
// (Box-Muller on 53-bit uniforms), so sampled matrices are reproducible
// across standard libraries.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}
    double uniform();  // (0, 1]
    double normal();

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Haar-distributed n x n unitary: QR of a matrix of independent complex
// standard normals, with the R diagonal phases folded back into Q.
Matrix haar_unitary(int n, GaussianStream& stream);
Matrix haar_unitary(int n, std::uint64_t seed);

// splitmix64-style mix for deterministic per-sample sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace triwell
