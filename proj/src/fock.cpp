#include "triwell/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace triwell {

namespace {

long ipow(int base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

int permutation_sign(std::vector<int> p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[p[i]]);
            sign = -sign;
        }
    }
    return sign;
}

// All permutations of {0..n-1} with their signs.
std::vector<std::pair<std::vector<int>, int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::pair<std::vector<int>, int>> out;
    do {
        out.emplace_back(p, permutation_sign(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

void check_shape(int n, int d) {
    if (n < 2 || n > 3) throw std::invalid_argument("n_particles must be 2 or 3");
    if (d < 2) throw std::invalid_argument("dim_single must be at least 2");
}

}  // namespace

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

PureState::PureState(int n_particles, int dim_single)
    : n_particles_(n_particles), dim_single_(dim_single),
      amplitudes_(Vector::Zero(ipow(dim_single, n_particles))) {
    check_shape(n_particles, dim_single);
}

PureState::PureState(int n_particles, int dim_single, Vector amplitudes)
    : n_particles_(n_particles), dim_single_(dim_single), amplitudes_(std::move(amplitudes)) {
    check_shape(n_particles, dim_single);
    if (amplitudes_.size() != ipow(dim_single, n_particles))
        throw std::invalid_argument("amplitude vector has wrong length");
}

Eigen::Index PureState::flat_index(std::span<const int> indices) const {
    if (static_cast<int>(indices.size()) != n_particles_)
        throw std::invalid_argument("index tuple has wrong arity");
    Eigen::Index flat = 0;
    for (int i : indices) {
        if (i < 1 || i > dim_single_) throw std::out_of_range("single-particle index out of range");
        flat = flat * dim_single_ + (i - 1);
    }
    return flat;
}

Complex PureState::amplitude(std::span<const int> indices) const {
    return amplitudes_[flat_index(indices)];
}

Complex PureState::amplitude(std::initializer_list<int> indices) const {
    return amplitude(std::span<const int>(indices.begin(), indices.size()));
}

void PureState::set_amplitude(std::span<const int> indices, Complex value) {
    amplitudes_[flat_index(indices)] = value;
}

PureState PureState::normalized() const {
    double n = norm();
    if (n < 1e-15) throw std::runtime_error("cannot normalize a zero state");
    return PureState(n_particles_, dim_single_, amplitudes_ / n);
}

PureState PureState::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_particles_)
        throw std::invalid_argument("permutation has wrong arity");
    PureState out(n_particles_, dim_single_);
    std::vector<int> idx(n_particles_), src(n_particles_);
    const long total = dim_total();
    for (long flat = 0; flat < total; ++flat) {
        long f = flat;
        for (int s = n_particles_ - 1; s >= 0; --s) {
            idx[s] = static_cast<int>(f % dim_single_) + 1;
            f /= dim_single_;
        }
        for (int s = 0; s < n_particles_; ++s) src[s] = idx[perm[s]];
        out.amplitudes_[flat] = amplitude(src);
    }
    return out;
}

PureState PureState::apply_single_particle(const Matrix& op) const {
    if (op.rows() != dim_single_ || op.cols() != dim_single_)
        throw std::invalid_argument("operator dimension mismatch");
    Vector v = amplitudes_;
    const int d = dim_single_;
    for (int slot = 0; slot < n_particles_; ++slot) {
        const long post = ipow(d, n_particles_ - 1 - slot);
        const long pre = dim_total() / (post * d);
        Vector next = Vector::Zero(dim_total());
        for (long p = 0; p < pre; ++p)
            for (long q = 0; q < post; ++q) {
                const long base = p * d * post + q;
                for (int row = 0; row < d; ++row) {
                    Complex acc = 0;
                    for (int col = 0; col < d; ++col) acc += op(row, col) * v[base + col * post];
                    next[base + row * post] = acc;
                }
            }
        v = std::move(next);
    }
    return PureState(n_particles_, dim_single_, std::move(v));
}

bool PureState::is_antisymmetric(double tol) const {
    const double scale = std::max(1.0, norm());
    for (const auto& [perm, sign] : all_permutations(n_particles_)) {
        PureState p = permuted(perm);
        double err = (p.amplitudes() - static_cast<double>(sign) * amplitudes_).cwiseAbs().maxCoeff();
        if (err > tol * scale) return false;
    }
    return true;
}

PureState product_state(const std::vector<int>& indices, int d) {
    PureState out(static_cast<int>(indices.size()), d);
    out.set_amplitude(indices, 1.0);
    return out;
}

PureState slater_determinant(const std::vector<int>& indices, int d) {
    const int n = static_cast<int>(indices.size());
    check_shape(n, d);
    for (int i : indices)
        if (i < 1 || i > d) throw std::out_of_range("single-particle index out of range");
    std::vector<int> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("Pauli violation: repeated single-particle index");

    PureState out(n, d);
    std::vector<int> tuple(n);
    for (const auto& [perm, sign] : all_permutations(n)) {
        for (int s = 0; s < n; ++s) tuple[s] = indices[perm[s]];
        out.set_amplitude(tuple, static_cast<double>(sign) / std::sqrt(factorial(n)));
    }
    return out;
}

PureState antisymmetrize(const PureState& state) {
    const int n = state.n_particles();
    Vector acc = Vector::Zero(state.dim_total());
    for (const auto& [perm, sign] : all_permutations(n))
        acc += static_cast<double>(sign) * state.permuted(perm).amplitudes();
    return PureState(n, state.dim_single(), acc / std::sqrt(factorial(n)));
}

void SlaterExpansion::set(int i, int j, int k, Complex value) {
    if (!(1 <= i && i < j && j < k && k <= 6))
        throw std::invalid_argument("expansion keys must satisfy 1 <= i < j < k <= 6");
    coeffs_[{i, j, k}] = value;
}

Complex SlaterExpansion::coefficient(int i, int j, int k) const {
    if (i == j || j == k || i == k) return 0.0;
    std::array<int, 3> key{i, j, k};
    int sign = 1;
    // sort the 3 indices, tracking parity
    if (key[0] > key[1]) { std::swap(key[0], key[1]); sign = -sign; }
    if (key[1] > key[2]) { std::swap(key[1], key[2]); sign = -sign; }
    if (key[0] > key[1]) { std::swap(key[0], key[1]); sign = -sign; }
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) return 0.0;
    return static_cast<double>(sign) * it->second;
}

double SlaterExpansion::squared_norm() const {
    double s = 0;
    for (const auto& [key, v] : coeffs_) s += std::norm(v);
    return s;
}

double SlaterExpansion::max_modulus() const {
    double m = 0;
    for (const auto& [key, v] : coeffs_) m = std::max(m, std::abs(v));
    return m;
}

SlaterExpansion to_slater_expansion(const PureState& state) {
    if (state.n_particles() != 3 || state.dim_single() != 6)
        throw std::invalid_argument("Slater expansion requires 3 particles with d = 6");
    if (!state.is_antisymmetric())
        throw std::invalid_argument("Slater expansion requires an antisymmetric state");
    SlaterExpansion exp;
    const double root = std::sqrt(factorial(3));
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            for (int k = j + 1; k <= 6; ++k)
                exp.set(i, j, k, root * state.amplitude({i, j, k}));
    return exp;
}

PureState from_slater_expansion(const SlaterExpansion& expansion) {
    PureState out(3, 6);
    for (const auto& [key, value] : expansion.coefficients()) {
        if (value == 0.0) continue;
        out.amplitudes() +=
            value * slater_determinant({key[0], key[1], key[2]}, 6).amplitudes();
    }
    return out;
}

Matrix partial_trace(const Vector& amplitudes, const std::vector<int>& dims,
                     const std::vector<int>& keep) {
    const int n = static_cast<int>(dims.size());
    long total = 1;
    for (int d : dims) total *= d;
    if (amplitudes.size() != total) throw std::invalid_argument("amplitude length mismatch");
    if (keep.empty() || static_cast<int>(keep.size()) >= n)
        throw std::invalid_argument("keep must be a nonempty proper subset of slots");
    std::vector<bool> kept(n, false);
    for (int s : keep) {
        if (s < 1 || s > n) throw std::out_of_range("slot out of range");
        if (kept[s - 1]) throw std::invalid_argument("repeated slot");
        kept[s - 1] = true;
    }

    std::vector<int> keep_slots, rest_slots;
    for (int s = 0; s < n; ++s) (kept[s] ? keep_slots : rest_slots).push_back(s);
    long dim_keep = 1, dim_rest = 1;
    for (int s : keep_slots) dim_keep *= dims[s];
    for (int s : rest_slots) dim_rest *= dims[s];

    // flat index from (kept part, rest part)
    auto flat_of = [&](long k, long r) {
        std::vector<int> digit(n, 0);
        for (int s = static_cast<int>(keep_slots.size()) - 1; s >= 0; --s) {
            digit[keep_slots[s]] = static_cast<int>(k % dims[keep_slots[s]]);
            k /= dims[keep_slots[s]];
        }
        for (int s = static_cast<int>(rest_slots.size()) - 1; s >= 0; --s) {
            digit[rest_slots[s]] = static_cast<int>(r % dims[rest_slots[s]]);
            r /= dims[rest_slots[s]];
        }
        long flat = 0;
        for (int s = 0; s < n; ++s) flat = flat * dims[s] + digit[s];
        return flat;
    };

    Matrix rho = Matrix::Zero(dim_keep, dim_keep);
    for (long k1 = 0; k1 < dim_keep; ++k1)
        for (long k2 = 0; k2 < dim_keep; ++k2) {
            Complex acc = 0;
            for (long r = 0; r < dim_rest; ++r)
                acc += amplitudes[flat_of(k1, r)] * std::conj(amplitudes[flat_of(k2, r)]);
            rho(k1, k2) = acc;
        }
    rho = 0.5 * (rho + rho.adjoint().eval());  // kill rounding asymmetry
    return rho;
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw std::invalid_argument("density matrix not square");
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kNormTol)
        throw std::invalid_argument("density matrix not Hermitian");
    if (std::abs(entries_.trace().real() - 1.0) > kNormTol ||
        std::abs(entries_.trace().imag()) > kNormTol)
        throw std::invalid_argument("density matrix trace is not 1");
}

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

DensityMatrix reduced_density(const PureState& state, const std::vector<int>& keep) {
    if (std::abs(state.norm() - 1.0) > kNormTol)
        throw std::invalid_argument("reduced_density requires a normalized state");
    std::vector<int> dims(state.n_particles(), state.dim_single());
    return DensityMatrix(partial_trace(state.amplitudes(), dims, keep));
}

OnePerWellProjector::OnePerWellProjector(int d, int n_particles) : d_(d), n_(n_particles) {
    check_shape(n_particles, d);
    if (d % 2 != 0 || d / 2 != n_particles)
        throw std::invalid_argument("projector needs one particle per well: d = 2 n");
    long total = ipow(d, n_particles);
    mask_ = Eigen::VectorXd::Zero(total);
    std::vector<int> sites(n_particles);
    for (long flat = 0; flat < total; ++flat) {
        long f = flat;
        for (int s = n_particles - 1; s >= 0; --s) {
            sites[s] = static_cast<int>(f % d) / 2;  // site of the 0-based index
            f /= d;
        }
        std::sort(sites.begin(), sites.end());
        bool one_each = true;
        for (int s = 0; s < n_particles; ++s) one_each = one_each && sites[s] == s;
        mask_[flat] = one_each ? 1.0 : 0.0;
    }
}

PureState OnePerWellProjector::apply(const PureState& state) const {
    if (state.dim_single() != d_ || state.n_particles() != n_)
        throw std::invalid_argument("projector shape mismatch");
    return PureState(n_, d_, state.amplitudes().cwiseProduct(mask_.cast<Complex>()));
}

}  // namespace triwell
