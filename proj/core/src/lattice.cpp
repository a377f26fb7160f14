#include "krylov2d/lattice.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace krylov2d {

DiamondVector::DiamondVector(int radius) : radius_(radius) {
    if (radius < 0) throw std::invalid_argument("DiamondVector: radius must be >= 0");
    const std::size_t r = static_cast<std::size_t>(radius);
    row_offset_.resize(2 * r + 2);
    std::size_t off = 0;
    for (int i = -radius; i <= radius; ++i) {
        row_offset_[static_cast<std::size_t>(i + radius)] = off;
        off += static_cast<std::size_t>(2 * (radius - std::abs(i)) + 1);
    }
    row_offset_.back() = off;
    values_.assign(off, 0.0);  // off == 2r^2 + 2r + 1
}

DiamondVector DiamondVector::delta(Site s, int radius) {
    DiamondVector v(radius);
    if (l1_norm(s) > radius)
        throw std::invalid_argument("DiamondVector::delta: site outside the diamond");
    v[s] = 1.0;
    return v;
}

double DiamondVector::squared_norm() const {
    double sum = 0.0;
    for (double x : values_) sum += x * x;
    return sum;
}

double DiamondVector::shell_energy(int s) const {
    if (s < 0 || s > radius_)
        throw std::out_of_range("shell_energy: shell index " + std::to_string(s) +
                                " outside [0, " + std::to_string(radius_) + "]");
    double sum = 0.0;
    for (int i = -s; i <= s; ++i) {
        const int j = s - std::abs(i);
        const double a = values_[index({i, j})];
        sum += a * a;
        if (j > 0) {
            const double b = values_[index({i, -j})];
            sum += b * b;
        }
    }
    return sum;
}

void DiamondVector::scale(double factor) {
    for (double& x : values_) x *= factor;
}

double dot(const DiamondVector& a, const DiamondVector& b) {
    const DiamondVector& small = a.radius() <= b.radius() ? a : b;
    const DiamondVector& big = a.radius() <= b.radius() ? b : a;
    double sum = 0.0;
    for (int i = -small.radius(); i <= small.radius(); ++i) {
        const std::span<const double> s = small.row(i);
        const std::span<const double> g = big.row(i);
        const std::size_t shift = static_cast<std::size_t>(big.radius() - small.radius());
        for (std::size_t t = 0; t < s.size(); ++t) sum += s[t] * g[t + shift];
    }
    return sum;
}

void add_scaled(DiamondVector& y, double alpha, const DiamondVector& x) {
    assert(x.radius() <= y.radius());
    const std::size_t shift = static_cast<std::size_t>(y.radius() - x.radius());
    for (int i = -x.radius(); i <= x.radius(); ++i) {
        const std::span<const double> s = x.row(i);
        const std::span<double> d = y.row(i);
        for (std::size_t t = 0; t < s.size(); ++t) d[t + shift] += alpha * s[t];
    }
}

namespace {

// splitmix64 finalizer; bijective, full-avalanche mixing of a 64-bit word.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

inline std::uint64_t site_key(Site s) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.i)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.j));
}

}  // namespace

PotentialField::PotentialField(double c, std::uint64_t seed, std::uint32_t realization)
    : c_(c), seed_(seed), realization_(realization) {
    if (!(c >= 0.0)) throw std::invalid_argument("PotentialField: disorder c must be >= 0");
    std::uint64_t h = mix64(seed ^ 0x9E3779B97F4A7C15ULL);
    stream_ = mix64(h ^ static_cast<std::uint64_t>(realization));
}

double PotentialField::value(Site s) const {
    const std::uint64_t bits = mix64(stream_ ^ site_key(s));
    // top 53 bits -> uniform double in [0, 1)
    const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
    return c_ * (2.0 * u - 1.0);
}

DiamondVector PotentialField::materialize(int radius) const {
    DiamondVector omega(radius);
    for (int i = -radius; i <= radius; ++i) {
        const std::span<double> out = omega.row(i);
        const int w = omega.half_width(i);
        for (int j = -w; j <= w; ++j) out[static_cast<std::size_t>(j + w)] = value({i, j});
    }
    return omega;
}

DiamondVector apply_hamiltonian(const DiamondVector& psi, const PotentialField& field,
                                double diagonal) {
    return apply_hamiltonian(psi, field.materialize(psi.radius() + 1), diagonal);
}

DiamondVector apply_hamiltonian(const DiamondVector& psi, const DiamondVector& omega,
                                double diagonal) {
    const int r = psi.radius();
    if (omega.radius() < r + 1)
        throw std::invalid_argument("apply_hamiltonian: potential patch smaller than result");
    DiamondVector out(r + 1);

    // Scatter each input row into the output: the diagonal term and the four
    // neighbor contributions are all contiguous row slices.
    for (int i = -r; i <= r; ++i) {
        const std::span<const double> in = psi.row(i);
        const std::size_t n = in.size();

        // same row: out row i has half-width one larger, so j = -w maps to slot 1
        {
            std::span<double> o = out.row(i);
            const std::span<const double> om = omega.row(i);
            const std::size_t oshift =
                static_cast<std::size_t>(omega.half_width(i) - psi.half_width(i));
            for (std::size_t t = 0; t < n; ++t) {
                const double v = in[t];
                o[t + 1] += (diagonal + om[t + oshift]) * v;  // (diagonal + omega) psi
                o[t] -= v;                                    // left neighbor (j-1)
                o[t + 2] -= v;                                // right neighbor (j+1)
            }
        }
        // rows above and below: constant offset (0 or 2) per row
        for (int di : {-1, 1}) {
            std::span<double> o = out.row(i + di);
            const std::size_t shift =
                static_cast<std::size_t>(out.half_width(i + di) - psi.half_width(i));
            for (std::size_t t = 0; t < n; ++t) o[t + shift] -= in[t];
        }
    }
    return out;
}

}  // namespace krylov2d
