#ifndef KRYLOV2D_LATTICE_HPP
#define KRYLOV2D_LATTICE_HPP

#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

namespace krylov2d {

/// A point of the integer lattice Z^2.
struct Site {
    int i = 0;
    int j = 0;

    friend bool operator==(const Site&, const Site&) = default;
};

/// l1 (taxicab) norm; sites of equal l1 norm form a diamond-shaped shell.
inline int l1_norm(Site s) { return std::abs(s.i) + std::abs(s.j); }

/// Real-valued wave function supported on the diamond |i| + |j| <= radius.
///
/// Storage is packed row-major: row i (i = -r .. r) holds the
/// 2*(r - |i|) + 1 entries j = -(r - |i|) .. r - |i| contiguously, so the
/// whole vector occupies exactly 2r^2 + 2r + 1 doubles. Rows of two vectors
/// with different radii line up with a constant column offset, which keeps
/// dot products, axpy updates and the Hamiltonian stencil contiguous.
class DiamondVector {
public:
    explicit DiamondVector(int radius);

    /// Unit point mass at `s` inside a diamond of the given radius.
    static DiamondVector delta(Site s, int radius);

    int radius() const { return radius_; }
    std::size_t size() const { return values_.size(); }

    /// Number of sites in row i with |j| <= half_width(i).
    int half_width(int i) const { return radius_ - std::abs(i); }

    /// Value at a site, treating everything outside the diamond as zero.
    double at(Site s) const {
        if (l1_norm(s) > radius_) return 0.0;
        return values_[index(s)];
    }

    /// Mutable access; the site must lie inside the diamond.
    double& operator[](Site s) { return values_[index(s)]; }

    /// Flat index of an in-diamond site.
    std::size_t index(Site s) const {
        return row_offset_[static_cast<std::size_t>(s.i + radius_)] +
               static_cast<std::size_t>(s.j + half_width(s.i));
    }

    /// Contiguous entries of row i, ordered by increasing j.
    std::span<double> row(int i) {
        return {values_.data() + row_offset_[static_cast<std::size_t>(i + radius_)],
                static_cast<std::size_t>(2 * half_width(i) + 1)};
    }
    std::span<const double> row(int i) const {
        return {values_.data() + row_offset_[static_cast<std::size_t>(i + radius_)],
                static_cast<std::size_t>(2 * half_width(i) + 1)};
    }

    std::span<double> data() { return values_; }
    std::span<const double> data() const { return values_; }

    double squared_norm() const;

    /// Energy carried by the shell |i| + |j| = s. Throws if s > radius.
    double shell_energy(int s) const;

    void scale(double factor);

private:
    int radius_;
    std::vector<std::size_t> row_offset_;  // per row i + radius
    std::vector<double> values_;
};

/// Inner product; the vectors may have different radii (the smaller one is
/// implicitly zero-padded).
double dot(const DiamondVector& a, const DiamondVector& b);

/// y += alpha * x. Requires x.radius() <= y.radius().
void add_scaled(DiamondVector& y, double alpha, const DiamondVector& x);

/// Deterministic i.i.d.-uniform on-site disorder on Z^2.
///
/// value(s) is a pure function of (seed, realization, s): every site value
/// comes from a counter-style hash of its coordinates, so results do not
/// depend on query order or thread count. Values are uniform in [-c, c].
class PotentialField {
public:
    PotentialField(double c, std::uint64_t seed, std::uint32_t realization = 0);

    double value(Site s) const;

    double half_width() const { return c_; }
    std::uint64_t seed() const { return seed_; }
    std::uint32_t realization() const { return realization_; }

    /// All site values with |i| + |j| <= radius, packed like a DiamondVector.
    /// Used to avoid re-hashing sites inside hot loops.
    DiamondVector materialize(int radius) const;

private:
    double c_;
    std::uint64_t seed_;
    std::uint32_t realization_;
    std::uint64_t stream_;  // hash state absorbing (seed, realization)
};

/// Applies H = -laplacian + potential to psi, returning a vector one shell
/// larger:  phi(n) = (diagonal + omega_n) psi(n) - sum_{|m-n|_1 = 1} psi(m).
/// `diagonal` is the on-diagonal constant of the Laplacian stencil; the
/// default 4 gives the positive-semidefinite convention. Changing it shifts
/// H by a multiple of the identity and leaves every Krylov span unchanged.
DiamondVector apply_hamiltonian(const DiamondVector& psi, const PotentialField& field,
                                double diagonal = 4.0);

/// Same, with the potential already materialized to radius >= psi.radius() + 1.
DiamondVector apply_hamiltonian(const DiamondVector& psi, const DiamondVector& omega,
                                double diagonal = 4.0);

}  // namespace krylov2d

#endif
