#ifndef KRYLOV2D_KRYLOV_HPP
#define KRYLOV2D_KRYLOV_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "krylov2d/lattice.hpp"

namespace krylov2d {

/// How the Krylov sequence H^k delta_00 is orthogonalized.
///
/// FullGramSchmidt keeps every previous basis vector and projects each new
/// vector against all of them (memory grows like n^3). ThreeTermRecurrence
/// exploits the symmetry of H:  m_{k+1} = H m_k - alpha_k m_k - beta_k m_{k-1}
/// with alpha_k = <H m_k, m_k>/|m_k|^2 and beta_k = |m_k|^2/|m_{k-1}|^2,
/// keeping only two working vectors. In exact arithmetic all modes produce
/// the same (monic, unnormalized) vectors; in floating point the recurrence
/// drifts, so it can optionally re-project against the stored history every
/// `reorthogonalize_every` steps (which brings the memory cost back).
struct OrthMode {
    enum class Kind { FullGramSchmidt, ThreeTermRecurrence };

    Kind kind = Kind::FullGramSchmidt;
    std::optional<int> reorthogonalize_every{};  // recurrence only

    static OrthMode full_gram_schmidt() { return {Kind::FullGramSchmidt, {}}; }
    static OrthMode three_term(std::optional<int> reorthogonalize_every = {}) {
        return {Kind::ThreeTermRecurrence, reorthogonalize_every};
    }

    bool stores_history() const {
        return kind == Kind::FullGramSchmidt || reorthogonalize_every.has_value();
    }
};

struct KrylovOptions {
    /// Diagonal constant of the Laplacian stencil. Any value yields the same
    /// distance series (shift invariance); 4 is the default convention.
    double diagonal = 4.0;
    /// |m_k|^2 below this fraction of |m_0|^2 declares invariant-subspace
    /// breakdown and terminates the series.
    double breakdown_rel_threshold = 1e-24;
    /// A Bessel partial sum above 1 + degeneracy_tolerance means the basis
    /// has lost orthogonality beyond repair; run_krylov throws.
    double degeneracy_tolerance = 1e-6;
};

/// Signals that lost orthogonality pushed a Bessel partial sum past 1.
/// Switching mode or reorthogonalizing more often is the usual cure.
class degeneracy_error : public std::runtime_error {
public:
    degeneracy_error(int step, double partial_sum);
    int step() const { return step_; }

private:
    int step_;
};

/// Requested vector lies past an invariant-subspace breakdown.
class breakdown_error : public std::runtime_error {
public:
    explicit breakdown_error(int step);
    int step() const { return step_; }

private:
    int step_;
};

struct DistanceStep {
    int k;
    double bessel_term;  // <m_k, delta_11>^2 / |m_k|^2
    double partial_sum;  // running sum of bessel terms, 0..k
    double distance;     // sqrt(max(0, 1 - partial_sum))
};

/// The distance series D^n = dist(delta_11, span{H^k delta_00 : k <= n})
/// together with the Bessel partial sums defining it.
struct DistanceSeries {
    double c = 0.0;
    std::uint64_t seed = 0;
    std::uint32_t realization = 0;
    OrthMode mode{};
    std::vector<DistanceStep> terms;  // k = 0 .. n (shorter on breakdown)

    bool breakdown = false;
    int breakdown_step = -1;  // k whose vector vanished
    /// Orthogonality-loss witness: max over k >= 1 of |<m_k, m_0>| / |m_k|.
    double drift = 0.0;
    /// Joint power-of-two rescaling applied to the working vectors to avoid
    /// overflow at extreme depth; 0 in every desk-scale run. The series is
    /// scale-invariant, so terms are unaffected.
    int scale_log2 = 0;
};

/// Step-wise driver for the orthogonalization. current() is m_k, kept
/// unnormalized (monic); step() advances k by one and returns false once the
/// Krylov subspace became invariant (breakdown).
class KrylovProcess {
public:
    KrylovProcess(const PotentialField& field, int max_steps, OrthMode mode,
                  const KrylovOptions& options = {});

    bool step();

    int k() const { return k_; }
    const DiamondVector& current() const;
    double current_squared_norm() const { return cur_norm2_; }
    DistanceStep last_step() const { return last_; }
    bool broke_down() const { return breakdown_; }
    double drift() const { return drift_; }
    int scale_log2() const { return scale_log2_; }
    double partial_sum() const { return partial_sum_; }

    /// Stored basis vectors m_0..m_k; only available in history-keeping modes.
    const std::vector<DiamondVector>& basis() const;

private:
    void check_degeneracy() const;
    void record_current();

    OrthMode mode_;
    KrylovOptions options_;
    int max_steps_;
    DiamondVector omega_;

    int k_ = 0;
    DiamondVector prev_;  // m_{k-1} (recurrence)
    DiamondVector cur_;   // m_k
    double prev_norm2_ = 0.0;
    double cur_norm2_ = 1.0;

    std::vector<DiamondVector> history_;
    std::vector<double> history_norm2_;

    double partial_sum_ = 0.0;
    DistanceStep last_{};
    bool breakdown_ = false;
    double drift_ = 0.0;
    int scale_log2_ = 0;
};

/// Runs the full process and collects the distance series for k = 0..n.
/// Throws degeneracy_error if orthogonality loss drives a partial sum past
/// 1 + options.degeneracy_tolerance; ends early (flagged, not an error) on
/// invariant-subspace breakdown.
DistanceSeries run_krylov(const PotentialField& field, int n, OrthMode mode,
                          const KrylovOptions& options = {});

/// The k-th orthogonal (unnormalized) basis vector m_k; its (1,1) entry is
/// the Bessel numerator <m_k, delta_11>.
DiamondVector orthogonal_vector(const PotentialField& field, int k, OrthMode mode,
                                const KrylovOptions& options = {});

/// All of m_0..m_n from the full Gram-Schmidt pass.
std::vector<DiamondVector> gram_schmidt_basis(const PotentialField& field, int n,
                                              const KrylovOptions& options = {});

}  // namespace krylov2d

#endif
