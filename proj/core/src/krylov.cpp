#include "krylov2d/krylov.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace krylov2d {

namespace {

const Site kOrigin{0, 0};
const Site kTarget{1, 1};

// Working squared norms above this trigger a joint power-of-two rescale of
// the recurrence pair. Far below the overflow threshold 2^1024, far above
// anything a desk-scale run reaches.
constexpr double kRescaleTrigger = 0x1.0p992;

std::string degeneracy_message(int step, double partial_sum) {
    return "Bessel partial sum " + std::to_string(partial_sum) + " exceeds 1 at step " +
           std::to_string(step) +
           ": orthogonality lost; switch mode or reorthogonalize more often";
}

}  // namespace

degeneracy_error::degeneracy_error(int step, double partial_sum)
    : std::runtime_error(degeneracy_message(step, partial_sum)), step_(step) {}

breakdown_error::breakdown_error(int step)
    : std::runtime_error("Krylov subspace became invariant at step " + std::to_string(step)),
      step_(step) {}

KrylovProcess::KrylovProcess(const PotentialField& field, int max_steps, OrthMode mode,
                             const KrylovOptions& options)
    : mode_(mode),
      options_(options),
      max_steps_(max_steps),
      omega_(field.materialize(std::max(max_steps, 1))),
      prev_(0),
      cur_(DiamondVector::delta(kOrigin, 0)) {
    if (max_steps < 0) throw std::invalid_argument("KrylovProcess: max_steps must be >= 0");
    if (mode.reorthogonalize_every && *mode.reorthogonalize_every < 1)
        throw std::invalid_argument("KrylovProcess: reorthogonalize_every must be >= 1");
    cur_norm2_ = 1.0;
    if (mode_.stores_history()) {
        history_.push_back(cur_);
        history_norm2_.push_back(cur_norm2_);
    }
    record_current();
}

const DiamondVector& KrylovProcess::current() const {
    return mode_.kind == OrthMode::Kind::FullGramSchmidt ? history_.back() : cur_;
}

const std::vector<DiamondVector>& KrylovProcess::basis() const {
    if (!mode_.stores_history())
        throw std::logic_error("KrylovProcess::basis: mode keeps no history");
    return history_;
}

bool KrylovProcess::step() {
    if (breakdown_) return false;
    if (k_ >= max_steps_)
        throw std::logic_error("KrylovProcess::step: past max_steps");

    const bool full_gs = mode_.kind == OrthMode::Kind::FullGramSchmidt;
    const DiamondVector& mk = full_gs ? history_.back() : cur_;

    DiamondVector w = apply_hamiltonian(mk, omega_, options_.diagonal);

    if (full_gs) {
        // modified Gram-Schmidt against the whole basis
        for (std::size_t j = 0; j < history_.size(); ++j) {
            const double coef = dot(w, history_[j]) / history_norm2_[j];
            add_scaled(w, -coef, history_[j]);
        }
    } else {
        const double alpha = dot(w, cur_) / cur_norm2_;
        add_scaled(w, -alpha, cur_);
        if (k_ >= 1) {
            const double beta = cur_norm2_ / prev_norm2_;
            add_scaled(w, -beta, prev_);
        }
        if (mode_.reorthogonalize_every &&
            (k_ + 1) % *mode_.reorthogonalize_every == 0) {
            for (std::size_t j = 0; j < history_.size(); ++j) {
                const double coef = dot(w, history_[j]) / history_norm2_[j];
                add_scaled(w, -coef, history_[j]);
            }
        }
    }

    double norm2 = w.squared_norm();
    if (!std::isfinite(norm2))
        throw std::overflow_error(
            "Krylov vector norm overflowed; use three-term recurrence mode");
    if (norm2 < options_.breakdown_rel_threshold) {  // |m_0|^2 == 1
        breakdown_ = true;
        return false;
    }

    if (full_gs) {
        history_.push_back(std::move(w));
        history_norm2_.push_back(norm2);
        cur_norm2_ = norm2;
    } else {
        prev_ = std::move(cur_);
        prev_norm2_ = cur_norm2_;
        cur_ = std::move(w);
        cur_norm2_ = norm2;
        if (cur_norm2_ > kRescaleTrigger) {
            const int e = (std::ilogb(cur_norm2_) + 1) / 2;
            const double f = std::ldexp(1.0, -e);
            cur_.scale(f);
            prev_.scale(f);
            cur_norm2_ *= f * f;
            prev_norm2_ *= f * f;
            scale_log2_ -= e;
        }
        if (mode_.reorthogonalize_every) {
            history_.push_back(cur_);
            history_norm2_.push_back(cur_norm2_);
        }
    }

    ++k_;
    record_current();
    return true;
}

void KrylovProcess::record_current() {
    const DiamondVector& mk =
        mode_.kind == OrthMode::Kind::FullGramSchmidt ? history_.back() : cur_;
    const double numerator = mk.at(kTarget);
    const double bessel = numerator * numerator / cur_norm2_;
    partial_sum_ += bessel;
    if (partial_sum_ > 1.0 + options_.degeneracy_tolerance)
        throw degeneracy_error(k_, partial_sum_);
    if (k_ >= 1)
        drift_ = std::max(drift_, std::abs(mk.at(kOrigin)) / std::sqrt(cur_norm2_));
    last_ = DistanceStep{k_, bessel, partial_sum_,
                         std::sqrt(std::max(0.0, 1.0 - partial_sum_))};
}

DistanceSeries run_krylov(const PotentialField& field, int n, OrthMode mode,
                          const KrylovOptions& options) {
    if (n < 1) throw std::invalid_argument("run_krylov: n must be >= 1");

    DistanceSeries series;
    series.c = field.half_width();
    series.seed = field.seed();
    series.realization = field.realization();
    series.mode = mode;
    series.terms.reserve(static_cast<std::size_t>(n) + 1);

    KrylovProcess process(field, n, mode, options);
    series.terms.push_back(process.last_step());
    while (process.k() < n && process.step()) series.terms.push_back(process.last_step());

    if (process.broke_down()) {
        series.breakdown = true;
        series.breakdown_step = process.k() + 1;
    }
    series.drift = process.drift();
    series.scale_log2 = process.scale_log2();
    return series;
}

DiamondVector orthogonal_vector(const PotentialField& field, int k, OrthMode mode,
                                const KrylovOptions& options) {
    if (k < 0) throw std::invalid_argument("orthogonal_vector: k must be >= 0");
    KrylovProcess process(field, k, mode, options);
    while (process.k() < k) {
        if (!process.step()) throw breakdown_error(process.k() + 1);
    }
    return process.current();
}

std::vector<DiamondVector> gram_schmidt_basis(const PotentialField& field, int n,
                                              const KrylovOptions& options) {
    if (n < 0) throw std::invalid_argument("gram_schmidt_basis: n must be >= 0");
    KrylovProcess process(field, n, OrthMode::full_gram_schmidt(), options);
    while (process.k() < n && process.step()) {
    }
    return process.basis();
}

}  // namespace krylov2d
