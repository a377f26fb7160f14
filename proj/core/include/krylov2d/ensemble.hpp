#ifndef KRYLOV2D_ENSEMBLE_HPP
#define KRYLOV2D_ENSEMBLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "krylov2d/estimate.hpp"
#include "krylov2d/krylov.hpp"

namespace krylov2d {

struct SweepConfig {
    std::vector<double> c_values;
    int realizations = 20;
    int n = 400;
    std::uint64_t seed = 1;
    OrthMode mode = OrthMode::three_term();
    std::vector<double> gamma_grid = default_gamma_grid();
    int tail_start = -1;  // -1: use n / 2
    KrylovOptions krylov{};

    int effective_tail_start() const { return tail_start < 0 ? n / 2 : tail_start; }
};

struct RealizationResult {
    double y = 0.0;
    double l = 0.0;
    double gamma = 0.0;
    double sse = 0.0;
    double drift = 0.0;
    bool breakdown = false;
    bool degenerate = false;  // numerical failure; y/l/gamma/sse are NaN
    std::string error;
};

/// Aggregate over all realizations at one disorder value. min_y and min_l
/// are independent minima over the valid realizations, matching the
/// smallest-value aggregation of the ensemble; argmin indices let either
/// joint reading be reconstructed.
struct EnsembleRecord {
    double c = 0.0;
    double min_y = 0.0;
    double min_l = 0.0;
    int argmin_y = -1;
    int argmin_l = -1;
    bool valid = false;  // false when every realization failed numerically
    std::vector<RealizationResult> runs;
};

/// Runs the (c, realization) grid, fits every series, and aggregates minima
/// per disorder value. Records are sorted by c ascending. The output is a
/// pure function of the config: thread count only changes scheduling, never
/// a bit of the result. Numerical degeneracy is flagged per realization and
/// never aborts the sweep.
std::vector<EnsembleRecord> run_sweep(const SweepConfig& config, unsigned threads = 0);

/// Thread count used when `threads` is 0 (hardware concurrency).
unsigned default_thread_count();

}  // namespace krylov2d

#endif
