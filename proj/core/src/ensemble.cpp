#include "krylov2d/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace krylov2d {

namespace {

void validate(const SweepConfig& config) {
    if (config.c_values.empty()) throw std::invalid_argument("run_sweep: empty c_values");
    for (double c : config.c_values)
        if (!(c >= 0.0)) throw std::invalid_argument("run_sweep: c values must be >= 0");
    if (config.realizations < 1)
        throw std::invalid_argument("run_sweep: realizations must be >= 1");
    if (config.n < 1) throw std::invalid_argument("run_sweep: n must be >= 1");
    if (config.n + 1 < config.effective_tail_start() + 3)
        throw std::invalid_argument("run_sweep: series too short for tail_start + 3 points");
}

RealizationResult run_one(const SweepConfig& config, double c, std::uint32_t realization) {
    RealizationResult result;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    try {
        const PotentialField field(c, config.seed, realization);
        const DistanceSeries series = run_krylov(field, config.n, config.mode, config.krylov);
        result.drift = series.drift;
        result.breakdown = series.breakdown;
        const int tail = config.effective_tail_start();
        if (series.breakdown &&
            series.terms.size() < static_cast<std::size_t>(tail) + 3) {
            // The subspace became invariant: the limit is the last distance.
            const double last = series.terms.back().distance;
            result.y = last;
            result.l = last;
            result.gamma = nan;
            result.sse = 0.0;
        } else {
            const FitResult fit = fit_intercept(series, config.gamma_grid, tail);
            result.y = fit.intercept_y;
            result.l = fit.l_lower;
            result.gamma = fit.gamma;
            result.sse = fit.sse;
        }
    } catch (const degeneracy_error& e) {
        result.degenerate = true;
        result.error = e.what();
        result.y = result.l = result.gamma = result.sse = nan;
    } catch (const std::overflow_error& e) {
        result.degenerate = true;
        result.error = e.what();
        result.y = result.l = result.gamma = result.sse = nan;
    }
    return result;
}

}  // namespace

unsigned default_thread_count() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

std::vector<EnsembleRecord> run_sweep(const SweepConfig& config, unsigned threads) {
    validate(config);

    std::vector<double> cs = config.c_values;
    std::sort(cs.begin(), cs.end());

    const std::size_t r = static_cast<std::size_t>(config.realizations);
    const std::size_t jobs = cs.size() * r;
    std::vector<RealizationResult> results(jobs);

    if (threads == 0) threads = default_thread_count();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t job = next.fetch_add(1); job < jobs; job = next.fetch_add(1)) {
            const double c = cs[job / r];
            const std::uint32_t realization = static_cast<std::uint32_t>(job % r);
            results[job] = run_one(config, c, realization);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::vector<EnsembleRecord> records;
    records.reserve(cs.size());
    for (std::size_t ci = 0; ci < cs.size(); ++ci) {
        EnsembleRecord record;
        record.c = cs[ci];
        record.runs.assign(results.begin() + static_cast<std::ptrdiff_t>(ci * r),
                           results.begin() + static_cast<std::ptrdiff_t>((ci + 1) * r));
        record.min_y = std::numeric_limits<double>::quiet_NaN();
        record.min_l = std::numeric_limits<double>::quiet_NaN();
        for (std::size_t t = 0; t < record.runs.size(); ++t) {
            const RealizationResult& run = record.runs[t];
            if (run.degenerate) continue;
            if (!record.valid || run.y < record.min_y) {
                record.min_y = run.y;
                record.argmin_y = static_cast<int>(t);
            }
            if (!record.valid || run.l < record.min_l) {
                record.min_l = run.l;
                record.argmin_l = static_cast<int>(t);
            }
            record.valid = true;
        }
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace krylov2d
