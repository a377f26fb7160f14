#include "krylov2d/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace krylov2d {

namespace {

struct Line {
    double intercept;
    double slope;
    double sse;
};

// OLS on (k^(-gamma), D_k) over the usable tail.
Line fit_line(const std::vector<DistanceStep>& terms, std::size_t first, double gamma) {
    const std::size_t m = terms.size() - first;
    double sx = 0.0, sy = 0.0;
    std::vector<double> xs(m);
    for (std::size_t t = 0; t < m; ++t) {
        xs[t] = std::pow(static_cast<double>(terms[first + t].k), -gamma);
        sx += xs[t];
        sy += terms[first + t].distance;
    }
    const double xbar = sx / static_cast<double>(m);
    const double ybar = sy / static_cast<double>(m);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
        const double dx = xs[t] - xbar;
        sxx += dx * dx;
        sxy += dx * (terms[first + t].distance - ybar);
    }
    const double slope = sxy / sxx;  // sxx > 0: the x_k are strictly decreasing
    const double intercept = ybar - slope * xbar;
    double sse = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
        const double r = terms[first + t].distance - (intercept + slope * xs[t]);
        sse += r * r;
    }
    return {intercept, slope, sse};
}

// index of the first term with k >= max(tail_start, 1)
std::size_t first_tail_index(const DistanceSeries& series, int tail_start) {
    const int k0 = std::max(tail_start, 1);
    for (std::size_t t = 0; t < series.terms.size(); ++t)
        if (series.terms[t].k >= k0) return t;
    return series.terms.size();
}

}  // namespace

FitResult fit_intercept(const DistanceSeries& series, const std::vector<double>& gamma_grid,
                        int tail_start) {
    if (tail_start < 0) throw std::invalid_argument("fit_intercept: tail_start must be >= 0");
    if (gamma_grid.empty()) throw std::invalid_argument("fit_intercept: empty gamma grid");
    for (double g : gamma_grid)
        if (!(g > 0.0)) throw std::invalid_argument("fit_intercept: gamma must be positive");
    if (series.terms.size() < static_cast<std::size_t>(tail_start) + 3)
        throw std::invalid_argument("fit_intercept: series shorter than tail_start + 3");

    const std::size_t first = first_tail_index(series, tail_start);
    if (series.terms.size() - first < 2)
        throw std::invalid_argument("fit_intercept: fewer than 2 usable tail points");

    double best_gamma = 0.0, best_sse = 0.0, best_intercept = 0.0;
    bool have_best = false;
    for (double gamma : gamma_grid) {
        const Line line = fit_line(series.terms, first, gamma);
        // strict comparisons keep the selection independent of grid order
        if (!have_best || line.sse < best_sse ||
            (line.sse == best_sse && gamma < best_gamma)) {
            have_best = true;
            best_gamma = gamma;
            best_sse = line.sse;
            best_intercept = line.intercept;
        }
    }

    FitResult result;
    result.gamma = best_gamma;
    result.intercept_y = best_intercept;
    result.sse = best_sse;
    result.tail_start = tail_start;
    result.l_lower = lower_estimate(series, best_gamma, tail_start);
    return result;
}

double lower_estimate(const DistanceSeries& series, double gamma, int tail_start) {
    if (!(gamma > 0.0)) throw std::invalid_argument("lower_estimate: gamma must be positive");
    if (tail_start < 0) throw std::invalid_argument("lower_estimate: tail_start must be >= 0");
    const std::size_t first = first_tail_index(series, tail_start);
    if (series.terms.size() - first < 2)
        throw std::invalid_argument("lower_estimate: fewer than 2 usable points");

    double lowest = std::numeric_limits<double>::infinity();
    double xk = std::pow(static_cast<double>(series.terms[first].k), -gamma);
    for (std::size_t t = first; t + 1 < series.terms.size(); ++t) {
        const double yk = series.terms[t].distance;
        const double xn = std::pow(static_cast<double>(series.terms[t + 1].k), -gamma);
        const double yn = series.terms[t + 1].distance;
        const double slope = (yn - yk) / (xn - xk);  // x strictly decreasing, never 0/0
        lowest = std::min(lowest, yk - slope * xk);
        xk = xn;
    }
    return std::max(lowest, -1.0);  // diagnostic floor
}

std::vector<double> default_gamma_grid() {
    std::vector<double> grid;
    grid.reserve(39);
    for (int t = 10; t <= 200; t += 5) grid.push_back(static_cast<double>(t) / 100.0);
    return grid;
}

}  // namespace krylov2d
