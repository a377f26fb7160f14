#ifndef KRYLOV2D_ESTIMATE_HPP
#define KRYLOV2D_ESTIMATE_HPP

#include <vector>

#include "krylov2d/krylov.hpp"

namespace krylov2d {

/// Extrapolation of the distance limit from a finite series.
///
/// The tail points (k, D_k), k >= max(tail_start, 1), are rescaled to
/// x_k = k^(-gamma) and fitted with an ordinary least-squares line; gamma is
/// chosen from a grid by minimal squared residual (ties toward smaller
/// gamma). intercept_y, the line's value at x = 0, estimates lim D_k.
/// l_lower is the smallest y-intercept among lines through consecutive
/// rescaled points (same tail, chosen gamma), clamped below at -1.
struct FitResult {
    double gamma = 0.0;
    double intercept_y = 0.0;
    double sse = 0.0;
    double l_lower = 0.0;
    int tail_start = 0;
};

FitResult fit_intercept(const DistanceSeries& series, const std::vector<double>& gamma_grid,
                        int tail_start);

double lower_estimate(const DistanceSeries& series, double gamma, int tail_start);

/// Default exponent grid 0.10, 0.15, ..., 2.00.
std::vector<double> default_gamma_grid();

}  // namespace krylov2d

#endif
