#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tanherf/tanh_series.hpp"

namespace tanherf {

struct TuneOptions {
    double bracket_lo = 0.05;
    double bracket_hi = 2.0;
    double tol = 1e-6;        // convergence tolerance on alpha
    int grid_points = 4001;   // inner max-scan resolution on [0, grid_hi]
    double grid_hi = 8.0;
};

struct TuneReport {
    int lambda = 0;
    double alpha_opt = 0.0;
    double max_err = 0.0;
    std::vector<double> peak_locations;  // abscissae of the leading |err| extrema
    int iterations = 0;
    std::vector<std::pair<double, double>> error_curve;  // (x, erf - series) at alpha_opt
};

// Minimize g(alpha) = max_x |erf_ref(x) - series(lambda, alpha)(x)| by
// golden-section search over the bracket; the inner max is the
// grid-plus-refinement scan from max_abs_error. g is unimodal around the
// optimum for every order we ever tune, and derivative-free search sidesteps
// the transcendental structure of the exact dependence.
TuneReport tune_alpha(int lambda, const TuneOptions& opts = {});

// Log-log least-squares fit alpha ~ amplitude * lambda^exponent.
// Requires >= 3 reports with pairwise-distinct lambda.
std::pair<double, double> alpha_trend_fit(std::span<const TuneReport> reports);

// Same fit on raw (lambda, alpha) pairs.
std::pair<double, double> power_law_fit(std::span<const double> lambdas,
                                        std::span<const double> alphas);

}  // namespace tanherf
