#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tanherf/errors.hpp"

namespace tanherf {

inline constexpr int kMaxGaussianComponents = 8;

struct GaussianComponent {
    double amplitude = 0.0;
    double width = 0.0;  // sigma_i > 0
};

// G(x) = sum_i a_i exp(-x^2 / (2 sigma_i^2)), all components centered at 0.
class GaussianSum {
public:
    GaussianSum() = default;
    explicit GaussianSum(std::vector<GaussianComponent> components);

    double value(double x) const;          // G(x)
    double d_xg_dx(double x) const;        // d/dx [x G(x)], analytic
    std::span<const GaussianComponent> components() const { return comps_; }
    std::size_t size() const { return comps_.size(); }

private:
    std::vector<GaussianComponent> comps_;
};

// F(x) ~ x G(x); odd by construction, accurate in the core.
double eval_inner(const GaussianSum& g, double x);

// F(x) ~ (1 - d/dx[x G(x)]) / (2x), from F' = 1 - 2xF; better in the tails,
// singular toward the origin, guarded at |x| >= 0.5.
double eval_outer(const GaussianSum& g, double x);

inline constexpr double kOuterGuard = 0.5;

struct SegmentedDawson {
    GaussianSum gsum;
    double crossover = 2.397;

    double value(double x) const;
    double operator()(double x) const { return value(x); }
};

// The published three-component parameter set; branches match at |x| = 2.397
// to within 5e-4.
GaussianSum builtin_g3();

struct FitReport {
    double max_err_inner = 0.0;      // vs dawson_ref on [-crossover, crossover]
    double rms_err_inner = 0.0;
    double max_err_segmented = 0.0;  // vs dawson_ref on [-10, 10]
    double rms_err_segmented = 0.0;
    double crossover = 2.397;
    double loss = 0.0;               // final weighted least-squares objective
    int restarts_used = 0;
    bool converged = false;
};

struct FitOptions {
    int multistarts = 20;
    std::uint64_t seed = 0x5eed5eedULL;
    int lawson_rounds = 6;   // worst-case flattening after the L2 stage
    int nm_max_iters = 4000;
};

// Least-squares fit of x G(x) against dawson_ref over the grid (default: 500
// uniform points on [0, 10]). Amplitudes are solved linearly for each width
// set (variable projection); widths move under Nelder-Mead in log space with
// seeded multistart; a few Lawson reweighting rounds then flatten the
// worst-case error. Throws fit_error only for a structurally failed solve;
// a fit that merely stalls is returned with converged = false.
std::pair<GaussianSum, FitReport> fit_gaussian_sum(
    int n, std::span<const double> x_grid = {},
    std::optional<GaussianSum> init = std::nullopt, const FitOptions& opts = {});

// Abscissa where the two branches intersect, nearest `near`; nullopt when no
// sign change exists in the scan window.
std::optional<double> solve_crossover(const GaussianSum& g, double near = 2.4);

// Error metrics of an existing parameter set (same fields the fitter reports).
FitReport approximation_report(const GaussianSum& g, double crossover);

}  // namespace tanherf
