#include "tanherf/tuner.hpp"

#include <algorithm>
#include <cmath>

#include "tanherf/reffuncs.hpp"

namespace tanherf {

namespace {

double inner_max(int lambda, double alpha, std::span<const double> grid) {
    return max_abs_error(TanhSeries::build(lambda, alpha), grid).err;
}

// Local maxima of |err| on the grid, refined and sorted by height.
std::vector<std::pair<double, double>> error_peaks(const TanhSeries& series,
                                                   std::span<const double> grid) {
    std::vector<long double> e(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        e[i] = std::fabs(erf_ref(grid[i]) - static_cast<long double>(series.value(grid[i])));

    std::vector<std::pair<double, double>> peaks;  // (x, height)
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        if (e[i] >= e[i - 1] && e[i] >= e[i + 1] && e[i] > 0.0L) {
            const std::span<const double> window = grid.subspan(i - 1, 3);
            const MaxErrorResult r = max_abs_error(series, window);
            peaks.emplace_back(r.x, r.err);
        }
    }
    std::sort(peaks.begin(), peaks.end(),
              [](const auto& a, const auto& b) { return a.second > b.second; });
    return peaks;
}

}  // namespace

TuneReport tune_alpha(int lambda, const TuneOptions& opts) {
    if (!(opts.bracket_lo > 0.0) || !(opts.bracket_hi > opts.bracket_lo))
        throw argument_error("tune_alpha: invalid bracket");
    if (!(opts.tol > 0.0)) throw argument_error("tune_alpha: tol must be positive");

    const std::vector<double> grid = uniform_grid(0.0, opts.grid_hi, opts.grid_points);

    constexpr double invphi = 0.6180339887498948482;
    double a = opts.bracket_lo, b = opts.bracket_hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = inner_max(lambda, x1, grid);
    double f2 = inner_max(lambda, x2, grid);
    int iters = 0;
    while (b - a > opts.tol) {
        if (f1 > f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = inner_max(lambda, x2, grid);
        } else {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = inner_max(lambda, x1, grid);
        }
        ++iters;
    }
    // Ties below tol resolve to the smaller alpha.
    const double alpha_opt = (f1 <= f2) ? x1 : x2;

    if (alpha_opt - opts.bracket_lo < 2.0 * opts.tol ||
        opts.bracket_hi - alpha_opt < 2.0 * opts.tol)
        throw bracket_error("tune_alpha: minimum sits on the bracket edge; widen the bracket");

    const TanhSeries best = TanhSeries::build(lambda, alpha_opt);
    TuneReport report;
    report.lambda = lambda;
    report.alpha_opt = alpha_opt;
    report.iterations = iters;
    report.max_err = max_abs_error(best, grid).err;

    auto peaks = error_peaks(best, grid);
    for (std::size_t i = 0; i < peaks.size() && i < 4; ++i)
        report.peak_locations.push_back(peaks[i].first);

    report.error_curve.reserve(grid.size());
    for (double x : grid)
        report.error_curve.emplace_back(
            x, static_cast<double>(erf_ref(x) - static_cast<long double>(best.value(x))));
    return report;
}

std::pair<double, double> power_law_fit(std::span<const double> lambdas,
                                        std::span<const double> alphas) {
    if (lambdas.size() != alphas.size())
        throw argument_error("power_law_fit: size mismatch");
    if (lambdas.size() < 3)
        throw argument_error("power_law_fit: need at least 3 points");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (!(lambdas[i] > 0.0) || !(alphas[i] > 0.0))
            throw argument_error("power_law_fit: points must be positive");
        for (std::size_t j = i + 1; j < lambdas.size(); ++j)
            if (lambdas[i] == lambdas[j])
                throw argument_error("power_law_fit: duplicate lambda makes the fit degenerate");
    }

    const std::size_t n = lambdas.size();
    double mx = 0.0, my = 0.0;
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        lx[i] = std::log(lambdas[i]);
        ly[i] = std::log(alphas[i]);
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    const double exponent = sxy / sxx;
    const double amplitude = std::exp(my - exponent * mx);
    return {amplitude, exponent};
}

std::pair<double, double> alpha_trend_fit(std::span<const TuneReport> reports) {
    std::vector<double> lams, alps;
    lams.reserve(reports.size());
    alps.reserve(reports.size());
    for (const auto& r : reports) {
        lams.push_back(static_cast<double>(r.lambda));
        alps.push_back(r.alpha_opt);
    }
    return power_law_fit(lams, alps);
}

}  // namespace tanherf
