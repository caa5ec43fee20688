#include "tanherf/dawson_approx.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tanherf/reffuncs.hpp"
#include "tanherf/sampler.hpp"
#include "tanherf/tanh_series.hpp"

namespace tanherf {

GaussianSum::GaussianSum(std::vector<GaussianComponent> components)
    : comps_(std::move(components)) {
    if (comps_.empty()) throw argument_error("GaussianSum: need at least one component");
    for (const auto& c : comps_)
        if (!(c.width > 0.0)) throw argument_error("GaussianSum: widths must be positive");
}

double GaussianSum::value(double x) const {
    const double x2 = x * x;
    double g = 0.0;
    for (const auto& c : comps_) g += c.amplitude * std::exp(-0.5 * x2 / (c.width * c.width));
    return g;
}

double GaussianSum::d_xg_dx(double x) const {
    const double x2 = x * x;
    double d = 0.0;
    for (const auto& c : comps_) {
        const double s2 = c.width * c.width;
        d += c.amplitude * (1.0 - x2 / s2) * std::exp(-0.5 * x2 / s2);
    }
    return d;
}

double eval_inner(const GaussianSum& g, double x) {
    if (!std::isfinite(x)) throw domain_error("eval_inner: non-finite argument");
    return x * g.value(x);
}

double eval_outer(const GaussianSum& g, double x) {
    if (!std::isfinite(x)) throw domain_error("eval_outer: non-finite argument");
    if (std::fabs(x) < kOuterGuard)
        throw domain_error("eval_outer: |x| must be >= 0.5 (1/x pole at the origin)");
    return (1.0 - g.d_xg_dx(x)) / (2.0 * x);
}

double SegmentedDawson::value(double x) const {
    if (!std::isfinite(x)) throw domain_error("SegmentedDawson: non-finite argument");
    return std::fabs(x) <= crossover ? eval_inner(gsum, x) : eval_outer(gsum, x);
}

GaussianSum builtin_g3() {
    return GaussianSum({{0.805, 0.825}, {0.152, 1.804}, {0.025, 5.536}});
}

namespace {

// Weighted linear solve of the amplitudes for fixed widths: columns
// x * exp(-x^2/(2 s_j^2)), target dawson_ref(x).
struct AmplitudeSolve {
    Eigen::VectorXd amps;
    double loss = 0.0;
};

AmplitudeSolve solve_amplitudes(const std::vector<double>& widths,
                                std::span<const double> xs,
                                const Eigen::VectorXd& target,
                                const Eigen::VectorXd& weights) {
    const int m = static_cast<int>(xs.size());
    const int n = static_cast<int>(widths.size());
    Eigen::MatrixXd M(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            M(i, j) = xs[i] * std::exp(-0.5 * xs[i] * xs[i] / (widths[j] * widths[j]));

    const Eigen::VectorXd w = weights.array().sqrt();
    AmplitudeSolve out;
    out.amps = (M.array().colwise() * w.array()).matrix()
                   .colPivHouseholderQr()
                   .solve((target.array() * w.array()).matrix());
    const Eigen::VectorXd r = (M * out.amps - target).array() * w.array();
    out.loss = r.squaredNorm();
    return out;
}

double projected_loss(const std::vector<double>& log_widths,
                      std::span<const double> xs, const Eigen::VectorXd& target,
                      const Eigen::VectorXd& weights) {
    std::vector<double> widths(log_widths.size());
    for (std::size_t i = 0; i < widths.size(); ++i) widths[i] = std::exp(log_widths[i]);
    return solve_amplitudes(widths, xs, target, weights).loss;
}

// Plain Nelder-Mead over log-widths. Deterministic for a fixed start.
std::pair<std::vector<double>, double> nelder_mead(
    std::vector<double> start, std::span<const double> xs,
    const Eigen::VectorXd& target, const Eigen::VectorXd& weights, int max_iters) {
    const int n = static_cast<int>(start.size());
    std::vector<std::vector<double>> pts(n + 1, start);
    std::vector<double> f(n + 1);
    for (int i = 0; i < n; ++i) pts[i + 1][i] += 0.2;
    for (int i = 0; i <= n; ++i) f[i] = projected_loss(pts[i], xs, target, weights);

    for (int it = 0; it < max_iters; ++it) {
        std::vector<int> idx(n + 1);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return f[a] < f[b]; });
        {
            std::vector<std::vector<double>> p2(n + 1);
            std::vector<double> f2(n + 1);
            for (int i = 0; i <= n; ++i) { p2[i] = pts[idx[i]]; f2[i] = f[idx[i]]; }
            pts = std::move(p2);
            f = std::move(f2);
        }
        if (std::fabs(f[n] - f[0]) <= 1e-15 + 1e-12 * std::fabs(f[0])) break;

        std::vector<double> centroid(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) centroid[j] += pts[i][j] / n;

        auto blend = [&](double coef) {
            std::vector<double> p(n);
            for (int j = 0; j < n; ++j) p[j] = centroid[j] + coef * (pts[n][j] - centroid[j]);
            return p;
        };

        const auto refl = blend(-1.0);
        const double fr = projected_loss(refl, xs, target, weights);
        if (fr < f[0]) {
            const auto exp_ = blend(-2.0);
            const double fe = projected_loss(exp_, xs, target, weights);
            if (fe < fr) { pts[n] = exp_; f[n] = fe; }
            else         { pts[n] = refl; f[n] = fr; }
        } else if (fr < f[n - 1]) {
            pts[n] = refl; f[n] = fr;
        } else {
            const auto con = blend(0.5);
            const double fc = projected_loss(con, xs, target, weights);
            if (fc < f[n]) { pts[n] = con; f[n] = fc; }
            else {
                for (int i = 1; i <= n; ++i) {
                    for (int j = 0; j < n; ++j) pts[i][j] = 0.5 * (pts[i][j] + pts[0][j]);
                    f[i] = projected_loss(pts[i], xs, target, weights);
                }
            }
        }
    }
    int best = 0;
    for (int i = 1; i <= n; ++i)
        if (f[i] < f[best]) best = i;
    return {pts[best], f[best]};
}

GaussianSum assemble(const std::vector<double>& log_widths, std::span<const double> xs,
                     const Eigen::VectorXd& target, const Eigen::VectorXd& weights) {
    std::vector<double> widths(log_widths.size());
    for (std::size_t i = 0; i < widths.size(); ++i) widths[i] = std::exp(log_widths[i]);
    const auto sol = solve_amplitudes(widths, xs, target, weights);
    std::vector<GaussianComponent> comps(widths.size());
    for (std::size_t i = 0; i < widths.size(); ++i)
        comps[i] = {sol.amps[static_cast<int>(i)], widths[i]};
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.width < b.width; });
    return GaussianSum(std::move(comps));
}

}  // namespace

std::optional<double> solve_crossover(const GaussianSum& g, double near) {
    const auto diff = [&](double x) { return eval_inner(g, x) - eval_outer(g, x); };
    constexpr double lo = kOuterGuard + 0.1;
    constexpr double hi = 6.0;
    constexpr int steps = 4000;
    std::vector<double> roots;
    double prev_x = lo, prev_f = diff(lo);
    for (int i = 1; i <= steps; ++i) {
        const double x = lo + (hi - lo) * i / steps;
        const double fx = diff(x);
        if (prev_f == 0.0 || (prev_f < 0.0) != (fx < 0.0)) {
            double a = prev_x, b = x, fa = prev_f;
            for (int it = 0; it < 80; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = diff(m);
                if ((fa < 0.0) == (fm < 0.0)) { a = m; fa = fm; }
                else b = m;
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev_f = fx;
    }
    if (roots.empty()) return std::nullopt;
    return *std::min_element(roots.begin(), roots.end(), [&](double a, double b) {
        return std::fabs(a - near) < std::fabs(b - near);
    });
}

FitReport approximation_report(const GaussianSum& g, double crossover) {
    FitReport rep;
    rep.crossover = crossover;

    const auto inner_grid = uniform_grid(-crossover, crossover, 4001);
    double sum2 = 0.0;
    for (double x : inner_grid) {
        const double e = std::fabs(eval_inner(g, x) - static_cast<double>(dawson_ref(x)));
        rep.max_err_inner = std::max(rep.max_err_inner, e);
        sum2 += e * e;
    }
    rep.rms_err_inner = std::sqrt(sum2 / inner_grid.size());

    const SegmentedDawson seg{g, crossover};
    const auto wide_grid = uniform_grid(-10.0, 10.0, 8001);
    sum2 = 0.0;
    for (double x : wide_grid) {
        const double e = std::fabs(seg.value(x) - static_cast<double>(dawson_ref(x)));
        rep.max_err_segmented = std::max(rep.max_err_segmented, e);
        sum2 += e * e;
    }
    rep.rms_err_segmented = std::sqrt(sum2 / wide_grid.size());
    return rep;
}

std::pair<GaussianSum, FitReport> fit_gaussian_sum(int n, std::span<const double> x_grid,
                                                   std::optional<GaussianSum> init,
                                                   const FitOptions& opts) {
    if (n < 1 || n > kMaxGaussianComponents)
        throw argument_error("fit_gaussian_sum: component count must be in [1, 8]");

    std::vector<double> default_grid;
    if (x_grid.empty()) {
        default_grid = uniform_grid(0.0, 10.0, 500);
        x_grid = default_grid;
    }
    const auto [min_it, max_it] = std::minmax_element(x_grid.begin(), x_grid.end());
    if (*min_it > 0.0 || *max_it < 5.0)
        throw argument_error("fit_gaussian_sum: grid must span at least [0, 5]");

    const int m = static_cast<int>(x_grid.size());
    Eigen::VectorXd target(m);
    for (int i = 0; i < m; ++i) target[i] = static_cast<double>(dawson_ref(x_grid[i]));
    Eigen::VectorXd weights = Eigen::VectorXd::Ones(m);

    // Stage 1: multistart L2 over log-widths.
    Xoshiro256pp rng(opts.seed);
    std::vector<double> best_logs;
    double best_loss = std::numeric_limits<double>::infinity();
    int used = 0;
    for (int trial = 0; trial < opts.multistarts; ++trial) {
        std::vector<double> start(n);
        if (trial == 0 && init && static_cast<int>(init->size()) == n) {
            for (int j = 0; j < n; ++j) start[j] = std::log(init->components()[j].width);
        } else if (trial == 0) {
            for (int j = 0; j < n; ++j)
                start[j] = std::log(0.5) + (n > 1 ? j * (std::log(5.0) - std::log(0.5)) / (n - 1) : 0.0);
        } else {
            for (int j = 0; j < n; ++j) {
                const double u = rng.next_open01();
                start[j] = std::log(0.3) + u * (std::log(8.0) - std::log(0.3));
            }
        }
        auto [logs, loss] = nelder_mead(std::move(start), x_grid, target, weights,
                                        opts.nm_max_iters);
        ++used;
        if (loss < best_loss) {
            best_loss = loss;
            best_logs = std::move(logs);
        }
    }
    if (!std::isfinite(best_loss))
        throw fit_error("fit_gaussian_sum: every restart failed");

    // Stage 2: Lawson reweighting pulls the L2 solution toward the minimax
    // one; a handful of rounds is enough to flatten the error peaks.
    for (int round = 0; round < opts.lawson_rounds; ++round) {
        std::vector<double> widths(best_logs.size());
        for (std::size_t i = 0; i < widths.size(); ++i) widths[i] = std::exp(best_logs[i]);
        const auto sol = solve_amplitudes(widths, x_grid, target, weights);
        Eigen::MatrixXd M(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                M(i, j) = x_grid[i] * std::exp(-0.5 * x_grid[i] * x_grid[i] / (widths[j] * widths[j]));
        const Eigen::VectorXd r = (M * sol.amps - target).cwiseAbs();
        weights = weights.array() * (r.array() + 1e-14);
        weights *= m / weights.sum();
        auto [logs, loss] = nelder_mead(best_logs, x_grid, target, weights, opts.nm_max_iters);
        best_logs = std::move(logs);
        best_loss = loss;
    }

    GaussianSum fitted = assemble(best_logs, x_grid, target, weights);

    const double crossover = solve_crossover(fitted).value_or(2.397);
    FitReport rep = approximation_report(fitted, crossover);
    rep.loss = best_loss;
    rep.restarts_used = used;
    rep.converged = std::isfinite(best_loss);
    return {std::move(fitted), rep};
}

}  // namespace tanherf
