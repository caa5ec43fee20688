#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "tanherf/tanh_series.hpp"

namespace tanherf {

// xoshiro256++ (Blackman & Vigna), seeded through splitmix64 so any 64-bit
// seed yields a well-mixed state. Reproducible by construction; not for
// cryptography.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed);
    std::uint64_t next();

    // (k + 0.5) * 2^-53 from the top 53 bits: strictly inside (0, 1),
    // so no rejection loop is needed.
    double next_open01();

private:
    std::uint64_t s_[4];
};

struct InversionOptions {
    double tol = 1e-12;         // on |CDF(x) - u|
    int max_newton_iters = 64;
};

// Solve (1 + series(x))/2 = u. Closed form for order 1; safeguarded Newton
// with a bisection fallback otherwise (the CDF is strictly increasing, so the
// bracket never loses the root).
double invert_cdf(const TanhSeries& series, double u, const InversionOptions& opts = {});

class SamplerStream {
public:
    SamplerStream(TanhSeries series, std::uint64_t seed, InversionOptions opts = {});

    double sample();
    std::vector<double> sample_n(std::size_t n);

    const TanhSeries& series() const { return series_; }

private:
    TanhSeries series_;
    Xoshiro256pp rng_;
    InversionOptions opts_;
};

struct HistogramFit {
    double mean = 0.0;
    double sigma = 0.0;
    std::size_t n_samples = 0;
    double bin_width = 0.0;
    double chi2_per_dof = 0.0;
};

struct Histogram {
    std::vector<double> centers;
    std::vector<double> counts;
    double bin_width = 0.0;
};

Histogram make_histogram(std::span<const double> samples, int bins, double lo, double hi);

// Gaussian amplitude/mean/sigma fit to binned counts by Levenberg-Marquardt,
// chi^2-weighted with per-bin sigma = sqrt(max(n_i, 1)). Requires at least
// 1e4 samples and 10 bins.
HistogramFit fit_histogram(std::span<const double> samples, int bins = 200,
                           double lo = -4.0, double hi = 4.0);

// Named generator presets.
struct SamplerPreset {
    int lambda;
    double alpha;
};

// "bassett" (order 1, alpha = 2/sqrt(pi)), "opt1" (order 1, alpha = 1.203315),
// "opt2" (order 2, alpha = 0.7865; alpha chosen for width, not worst-case error).
SamplerPreset preset_by_name(std::string_view name);

}  // namespace tanherf
