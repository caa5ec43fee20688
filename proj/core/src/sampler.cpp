#include "tanherf/sampler.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace tanherf {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
}

std::uint64_t Xoshiro256pp::next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256pp::next_open01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

double invert_cdf(const TanhSeries& series, double u, const InversionOptions& opts) {
    if (!(u > 0.0) || !(u < 1.0))
        throw domain_error("invert_cdf: u must lie in (0, 1)");
    if (u == 0.5) return 0.0;
    if (u < 0.5) return -invert_cdf(series, 1.0 - u, opts);

    const double y = 2.0 * u - 1.0;  // target series value, in (0, 1)
    if (series.order() == 1)
        return std::atanh(y) / series.alpha();

    // Bracket [lo, hi] with series(hi) >= y.
    double lo = 0.0;
    double hi = 1.0 / series.alpha();
    for (int i = 0; i < 80 && series.value(hi) < y; ++i) hi *= 2.0;

    double x = std::min(std::atanh(y) / series.alpha(), hi);
    for (int it = 0; it < opts.max_newton_iters; ++it) {
        const double f = series.value(x) - y;
        if (std::fabs(f) <= 2.0 * opts.tol) return x;
        if (f < 0.0) lo = x; else hi = x;
        const double d = series.derivative(x);
        double next = (d > 0.0) ? x - f / d : lo - 1.0;
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        x = next;
    }
    if (std::fabs(series.value(x) - y) <= 2.0 * opts.tol) return x;
    throw accuracy_error("invert_cdf: iteration cap exceeded before reaching tolerance");
}

SamplerStream::SamplerStream(TanhSeries series, std::uint64_t seed, InversionOptions opts)
    : series_(std::move(series)), rng_(seed), opts_(opts) {
    if (!(opts_.tol > 0.0)) throw argument_error("SamplerStream: inversion tol must be positive");
}

double SamplerStream::sample() { return invert_cdf(series_, rng_.next_open01(), opts_); }

std::vector<double> SamplerStream::sample_n(std::size_t n) {
    std::vector<double> out(n);
    for (auto& v : out) v = sample();
    return out;
}

Histogram make_histogram(std::span<const double> samples, int bins, double lo, double hi) {
    if (bins < 1 || !(hi > lo)) throw argument_error("make_histogram: bad binning");
    Histogram h;
    h.bin_width = (hi - lo) / bins;
    h.centers.resize(bins);
    h.counts.assign(bins, 0.0);
    for (int i = 0; i < bins; ++i) h.centers[i] = lo + (i + 0.5) * h.bin_width;
    for (double s : samples) {
        if (s < lo || s >= hi) continue;
        const int i = static_cast<int>((s - lo) / h.bin_width);
        h.counts[std::min(i, bins - 1)] += 1.0;
    }
    return h;
}

HistogramFit fit_histogram(std::span<const double> samples, int bins, double lo, double hi) {
    if (samples.size() < 10000)
        throw argument_error("fit_histogram: need at least 1e4 samples");
    if (bins < 10) throw argument_error("fit_histogram: need at least 10 bins");

    const Histogram h = make_histogram(samples, bins, lo, hi);

    double mean0 = 0.0;
    for (double s : samples) mean0 += s;
    mean0 /= static_cast<double>(samples.size());
    double var0 = 0.0;
    for (double s : samples) var0 += (s - mean0) * (s - mean0);
    var0 /= static_cast<double>(samples.size());

    double amp = *std::max_element(h.counts.begin(), h.counts.end());
    double mu = mean0;
    double sigma = 0.9 * std::sqrt(var0);
    if (!(amp > 0.0) || !(sigma > 0.0))
        throw argument_error("fit_histogram: degenerate sample set");

    const int n = bins;
    Eigen::VectorXd w(n);
    for (int i = 0; i < n; ++i) w[i] = 1.0 / std::sqrt(std::max(h.counts[i], 1.0));

    // Levenberg-Marquardt on r_i = w_i * (count_i - A exp(-(x_i-mu)^2/(2 s^2)))
    double lm = 1e-3;
    double prev_cost = -1.0;
    for (int it = 0; it < 200; ++it) {
        Eigen::VectorXd r(n);
        Eigen::MatrixXd J(n, 3);
        double cost = 0.0;
        for (int i = 0; i < n; ++i) {
            const double dx = h.centers[i] - mu;
            const double e = std::exp(-dx * dx / (2.0 * sigma * sigma));
            const double m = amp * e;
            r[i] = w[i] * (h.counts[i] - m);
            J(i, 0) = -w[i] * e;
            J(i, 1) = -w[i] * m * dx / (sigma * sigma);
            J(i, 2) = -w[i] * m * dx * dx / (sigma * sigma * sigma);
            cost += r[i] * r[i];
        }
        Eigen::Matrix3d JtJ = J.transpose() * J;
        Eigen::Vector3d g = J.transpose() * r;
        JtJ.diagonal() *= 1.0 + lm;
        Eigen::Vector3d step = JtJ.ldlt().solve(-g);

        const double amp2 = amp + step[0];
        const double mu2 = mu + step[1];
        const double sigma2 = sigma + step[2];
        double cost2 = 0.0;
        if (amp2 > 0.0 && sigma2 > 0.0) {
            for (int i = 0; i < n; ++i) {
                const double dx = h.centers[i] - mu2;
                const double m = amp2 * std::exp(-dx * dx / (2.0 * sigma2 * sigma2));
                const double ri = w[i] * (h.counts[i] - m);
                cost2 += ri * ri;
            }
        } else {
            cost2 = cost + 1.0;
        }
        if (cost2 < cost) {
            amp = amp2; mu = mu2; sigma = sigma2;
            lm = std::max(lm * 0.3, 1e-12);
            if (prev_cost >= 0.0 && std::fabs(prev_cost - cost2) <= 1e-12 * cost2) break;
            prev_cost = cost2;
        } else {
            lm *= 10.0;
            if (lm > 1e12) break;
        }
    }

    double chi2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double dx = h.centers[i] - mu;
        const double m = amp * std::exp(-dx * dx / (2.0 * sigma * sigma));
        chi2 += (h.counts[i] - m) * (h.counts[i] - m) / std::max(h.counts[i], 1.0);
    }

    HistogramFit fit;
    fit.mean = mu;
    fit.sigma = std::fabs(sigma);
    fit.n_samples = samples.size();
    fit.bin_width = h.bin_width;
    fit.chi2_per_dof = chi2 / std::max(1, n - 3);
    return fit;
}

SamplerPreset preset_by_name(std::string_view name) {
    if (name == "bassett") return {1, 2.0 * std::numbers::inv_sqrtpi};
    if (name == "opt1") return {1, 1.203315};
    if (name == "opt2") return {2, 0.7865};
    throw argument_error("unknown preset: " + std::string(name) +
                         " (expected bassett, opt1 or opt2)");
}

}  // namespace tanherf
