#include "tanherf/tanh_series.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

#include "tanherf/reffuncs.hpp"

namespace tanherf {

namespace {

void require_order(int lambda) {
    if (lambda < 1 || lambda > kMaxSeriesOrder)
        throw unsupported_order_error("series order must be in [1, 64], got " +
                                      std::to_string(lambda));
}

void require_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw argument_error("alpha must be positive and finite");
}

// log(cosh(z)), overflow-safe.
long double log_cosh(long double z) {
    z = std::fabs(z);
    return z + std::log1p(std::exp(-2.0L * z)) - std::numbers::ln2_v<long double>;
}

}  // namespace

Rational prefactor_exact(int lambda) {
    require_order(lambda);
    BigInt num = double_factorial_odd(2 * lambda - 1);
    BigInt den = BigInt(1) << (lambda - 1);
    for (int i = 2; i < lambda; ++i) den *= i;
    return Rational(num, den);
}

TanhSeries TanhSeries::build(int lambda, double alpha) {
    require_order(lambda);
    require_alpha(alpha);

    const Rational pref = prefactor_exact(lambda);
    TanhSeries s;
    s.lambda_ = lambda;
    s.alpha_ = alpha;
    s.exact_coeffs_.reserve(lambda);
    s.coeffs_.reserve(lambda);

    Rational sum = 0;
    for (int k = 0; k < lambda; ++k) {
        Rational c = pref * Rational(binomial(lambda - 1, k), 2 * k + 1);
        if (k % 2 == 1) c = -c;
        sum += c;
        s.exact_coeffs_.push_back(c);
        s.coeffs_.push_back(static_cast<double>(c));
    }
    if (sum != 1)
        throw std::logic_error("tanh series coefficients do not sum to 1");
    return s;
}

double TanhSeries::value(double x) const {
    if (!std::isfinite(x)) throw domain_error("TanhSeries::value: non-finite argument");
    const double t = std::tanh(alpha_ * x);
    const double u = t * t;
    double acc = 0.0;
    for (int k = lambda_ - 1; k >= 0; --k) acc = acc * u + coeffs_[k];
    return t * acc;
}

double TanhSeries::derivative(double x) const {
    if (!std::isfinite(x)) throw domain_error("TanhSeries::derivative: non-finite argument");
    const double t = std::tanh(alpha_ * x);
    const double u = t * t;
    double acc = 0.0;
    for (int k = lambda_ - 1; k >= 0; --k) acc = acc * u + (2 * k + 1) * coeffs_[k];
    return alpha_ * (1.0 - u) * acc;
}

double eval_integral_form(int lambda, double alpha, double x, double rel_tol) {
    require_order(lambda);
    require_alpha(alpha);
    if (!std::isfinite(x)) throw domain_error("eval_integral_form: non-finite argument");
    if (x == 0.0) return 0.0;

    const auto integrand = [&](long double y) {
        return std::exp(-2.0L * lambda * log_cosh(alpha * y));
    };
    long double err_est = 0.0L;
    const long double integral = boost::math::quadrature::gauss_kronrod<long double, 31>::integrate(
        integrand, 0.0L, static_cast<long double>(x), 15, rel_tol, &err_est);
    const long double pref = static_cast<long double>(prefactor_exact(lambda));
    const long double result = alpha * pref * integral;
    if (err_est > rel_tol * (std::fabs(integral) + 1.0L))
        throw accuracy_error("eval_integral_form: quadrature did not converge");
    return static_cast<double>(result);
}

namespace {

long double abs_deviation(const TanhSeries& series, long double x) {
    return std::fabs(erf_ref(x) - static_cast<long double>(series.value(static_cast<double>(x))));
}

// Golden-section maximization of |erf_ref - series| on [a, b].
long double golden_max(const TanhSeries& series, long double a, long double b) {
    constexpr long double invphi = 0.6180339887498948482L;
    long double x1 = b - invphi * (b - a);
    long double x2 = a + invphi * (b - a);
    long double f1 = abs_deviation(series, x1);
    long double f2 = abs_deviation(series, x2);
    for (int i = 0; i < 90 && b - a > 1e-15L; ++i) {
        if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = abs_deviation(series, x2);
        } else {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = abs_deviation(series, x1);
        }
    }
    return std::max(f1, f2);
}

}  // namespace

MaxErrorResult max_abs_error(const TanhSeries& series, std::span<const double> grid) {
    if (grid.empty()) throw argument_error("max_abs_error: empty grid");
    std::size_t best = 0;
    long double best_err = -1.0L;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i])) throw argument_error("max_abs_error: non-finite grid point");
        const long double e = abs_deviation(series, grid[i]);
        if (e > best_err) {
            best_err = e;
            best = i;
        }
    }
    long double lo = grid[best > 0 ? best - 1 : 0];
    long double hi = grid[best + 1 < grid.size() ? best + 1 : grid.size() - 1];
    if (lo > hi) std::swap(lo, hi);
    long double refined = best_err;
    if (hi > lo) refined = std::max(refined, golden_max(series, lo, hi));
    return {grid[best], static_cast<double>(refined)};
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
    if (n < 2 || !(hi > lo)) throw argument_error("uniform_grid: need n >= 2 and hi > lo");
    std::vector<double> g(n);
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo + step * i;
    g.back() = hi;
    return g;
}

std::vector<double> default_error_grid() { return uniform_grid(0.0, 8.0, 4001); }

}  // namespace tanherf
