#include "tanherf/reffuncs.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace tanherf {

namespace {

constexpr long double kTwoOverSqrtPi = 2.0L * std::numbers::inv_sqrtpi_v<long double>;
constexpr long double kEps = std::numeric_limits<long double>::epsilon();

// erf on [0, 3] by the Maclaurin series with Kahan compensation. The largest
// term at x=3 is ~1.7e2, so the compensated sum keeps the absolute error
// near 1e-16 even there.
long double erf_series(long double x) {
    const long double x2 = x * x;
    long double term = x;        // x^(2n+1) / n!
    long double sum = 0.0L, comp = 0.0L;
    for (int n = 0; n < 300; ++n) {
        const long double add = term / (2 * n + 1);
        const long double y = add - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        term *= -x2 / (n + 1);
        if (std::fabs(term) < kEps * std::fabs(sum)) break;
    }
    return kTwoOverSqrtPi * sum;
}

// erfc on (3, inf) by the classical continued fraction
//   erfc(x) * sqrt(pi) * exp(x^2) = 1 / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated with the modified Lentz algorithm.
long double erfc_cf(long double x) {
    const long double tiny = 1e-4000L;
    long double f = x, c = f, d = 0.0L;
    for (int k = 1; k < 400; ++k) {
        const long double a = 0.5L * k;
        d = x + a * d;
        if (d == 0.0L) d = tiny;
        c = x + a / c;
        if (c == 0.0L) c = tiny;
        d = 1.0L / d;
        const long double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0L) < 0.5L * kEps) break;
    }
    return std::exp(-x * x) * std::numbers::inv_sqrtpi_v<long double> / f;
}

// integral_0^x exp(y^2) dy as the all-positive series sum x^(2n+1)/(n!(2n+1)).
long double exp_sq_integral_series(long double x) {
    const long double x2 = x * x;
    long double term = x;
    long double sum = 0.0L;
    for (int n = 0; n < 500; ++n) {
        sum += term / (2 * n + 1);
        term *= x2 / (n + 1);
        if (term < kEps * sum) break;
    }
    return sum;
}

// F(x) ~ 1/(2x) * sum_m (2m-1)!!/(2x^2)^m, truncated at the smallest term.
long double dawson_asymptotic(long double x) {
    const long double inv2x2 = 1.0L / (2.0L * x * x);
    long double term = 1.0L, sum = 1.0L;
    for (int m = 0; m < 200; ++m) {
        const long double next = term * (2 * m + 1) * inv2x2;
        if (next >= term) break;   // divergence onset
        term = next;
        sum += term;
        if (term < kEps * sum) break;
    }
    return sum / (2.0L * x);
}

void require_finite(long double x, const char* fn) {
    if (!std::isfinite(x))
        throw domain_error(std::string(fn) + ": non-finite argument");
}

}  // namespace

long double erf_ref(long double x, const OracleConfig& cfg) {
    cfg.validate();
    require_finite(x, "erf_ref");
    const long double ax = std::fabs(x);
    long double v;
    if (ax <= 3.0L)
        v = erf_series(ax);
    else
        v = 1.0L - erfc_cf(ax);
    return x < 0.0L ? -v : v;
}

long double dawson_ref(long double x, const OracleConfig& cfg) {
    cfg.validate();
    require_finite(x, "dawson_ref");
    const long double ax = std::fabs(x);
    long double v;
    if (ax <= cfg.small_x_cutoff)
        v = std::exp(-ax * ax) * exp_sq_integral_series(ax);
    else
        v = dawson_asymptotic(ax);
    return x < 0.0L ? -v : v;
}

long double dawson_derivative_ref(long double x, int k, const OracleConfig& cfg) {
    if (k < 0 || k > kMaxDawsonDerivativeOrder)
        throw unsupported_order_error("dawson_derivative_ref: order must be in [0, 30]");
    require_finite(x, "dawson_derivative_ref");
    long double fm1 = dawson_ref(x, cfg);       // F^(j-1)
    if (k == 0) return fm1;
    long double fj = 1.0L - 2.0L * x * fm1;     // F' from the k=0 relation
    for (int j = 1; j < k; ++j) {
        const long double fp1 = -2.0L * x * fj - 2.0L * j * fm1;
        fm1 = fj;
        fj = fp1;
    }
    return fj;
}

}  // namespace tanherf
