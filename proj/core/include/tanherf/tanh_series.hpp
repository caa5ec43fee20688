#pragma once

#include <span>
#include <vector>

#include "tanherf/errors.hpp"
#include "tanherf/rational.hpp"

namespace tanherf {

inline constexpr int kMaxSeriesOrder = 64;

// Exact prefactor 2*Gamma(lambda+1/2) / (sqrt(pi)*Gamma(lambda)); the sqrt(pi)
// cancels analytically, leaving (2*lambda-1)!! / (2^(lambda-1) * (lambda-1)!).
Rational prefactor_exact(int lambda);

// Finite odd series in tanh(alpha*x):
//   S(x) = sum_{k=0}^{lambda-1} c_k * tanh^(2k+1)(alpha*x),
//   c_k  = prefactor(lambda) * C(lambda-1, k) * (-1)^k / (2k+1).
// The coefficients are built in exact rational arithmetic (alternating
// binomial sums shed digits in floating point for lambda over ~20) and
// converted to double once. sum_k c_k == 1 exactly, which pins S(+-inf)=+-1.
class TanhSeries {
public:
    static TanhSeries build(int lambda, double alpha);

    // Horner in t^2 around a single tanh call.
    double value(double x) const;
    double operator()(double x) const { return value(x); }

    // dS/dx = alpha * sech^2(alpha x) * sum_k (2k+1) c_k tanh^(2k)(alpha x)
    double derivative(double x) const;

    int order() const { return lambda_; }
    double alpha() const { return alpha_; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    const std::vector<Rational>& exact_coeffs() const { return exact_coeffs_; }

private:
    TanhSeries() = default;
    int lambda_ = 0;
    double alpha_ = 0.0;
    std::vector<Rational> exact_coeffs_;
    std::vector<double> coeffs_;
};

// Independent route: adaptive Gauss-Kronrod quadrature of
//   alpha * prefactor(lambda) * integral_0^x sech^(2*lambda)(alpha y) dy.
double eval_integral_form(int lambda, double alpha, double x, double rel_tol = 1e-12);

struct MaxErrorResult {
    double x = 0.0;    // abscissa of the worst deviation
    double err = 0.0;  // max |erf_ref - series|
};

// Scan the grid for the worst |erf_ref(x) - series(x)|, then refine around
// the argmax with golden-section search. Deterministic: ties resolve to the
// first (lowest-index) grid point.
MaxErrorResult max_abs_error(const TanhSeries& series, std::span<const double> grid);

std::vector<double> uniform_grid(double lo, double hi, int n);

// Default scan grid for tuning and error reporting; the deviation structure
// lives entirely within |x| < 4 and the series is odd, so [0, 8] suffices.
std::vector<double> default_error_grid();

}  // namespace tanherf
