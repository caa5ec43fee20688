#pragma once

// Independent numerical oracles used only by the test suites. Each one
// reaches a result by a route the library itself never takes, so agreement
// is evidence rather than tautology.

#include <functional>
#include <span>

#include "tanherf/ladder.hpp"

namespace tanherf::testing {

// Adaptive Gauss-Kronrod integral of f over [a, b].
long double gk_integrate(const std::function<long double(long double)>& f,
                         long double a, long double b, long double rel_tol = 1e-15L);

// Dawson's F(x) by adaptive RKF78 integration of F' = 1 - 2xF from 0.
long double dawson_ode_oracle(long double x, long double tol = 1e-16L);

// Third derivative by the 4th-order central stencil at step h, plus one
// Richardson level.
long double third_derivative_fd(const std::function<long double(long double)>& f,
                                long double x, long double h = 1e-3L);

// First derivative, 4th-order central stencil.
long double first_derivative_fd(const std::function<long double(long double)>& f,
                                long double x, long double h = 1e-5L);

// Hermite polynomial built from the Rodrigues form: q_{n+1} = 2x q_n - q_n'.
IntPoly rodrigues_hermite(int n);

// Two-sample Kolmogorov-Smirnov statistic (consumes both inputs by sorting).
double ks_statistic(std::span<double> a, std::span<double> b);

}  // namespace tanherf::testing
