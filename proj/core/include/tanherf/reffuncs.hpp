#pragma once

#include "tanherf/errors.hpp"

namespace tanherf {

// Reference evaluators for erf and Dawson's function F, used as the accuracy
// anchor for everything else in the library. Computed in long double
// (64-bit mantissa on x86-64) so that every abs_tol claim down to 1e-14 has
// two spare digits, and so that 1-erf stays resolvable out to |x| ~ 6.
//
// Each function has two independent computation routes split at a cutoff;
// the test suite cross-checks them against quadrature/ODE oracles.

struct OracleConfig {
    long double abs_tol = 1e-14L;        // contractual absolute accuracy
    long double small_x_cutoff = 6.0L;   // Dawson branch switch

    void validate() const {
        if (!(abs_tol > 0.0L) || abs_tol > 1e-12L)
            throw argument_error("OracleConfig: abs_tol must be in (0, 1e-12]");
        if (!(small_x_cutoff > 0.0L))
            throw argument_error("OracleConfig: small_x_cutoff must be positive");
    }
};

// erf(x) = 2/sqrt(pi) * integral_0^x exp(-t^2) dt.
// Maclaurin series for |x| <= 3, continued-fraction complement beyond.
long double erf_ref(long double x, const OracleConfig& cfg = {});

// F(x) = exp(-x^2) * integral_0^x exp(y^2) dy.
// Cancellation-free series for |x| <= small_x_cutoff, asymptotic 1/x series
// beyond. The alternating Maclaurin series of F itself is useless past
// |x| ~ 2 (it loses one digit per unit of x^2), so the series branch keeps
// the exponential factored out.
long double dawson_ref(long double x, const OracleConfig& cfg = {});

// k-th derivative of F, from the recurrence
//   F^(k+1)(x) + 2x F^(k)(x) + 2k F^(k-1)(x) = 0
// seeded with F and F' = 1 - 2xF. Iterative; k is capped at 30.
long double dawson_derivative_ref(long double x, int k, const OracleConfig& cfg = {});

inline constexpr int kMaxDawsonDerivativeOrder = 30;

}  // namespace tanherf
