#pragma once

#include <span>
#include <vector>

#include "tanherf/errors.hpp"
#include "tanherf/rational.hpp"

namespace tanherf {

inline constexpr int kMaxHermiteOrder = 40;
inline constexpr int kMaxDawsonEigenOrder = 31;

// Dense integer polynomial, coefficient of x^i at index i. Just enough
// algebra for the ladder identities, all of it exact.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly constant(long v);

    int degree() const;           // -1 for the zero polynomial
    bool is_zero() const;
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(int i) const;

    IntPoly derivative() const;
    IntPoly times_x() const;
    IntPoly scaled(const BigInt& k) const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    double value(double x) const;
    BigInt max_abs_coeff() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

// H_n with exact integer coefficients from H_{n+1} = 2x H_n - 2n H_{n-1}.
IntPoly hermite_poly(int n);

// exp(-x^2) * H_n(x), evaluated with the double-precision recurrence.
double wrong_sign_eval(int n, double x);

struct LadderCheck {
    bool pass = false;
    IntPoly residual;  // identically zero iff the identity holds exactly
};

// (d/dx + 2x) applied to exp(-x^2) H_n equals 2n exp(-x^2) H_{n-1};
// after the exponential factor cancels this is H_n' == 2n H_{n-1}.
LadderCheck ladder_down_identity(int n);

// -(d/dx) applied to exp(-x^2) H_n equals exp(-x^2) H_{n+1};
// at the coefficient level, 2x H_n - H_n' == H_{n+1}.
LadderCheck ladder_up_identity(int n);

// D_0 = 1 (the constant member that completes the family), D_n = F^(n-1)
// for n >= 1.
long double dawson_eigen_eval(int n, long double x);

struct SecondSolutionResult {
    // max over the grid of |exp(-x^2) * quadrature(exp(y^2), 0, x) - dawson_ref(x)|
    double max_integral_residual = 0.0;
    // max over the grid of |F'' + 2x F' + 2F| with derivatives from the recurrence
    double max_ode_residual = 0.0;
};

SecondSolutionResult second_solution_check(std::span<const double> grid);

}  // namespace tanherf
