#include "tanherf/ladder.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>

#include "tanherf/reffuncs.hpp"

namespace tanherf {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(long v) {
    IntPoly p;
    if (v != 0) p.c_ = {BigInt(v)};
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int IntPoly::degree() const { return static_cast<int>(c_.size()) - 1; }

bool IntPoly::is_zero() const { return c_.empty(); }

BigInt IntPoly::coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : BigInt(0);
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(d));
}

IntPoly IntPoly::times_x() const {
    if (c_.empty()) return {};
    std::vector<BigInt> d(c_.size() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) d[i + 1] = c_[i];
    return IntPoly(std::move(d));
}

IntPoly IntPoly::scaled(const BigInt& k) const {
    std::vector<BigInt> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * k;
    return IntPoly(std::move(d));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> d(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return IntPoly(std::move(d));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> d(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return IntPoly(std::move(d));
}

double IntPoly::value(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + static_cast<double>(*it);
    return acc;
}

BigInt IntPoly::max_abs_coeff() const {
    BigInt m = 0;
    for (const auto& v : c_) m = std::max(m, BigInt(abs(v)));
    return m;
}

namespace {

void require_hermite_order(int n) {
    if (n < 0 || n > kMaxHermiteOrder)
        throw unsupported_order_error("hermite order must be in [0, 40], got " +
                                      std::to_string(n));
}

}  // namespace

IntPoly hermite_poly(int n) {
    require_hermite_order(n);
    IntPoly hm1 = IntPoly::constant(1);                    // H_0
    if (n == 0) return hm1;
    IntPoly h = IntPoly::constant(2).times_x();            // H_1 = 2x
    for (int m = 1; m < n; ++m) {
        IntPoly next = h.times_x().scaled(2) - hm1.scaled(2L * m);
        hm1 = std::move(h);
        h = std::move(next);
    }
    return h;
}

double wrong_sign_eval(int n, double x) {
    require_hermite_order(n);
    if (!std::isfinite(x)) throw domain_error("wrong_sign_eval: non-finite argument");
    double hm1 = 1.0, h = 2.0 * x;
    if (n == 0) h = 1.0;
    for (int m = 1; m < n; ++m) {
        const double next = 2.0 * x * h - 2.0 * m * hm1;
        hm1 = h;
        h = next;
    }
    return std::exp(-x * x) * h;
}

LadderCheck ladder_down_identity(int n) {
    if (n < 1) throw argument_error("ladder_down_identity: n must be >= 1");
    require_hermite_order(n);
    const IntPoly residual = hermite_poly(n).derivative() - hermite_poly(n - 1).scaled(2L * n);
    return {residual.is_zero(), residual};
}

LadderCheck ladder_up_identity(int n) {
    require_hermite_order(n + 1);
    const IntPoly hn = hermite_poly(n);
    const IntPoly residual = hn.times_x().scaled(2) - hn.derivative() - hermite_poly(n + 1);
    return {residual.is_zero(), residual};
}

long double dawson_eigen_eval(int n, long double x) {
    if (n < 0 || n > kMaxDawsonEigenOrder)
        throw unsupported_order_error("dawson eigenfunction order must be in [0, 31]");
    if (n == 0) return 1.0L;
    return dawson_derivative_ref(x, n - 1);
}

SecondSolutionResult second_solution_check(std::span<const double> grid) {
    SecondSolutionResult out;
    for (double x : grid) {
        if (!std::isfinite(x)) throw argument_error("second_solution_check: non-finite grid point");
        long double err_est = 0.0L;
        long double integral = 0.0L;
        if (x != 0.0) {
            integral = boost::math::quadrature::gauss_kronrod<long double, 31>::integrate(
                [](long double y) { return std::exp(y * y); }, 0.0L,
                static_cast<long double>(x), 15, 1e-14L, &err_est);
            if (err_est > 1e-12L * (std::fabs(integral) + 1.0L))
                throw accuracy_error("second_solution_check: quadrature did not converge");
        }
        const long double quad_form = std::exp(-static_cast<long double>(x) * x) * integral;
        const long double f = dawson_ref(x);
        out.max_integral_residual = std::max(
            out.max_integral_residual, static_cast<double>(std::fabs(quad_form - f)));

        const long double f1 = dawson_derivative_ref(x, 1);
        const long double f2 = dawson_derivative_ref(x, 2);
        out.max_ode_residual = std::max(
            out.max_ode_residual,
            static_cast<double>(std::fabs(f2 + 2.0L * x * f1 + 2.0L * f)));
    }
    return out;
}

}  // namespace tanherf
