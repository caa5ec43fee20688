#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tanherf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt double_factorial_odd(int n) {
    // n!! for odd n >= -1
    BigInt r = 1;
    for (int i = n; i >= 3; i -= 2) r *= i;
    return r;
}

}  // namespace tanherf
