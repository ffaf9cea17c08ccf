#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <utility>

#include "cobord/errors.hpp"

namespace cobord {

// All coefficient arithmetic is exact and arbitrary precision.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

inline Integer factorial(long long n) {
    Integer r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n + 1 - i;
        r /= i; // exact at every step
    }
    return r;
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// m = p^k with p prime, k >= 1.
inline std::optional<std::pair<long long, int>> prime_power(long long m) {
    if (m < 2) return std::nullopt;
    long long p = m;
    for (long long d = 2; d * d <= m; ++d) {
        if (m % d == 0) { p = d; break; }
    }
    int k = 0;
    long long rest = m;
    while (rest % p == 0) { rest /= p; ++k; }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, k);
}

inline int padic_valuation(Integer v, long long p) {
    if (p < 2) throw ValidationError("p-adic valuation needs p >= 2");
    if (v == 0) throw ValidationError("p-adic valuation of zero");
    v = abs(v);
    int k = 0;
    while (v % p == 0) { v /= p; ++k; }
    return k;
}

struct ExtGcd {
    Integer g, x, y; // g = x*a + y*b, g >= 0
};

inline ExtGcd ext_gcd(const Integer& a, const Integer& b) {
    if (b == 0) {
        if (a < 0) return {-a, -1, 0};
        return {a, 1, 0};
    }
    ExtGcd sub = ext_gcd(b, a % b);
    // sub.g = sub.x*b + sub.y*(a - (a/b)*b)
    return {sub.g, sub.y, sub.x - (a / b) * sub.y};
}

} // namespace cobord
