#pragma once

// Test-only helpers. Nothing here calls into the code under test, so the
// values they produce can serve as independent expectations.

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace testsupport {

/// Small exact fraction on 64-bit integers, normalized like a slope.
struct Fraction {
    long long num;
    long long den;

    Fraction(long long n, long long d) : num(n), den(d) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    friend bool operator<(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator==(const Fraction& a, const Fraction& b) { return a.num == b.num && a.den == b.den; }
};

/// Exponent of p in a (a != 0) by repeated division on machine integers.
inline long long trial_valuation(long long a, long long p) {
    long long k = 0;
    if (a < 0) a = -a;
    while (a % p == 0) {
        a /= p;
        ++k;
    }
    return k;
}

/// Prime factorization by trial division: pairs (prime, exponent).
inline std::vector<std::pair<long long, int>> trial_factor(long long a) {
    std::vector<std::pair<long long, int>> out;
    if (a < 0) a = -a;
    for (long long d = 2; d * d <= a; ++d) {
        int e = 0;
        while (a % d == 0) {
            a /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (a > 1) out.emplace_back(a, 1);
    return out;
}

/// Plain convolution on machine integers.
inline std::vector<long long> convolve(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace testsupport
