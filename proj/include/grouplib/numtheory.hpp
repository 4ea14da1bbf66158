#pragma once

#include <utility>
#include <vector>

namespace grouplib {

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline long smallest_prime_divisor(long n) {
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;  // n prime (or 1)
}

inline long euler_phi(long n) {
    long r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

// x^k mod m
inline long pow_mod(long x, long k, long m) {
    long r = 1 % m;
    x %= m;
    while (k > 0) {
        if (k & 1) r = r * x % m;
        x = x * x % m;
        k >>= 1;
    }
    return r;
}

inline long multiplicative_order(long x, long m) {
    long r = 1, v = x % m;
    while (v != 1 % m) {
        v = v * (x % m) % m;
        ++r;
    }
    return r;
}

inline bool is_perfect_square(long n) {
    if (n < 0) return false;
    long r = 0;
    while (r * r < n) ++r;
    return r * r == n;
}

}  // namespace grouplib
