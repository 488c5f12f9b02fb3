#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ratcond/exact/integer.hpp"

namespace ratcond {

inline int mobius(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("mobius: m must be >= 1");
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        m /= p;
        if (m % p == 0) return 0;
        sign = -sign;
    }
    if (m > 1) sign = -sign;
    return sign;
}

// mu[0..limit], mu[0] unused (0).
inline std::vector<int> mobius_table(std::size_t limit) {
    std::vector<int> mu(limit + 1, 1);
    std::vector<bool> composite(limit + 1, false);
    mu[0] = 0;
    for (std::size_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        for (std::size_t k = p; k <= limit; k += p) {
            if (k > p) composite[k] = true;
            mu[k] = -mu[k];
        }
        if (p <= limit / p)
            for (std::size_t k = p * p; k <= limit; k += p * p) mu[k] = 0;
    }
    return mu;
}

// Number of ideals of Z[i] of norm m, i.e. sum over d | m of the non-principal character mod 4.
inline std::vector<long long> gaussian_ideal_counts(std::size_t limit) {
    std::vector<long long> a(limit + 1, 0);
    for (std::size_t d = 1; d <= limit; ++d) {
        int chi = d % 2 == 0 ? 0 : (d % 4 == 1 ? 1 : -1);
        if (!chi) continue;
        for (std::size_t k = d; k <= limit; k += d) a[k] += chi;
    }
    return a;
}

// Dirichlet inverse of an arithmetic function with a[1] = 1.
inline std::vector<long long> dirichlet_inverse(const std::vector<long long>& a) {
    if (a.size() < 2 || a[1] != 1) throw std::invalid_argument("dirichlet_inverse: a(1) must be 1");
    std::size_t limit = a.size() - 1;
    std::vector<long long> b(limit + 1, 0);
    b[1] = 1;
    for (std::size_t n = 2; n <= limit; ++n) {
        long long s = 0;
        for (std::size_t d = 2; d <= n; ++d)
            if (n % d == 0) s += a[d] * b[n / d];
        b[n] = -s;
    }
    return b;
}

// B_0..B_n with B_1 = -1/2.
inline std::vector<Rational> bernoulli_numbers(std::size_t n) {
    std::vector<Rational> B(n + 1);
    B[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        Rational s = 0;
        for (std::size_t k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * B[k];
        B[m] = -s / Rational(static_cast<long>(m + 1));
    }
    return B;
}

}  // namespace ratcond
