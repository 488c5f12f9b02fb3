#pragma once

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "ratcond/exact/gauss.hpp"
#include "ratcond/exact/integer.hpp"
#include "ratcond/polysys/binary_forms.hpp"

namespace ratcond::census {

template <class Int>
Int widen(long long v) {
    if constexpr (std::is_same_v<Int, Integer>)
        return to_integer(v);
    else
        return Int(v);
}

// Elementary symmetric functions e_1..e_n of the eigenvalues of M^T M for an integer n x n
// matrix (n <= 3), via Cauchy-Binet: e_1 = ||M||_F^2, e_2 = sum of squared 2x2 minors,
// e_n = det(M)^2.
template <class Int>
std::array<Int, 4> gram_symmetric_functions(std::span<const long long> m, int n) {
    std::array<Int, 4> e{Int(1), Int(0), Int(0), Int(0)};
    auto at = [&](int i, int j) { return widen<Int>(m[static_cast<std::size_t>(i * n + j)]); };
    for (long long v : m) e[1] += widen<Int>(v) * widen<Int>(v);
    if (n == 2) {
        Int d = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
        e[2] = d * d;
    } else if (n == 3) {
        for (int r0 = 0; r0 < 3; ++r0)
            for (int r1 = r0 + 1; r1 < 3; ++r1)
                for (int c0 = 0; c0 < 3; ++c0)
                    for (int c1 = c0 + 1; c1 < 3; ++c1) {
                        Int minor = at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
                        e[2] += minor * minor;
                    }
        Int d = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
        e[3] = d * d;
    } else {
        throw std::domain_error("gram_symmetric_functions: n must be 2 or 3");
    }
    return e;
}

// sigma_min(M)^2 <= (p/q) ||M||_F^2, decided exactly. With P(y) = q^n charpoly(M^T M)(y/q),
// whose roots q*lambda_i are real and >= 0, put Q(x) = P(x + p s). Q is real-rooted, so its
// sign variations count its positive roots exactly (Descartes); M is inside iff fewer than n
// roots exceed p s.
template <class Int>
bool linear_tube_member(const std::array<Int, 4>& e, int n, const Int& p, const Int& q) {
    const Int& s = e[1];
    Int c = p * s;
    Int poly[4];
    Int qpow = 1;
    for (int k = n; k >= 0; --k) {
        int j = n - k;  // coefficient of y^k is (-1)^j e_j q^j
        poly[k] = (j % 2 ? Int(-1) : Int(1)) * e[static_cast<std::size_t>(j)] * qpow;
        qpow *= q;
    }
    for (int i = 0; i < n; ++i)
        for (int k = n; k > i; --k) poly[k - 1] += c * poly[k];
    int variations = 0, last = 0;
    for (int k = 0; k <= n; ++k) {
        int sg = poly[k] > 0 ? 1 : (poly[k] < 0 ? -1 : 0);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++variations;
        last = sg;
    }
    return variations < n;
}

// k(M) >= sqrt(q/p) for a 2x2 integer matrix: sigma_min^2 <= r sigma_max^2 with r = p/q < 1
// iff det^2 (1 + r)^2 <= r ||M||_F^4. The zero matrix counts as inside.
template <class Int>
bool linear_k_tail_member_2x2(const std::array<Int, 4>& e, const Int& p, const Int& q) {
    if (p >= q) return true;
    return e[2] * (p + q) * (p + q) <= p * q * e[1] * e[1];
}

// Bits needed for the linear test with Frobenius bound s_max and eps^2 = p/q.
inline int linear_test_bits(int n, long long s_max, const Rational& eps_sq) {
    double R = static_cast<double>(std::max<long long>(s_max, 1)) *
               std::max(std::abs(eps_sq.get_num().get_d()), eps_sq.get_den().get_d());
    return 2 * n + 2 + static_cast<int>(std::ceil(n * std::log2(std::max(R, 2.0))));
}

// rho(f) <= eps for a binary quadratic with coefficient norm S = L ||f||_Delta^2 (L = 2):
// rho^2 = |a_1^2 - 4 a_0 a_2| L / (2 S), so the test is |D|^2 L^2 q^2 <= 4 p^2 S^2 for eps^2 = p/q.
template <class Int>
bool quadratic_tube_member(const Int& disc_norm, const Int& S, const Int& L, const Int& p, const Int& q) {
    return disc_norm * L * L * q * q <= Int(4) * p * p * S * S;
}

}  // namespace ratcond::census
