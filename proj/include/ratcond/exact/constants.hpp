#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ratcond/exact/combinatorics.hpp"
#include "ratcond/exact/integer.hpp"
#include "ratcond/exact/interval.hpp"
#include "ratcond/exact/number_theory.hpp"

namespace ratcond {

// Partial sum up to M plus the integral tail bracket [int_{M+1}^inf, int_M^inf] of x^-s.
inline Interval zeta_integral_tail(int s, unsigned long M, mpfr_prec_t prec = kDefaultPrecision) {
    if (s < 2) throw std::invalid_argument("zeta: s must be >= 2");
    Interval sum(prec);
    for (unsigned long m = 1; m <= M; ++m) sum += 1L / Interval::from(static_cast<long>(m), prec).pow(s);
    Interval lo = 1L / (Interval::from(static_cast<long>(M + 1), prec).pow(s - 1) * static_cast<long>(s - 1));
    Interval hi = 1L / (Interval::from(static_cast<long>(M), prec).pow(s - 1) * static_cast<long>(s - 1));
    return sum + Interval::hull(lo, hi);
}

// Partial sum plus Euler-Maclaurin tail. For x^-s all derivatives are monotone, so the
// remainder after the last correction is bounded by the first omitted term.
inline Interval zeta(int s, mpfr_prec_t prec = kDefaultPrecision) {
    if (s < 2) throw std::invalid_argument("zeta: s must be >= 2");
    const mpfr_prec_t wp = prec + 32;
    const long M = std::max<long>(16, static_cast<long>(prec) / 2);
    const std::size_t max_terms = static_cast<std::size_t>(prec) / 4 + 30;
    static thread_local std::vector<Rational> B;
    if (B.size() < 2 * max_terms + 3) B = bernoulli_numbers(2 * max_terms + 2);

    Interval sum(wp);
    for (long m = 1; m < M; ++m) sum += 1L / Interval::from(m, wp).pow(s);
    Interval Mi = Interval::from(M, wp);
    Interval Ms = Mi.pow(s);
    sum += 1L / (Mi.pow(s - 1) * static_cast<long>(s - 1));
    sum += 1L / (Ms * 2L);

    // term_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * M^{-s-2k+1}
    Interval rising = Interval::from(static_cast<long>(s), wp);
    Interval tol = Interval::from(make_rational(1, ipow(Integer(2), static_cast<unsigned long>(prec + 8))), wp);
    Interval remainder = Interval::entire(wp);
    for (std::size_t k = 1; k <= max_terms; ++k) {
        if (k > 1) rising *= Interval::from(static_cast<long>(s + 2 * k - 3), wp) * Interval::from(static_cast<long>(s + 2 * k - 2), wp);
        Interval term = Interval::from(B[2 * k] / Rational(factorial(2 * k)), wp) * rising /
                        Mi.pow(static_cast<unsigned long>(s + 2 * k - 1));
        if (term.abs().certainly_le(tol)) {
            Interval a = term.abs();
            remainder = Interval::hull(-a, a);
            break;
        }
        sum += term;
    }
    if (!remainder.is_finite()) throw std::runtime_error("zeta: Euler-Maclaurin tail did not converge");
    sum += remainder;
    return sum;
}

inline Interval ball_volume_K(unsigned ell, mpfr_prec_t prec = kDefaultPrecision) {
    Interval pi = Interval::pi(prec);
    unsigned k = ell / 2;
    if (ell % 2 == 0) return pi.pow(k) / Interval::from(factorial(k), prec);
    // K_{2k+1} = 2^{2k+1} k! pi^k / (2k+1)!
    Rational c = make_rational(ipow(Integer(2), 2 * k + 1) * factorial(k), factorial(2 * k + 1));
    return pi.pow(k) * c;
}

inline Interval sigma_constant(unsigned m, mpfr_prec_t prec = kDefaultPrecision) {
    if (m < 1) throw std::invalid_argument("sigma_constant: m must be >= 1");
    Interval s(prec);
    for (unsigned l = 0; l < m; ++l) s += ball_volume_K(l, prec) * binomial(m, l);
    return s;
}

// base^{k/2}
inline Interval pow_half(unsigned base, unsigned k, mpfr_prec_t prec = kDefaultPrecision) {
    return Interval::from(static_cast<long>(base), prec).pow(k).sqrt();
}

struct LinearBoundConstants {
    unsigned n = 0;
    Rational epsilon;
    Integer T;            // (2 max{4,n})^{2n^4+4n^2}
    Interval sigma;       // S^(n^2)
    Interval K;           // K_{n^2}
    Interval zeta_n2;     // zeta(n^2)
    Interval zeta_n2m1;   // zeta(n^2 - 1)
    Interval lead;        // eps n^{5/2}
    Interval B;
    Interval C;
    Interval L1;          // L(1,n)
    Interval Lprime;      // L'(eps,n)

    // eps n^{5/2} + B/(H - C); infinite when H <= C.
    Interval linear_tail_bound(const Rational& H) const {
        Interval h = Interval::from(H, B.prec());
        Interval den = h - C;
        if (!den.certainly_positive()) return Interval::infinity(B.prec());
        return lead + B / den;
    }
    // Volume of the Frobenius ball of radius H in R^{n^2}.
    Interval ball_volume(const Rational& H) const { return K * Interval::from(H, K.prec()).pow(n * n); }
};

inline LinearBoundConstants linear_bound_constants(unsigned n, const Rational& eps, mpfr_prec_t prec = kDefaultPrecision) {
    if (n < 2) throw std::invalid_argument("linear_bound_constants: n must be >= 2");
    if (eps < 0) throw std::invalid_argument("linear_bound_constants: epsilon must be >= 0");
    LinearBoundConstants c;
    c.n = n;
    c.epsilon = eps;
    const unsigned m = n * n;
    c.T = ipow(Integer(2 * std::max(4u, n)), 2ul * m * m + 4ul * m);
    c.sigma = sigma_constant(m, prec);
    c.K = ball_volume_K(m, prec);
    c.zeta_n2 = zeta(static_cast<int>(m), prec);
    c.zeta_n2m1 = zeta(static_cast<int>(m - 1), prec);
    Interval e = Interval::from(eps, prec);
    Interval n52 = pow_half(n, 5, prec);
    c.lead = e * n52;
    Interval T = Interval::from(c.T, prec);
    Interval ratio = c.sigma / (c.K * c.zeta_n2m1);
    c.B = c.zeta_n2 * ((T + c.lead) * ratio + c.lead * 2L + 2L / c.K);
    c.C = c.zeta_n2 * (ratio + 1L + 1L / c.K);
    c.L1 = c.sigma / (c.zeta_n2m1 * 2L) + c.K / 2L;
    c.Lprime = T * c.sigma / (c.zeta_n2m1 * 2L) + c.lead * c.K / 2L;
    return c;
}

struct NonlinearBoundConstants {
    std::vector<unsigned> degrees;
    Rational epsilon;
    unsigned n = 0;        // equations, variables X_0..X_n
    unsigned N = 0;        // complex dimension minus one
    Integer bezout;        // prod d_i
    unsigned D = 0;        // max d_i
    Integer c;             // n^3 (n+1) N (N-1) prod d_i
    Rational det_delta_sq; // det(Delta)^2 = 1 / prod multinomials
    Interval det_delta;
    Interval frakD;        // K_{2N+2} c / det(Delta)
    Integer T_bar;
    Interval sigma;        // S^(2N+2)
    Interval K;            // K_{2N+2}
    Interval zeta_2N1;     // zeta(2N+1)
    Interval zeta_2N2;     // zeta(2N+2)
    Interval eps4c;        // eps^4 c
    Interval G;
    Interval F;
    Interval Lbar1;        // Lbar(1,N)

    // eps^4 c + F / (H/zeta(2N+2) - G); infinite when the denominator is not positive.
    Interval nonlinear_tail_bound(const Rational& H) const {
        Interval den = Interval::from(H, F.prec()) / zeta_2N2 - G;
        if (!den.certainly_positive()) return Interval::infinity(F.prec());
        return eps4c + F / den;
    }
    // Vol(B_Delta(0,H)) in R^{2N+2}: the real Jacobian of Delta^{-1} on C^{N+1} is det(Delta)^{-2}.
    Interval ball_volume(const Rational& H) const {
        return K * Interval::from(H, K.prec()).pow(2 * N + 2) / Interval::from(det_delta_sq, K.prec());
    }
};

inline NonlinearBoundConstants nonlinear_bound_constants(const std::vector<unsigned>& degrees, const Rational& eps,
                                                         mpfr_prec_t prec = kDefaultPrecision) {
    if (degrees.empty()) throw std::invalid_argument("nonlinear_bound_constants: empty degree list");
    for (unsigned d : degrees)
        if (d < 1) throw std::invalid_argument("nonlinear_bound_constants: degrees must be >= 1");
    NonlinearBoundConstants r;
    r.degrees = degrees;
    r.epsilon = eps;
    r.n = static_cast<unsigned>(degrees.size());
    Integer Nsum = 0;
    r.bezout = 1;
    Integer multinomial_product = 1;
    for (unsigned d : degrees) {
        Nsum += binomial(d + r.n, r.n);
        r.bezout *= d;
        r.D = std::max(r.D, d);
        for (const auto& mu : monomials_of_degree(static_cast<int>(d), static_cast<int>(r.n + 1)))
            multinomial_product *= multinomial(mu);
    }
    r.N = static_cast<unsigned>(Nsum.get_ui() - 1);
    const Integer n(r.n), N(r.N);
    r.c = n * n * n * (n + 1) * N * (N - 1) * r.bezout;
    r.det_delta_sq = make_rational(1, multinomial_product);
    r.det_delta = Interval::from(r.det_delta_sq, prec).sqrt();
    r.K = ball_volume_K(2 * r.N + 2, prec);
    r.frakD = r.K * r.c / r.det_delta;
    unsigned long base = std::max(8u, 4 * (r.D + 1));
    unsigned long expo = 4ul * (r.N * r.N + 3ul * (r.n + 2) * (r.n + 2) * (r.N + 1));
    r.T_bar = ipow(Integer(base), expo);
    r.sigma = sigma_constant(2 * r.N + 2, prec);
    r.zeta_2N1 = zeta(static_cast<int>(2 * r.N + 1), prec);
    r.zeta_2N2 = zeta(static_cast<int>(2 * r.N + 2), prec);
    Rational e4 = eps * eps * eps * eps;
    r.eps4c = Interval::from(e4 * Rational(r.c), prec);
    Interval ratio = r.sigma / (r.det_delta * r.zeta_2N1 * r.K);
    r.G = ratio + 1L / r.K + 2L;
    r.F = (Interval::from(r.T_bar, prec) + r.eps4c) * ratio + (r.eps4c + 1L) / r.K + r.eps4c * 4L;
    r.Lbar1 = r.sigma / (Interval::from(r.det_delta_sq, prec) * r.zeta_2N1 * 4L) + r.K / (r.det_delta * 2L);
    return r;
}

// S^(m) <= (1 + sqrt(2 e pi))^m / sqrt(pi) for all 1 <= m <= m_max.
inline bool artin_estimate_check(unsigned m_max, mpfr_prec_t prec = kDefaultPrecision) {
    Interval base = 1L + (Interval::e(prec) * Interval::pi(prec) * 2L).sqrt();
    Interval rpi = Interval::pi(prec).sqrt();
    for (unsigned m = 1; m <= m_max; ++m)
        if (!sigma_constant(m, prec).certainly_le(base.pow(m) / rpi)) return false;
    return true;
}

// The ratio estimate S^(m)/K_m <= e^{2/3} m^{m/2} e^{m/12}, read two ways.
// Report only: the grouping of the last factor is ambiguous.
struct RatioEstimateRow {
    unsigned m;
    Interval ratio;
    Interval reading_linear;     // e^{2/3} m^{m/2} e^{m/12}
    Interval reading_reciprocal; // e^{2/3} m^{m/2} e^{1/(12m)}
    bool holds_linear;
    bool holds_reciprocal;
};

inline std::vector<RatioEstimateRow> ratio_estimate_report(unsigned m_max, mpfr_prec_t prec = kDefaultPrecision) {
    std::vector<RatioEstimateRow> rows;
    Interval e23 = (Interval::from(make_rational(2, 3), prec)).exp();
    for (unsigned m = 1; m <= m_max; ++m) {
        Interval ratio = sigma_constant(m, prec) / ball_volume_K(m, prec);
        Interval mm = Interval::from(static_cast<long>(m), prec).pow(m).sqrt();
        Interval a = e23 * mm * Interval::from(make_rational(m, 12), prec).exp();
        Interval b = e23 * mm * Interval::from(make_rational(1, 12 * m), prec).exp();
        rows.push_back({m, ratio, a, b, ratio.certainly_le(a), ratio.certainly_le(b)});
    }
    return rows;
}

}  // namespace ratcond
