#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <utility>

#include "ratcond/exact/interval.hpp"
#include "ratcond/exact/univariate.hpp"
#include "ratcond/linear/matrix.hpp"

namespace ratcond::linear {

struct ConditionRecord {
    Interval sigma_min;
    Interval sigma_max;
    Interval frobenius;
    Interval k;
    Interval mu;
    bool singular = false;
};

inline Interval frobenius_norm(const SquareMatrix& m, mpfr_prec_t prec = kDefaultPrecision) {
    return Interval::from(frobenius_squared(m), prec).sqrt();
}

namespace detail {

inline Rational to_rational(double v) {
    Rational q(v);  // exact binary value
    return q;
}

// Roots of the real-rooted char poly of M^T M, isolated by Sturm counts and bisected
// to relative width 2^-bits. Returns [lo, hi] rational brackets of lambda_min and lambda_max.
struct EigenBrackets {
    Rational min_lo, min_hi, max_lo, max_hi;
};

inline EigenBrackets gram_eigen_brackets(const SquareMatrix& m, unsigned bits) {
    const std::size_t n = m.n;
    SquareMatrix G = gram(m);
    Poly<Rational> p = charpoly(G);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += G(i, i);
    auto chain = sturm_chain(p);
    const Rational below(-1);
    const Rational above = trace + 1;
    const int total = sturm_count(chain, below, above);
    auto count_le = [&](const Rational& x) { return x < 0 ? 0 : sturm_count(chain, below, x); };

    Eigen::MatrixXd Gd(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) Gd(i, j) = G(i, j).get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Gd, Eigen::EigenvaluesOnly);
    const double est_min = es.eigenvalues()(0);
    const double est_max = es.eigenvalues()(static_cast<Eigen::Index>(n - 1));
    const double scale = std::max(1.0, std::abs(est_max));

    Rational bound = make_rational(1, ipow(Integer(2), bits));
    EigenBrackets r;

    // lambda_min: largest x with count_le(x) == 0 below, smallest with count_le >= 1 above
    if (evaluate(p, Rational(0), Rational(0)) == 0) {
        r.min_lo = r.min_hi = 0;
    } else {
        double delta = 1e-10 * scale;
        Rational lo, hi;
        for (;;) {
            lo = to_rational(std::max(0.0, est_min - delta));
            hi = to_rational(est_min + delta);
            if (count_le(lo) == 0 && count_le(hi) >= 1) break;
            delta *= 16;
            if (delta > 4 * scale + 4) {
                lo = 0;
                hi = above;
                break;
            }
        }
        while (hi - lo > bound * (hi > 1 ? hi : Rational(1))) {
            Rational mid = (lo + hi) / 2;
            if (count_le(mid) >= 1)
                hi = mid;
            else
                lo = mid;
        }
        r.min_lo = lo;
        r.min_hi = hi;
    }
    {
        double delta = 1e-10 * scale;
        Rational lo, hi;
        for (;;) {
            lo = to_rational(std::max(0.0, est_max - delta));
            hi = to_rational(est_max + delta);
            if (count_le(lo) < total && count_le(hi) == total) break;
            delta *= 16;
            if (delta > 4 * scale + 4) {
                lo = Rational(-1);
                hi = above;
                break;
            }
        }
        while (hi - lo > bound * (hi > 1 ? hi : Rational(1))) {
            Rational mid = (lo + hi) / 2;
            if (count_le(mid) == total)
                hi = mid;
            else
                lo = mid;
        }
        if (lo < 0) lo = 0;
        r.max_lo = lo;
        r.max_hi = hi;
    }
    return r;
}

inline Interval bracket(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    return Interval::hull(Interval::from(lo, prec), Interval::from(hi, prec));
}

}  // namespace detail

// Enclosures of (sigma_min, sigma_max).
inline std::pair<Interval, Interval> singular_extremes(const SquareMatrix& m, unsigned bits = 64,
                                                       mpfr_prec_t prec = kDefaultPrecision) {
    if (m.n == 0) throw std::invalid_argument("singular_extremes: empty matrix");
    auto b = detail::gram_eigen_brackets(m, bits);
    return {detail::bracket(b.min_lo, b.min_hi, prec).sqrt(), detail::bracket(b.max_lo, b.max_hi, prec).sqrt()};
}

inline ConditionRecord condition_record(const SquareMatrix& m, unsigned bits = 64, mpfr_prec_t prec = kDefaultPrecision) {
    ConditionRecord r;
    auto [smin, smax] = singular_extremes(m, bits, prec);
    r.sigma_min = smin;
    r.sigma_max = smax;
    r.frobenius = frobenius_norm(m, prec);
    r.singular = determinant(m) == 0;
    if (r.singular) {
        r.sigma_min = Interval(prec);
        r.k = Interval::infinity(prec);
        r.mu = Interval::infinity(prec);
    } else {
        r.k = smax / smin;
        r.mu = r.frobenius / smin;
    }
    return r;
}

inline Interval condition_k(const SquareMatrix& m, unsigned bits = 64) { return condition_record(m, bits).k; }
inline Interval condition_mu(const SquareMatrix& m, unsigned bits = 64) { return condition_record(m, bits).mu; }

// rho = sigma_min / ||M||_F
inline Interval fs_distance_to_singular(const SquareMatrix& m, unsigned bits = 64) {
    if (frobenius_squared(m) == 0) throw std::invalid_argument("fs_distance_to_singular: zero matrix");
    auto r = condition_record(m, bits);
    if (r.singular) return Interval(r.frobenius.prec());
    return r.sigma_min / r.frobenius;
}

// Exact test of sigma_min <= eps ||M||_F: does det(lambda I - M^T M) vanish on [0, eps^2 ||M||_F^2]?
inline bool in_mu_tube(const SquareMatrix& m, const Rational& eps) {
    Rational c = eps * eps * frobenius_squared(m);
    Poly<Rational> p = charpoly(gram(m));
    if (evaluate(p, c, Rational(0)) == 0 || evaluate(p, Rational(0), Rational(0)) == 0) return true;
    auto chain = sturm_chain(p);
    return sturm_count(chain, Rational(-1), c) >= 1;
}

}  // namespace ratcond::linear
