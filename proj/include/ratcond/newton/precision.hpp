#pragma once

#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ratcond/exact/constants.hpp"
#include "ratcond/newton/gamma.hpp"

namespace ratcond::newton {

struct PrecisionValue {
    Integer q = 1;    // least positive integer with q z in Z[i]^n
    double pr = 0;    // max{0, log2 q}
};

inline PrecisionValue precision_of(const std::vector<GaussRational>& z) {
    PrecisionValue p;
    for (const auto& c : z) {
        p.q = lcm(p.q, c.re.get_den());
        p.q = lcm(p.q, c.im.get_den());
    }
    long e = 0;
    double m = mpz_get_d_2exp(&e, p.q.get_mpz_t());
    p.pr = std::max(0.0, std::log2(m) + static_cast<double>(e));
    return p;
}

// Disc test ||w - m zeta|| <= m (3 - sqrt 7)/(2 gamma) for w in Z[i]^n.
// With zeta = P/q (P Gauss-integer, q > 0) and gamma^2 = a/b rational it is exact:
// X = ||q w - m P||^2, Y = b q^2 m^2, inside iff 8Y - 2aX >= 0 and (8Y - 2aX)^2 >= 63 Y^2.
class DiscTester {
public:
    DiscTester(const std::vector<GaussRational>& zeta, const Rational& gamma_sq) : a_(gamma_sq.get_num()), b_(gamma_sq.get_den()) {
        if (gamma_sq <= 0) throw std::invalid_argument("DiscTester: gamma must be positive");
        q_ = 1;
        for (const auto& c : zeta) q_ = lcm(lcm(q_, c.re.get_den()), c.im.get_den());
        for (const auto& c : zeta) {
            P_.push_back(Integer(c.re * q_));
            P_.push_back(Integer(c.im * q_));
        }
        const long lim = 1L << 30;
        small_ = abs(a_) < lim && b_ < lim && q_ < lim;
        for (const auto& v : P_) small_ = small_ && abs(v) < lim;
        if (small_) {
            a_small_ = a_.get_si();
            b_small_ = b_.get_si();
            q_small_ = q_.get_si();
            for (const auto& v : P_) P_small_.push_back(v.get_si());
        }
    }
    std::size_t real_dim() const { return P_.size(); }
    const Integer& q() const { return q_; }
    const std::vector<Integer>& P() const { return P_; }

    bool inside(const std::vector<long long>& w, long m) const {
        if (small_) {
            if (auto r = inside_i128(w, m)) return *r;
        }
        Integer X = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            Integer d = q_ * to_integer(w[k]) - Integer(m) * P_[k];
            X += d * d;
        }
        Integer Y = b_ * q_ * q_ * Integer(m) * Integer(m);
        Integer s = 8 * Y - 2 * a_ * X;
        return s >= 0 && s * s >= 63 * Y * Y;
    }

    // Real radius upper bound m (3 - sqrt 7)/(2 gamma) for the enumeration box.
    double radius_bound(long m) const {
        double g = std::sqrt(Rational(a_, b_).get_d());
        return static_cast<double>(m) * (3.0 - std::sqrt(7.0)) / (2.0 * g) * (1 + 1e-12) + 1e-12;
    }

private:
    // Same test in 128-bit arithmetic; nullopt on overflow.
    std::optional<bool> inside_i128(const std::vector<long long>& w, long m) const {
        i128 X = 0, t = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            i128 a = 0, b = 0;
            if (__builtin_mul_overflow(q_small_, static_cast<i128>(w[k]), &a)) return std::nullopt;
            if (__builtin_mul_overflow(static_cast<i128>(m), P_small_[k], &b)) return std::nullopt;
            i128 d = a - b;
            if (__builtin_mul_overflow(d, d, &t) || __builtin_add_overflow(X, t, &X)) return std::nullopt;
        }
        i128 Y = 0, s = 0, u = 0, v = 0;
        if (__builtin_mul_overflow(b_small_ * q_small_ * q_small_, static_cast<i128>(m) * m, &Y)) return std::nullopt;
        if (__builtin_mul_overflow(2 * a_small_, X, &u) || __builtin_mul_overflow(Y, static_cast<i128>(8), &v)) return std::nullopt;
        s = v - u;
        if (s < 0) return false;
        if (__builtin_mul_overflow(s, s, &u) || __builtin_mul_overflow(Y, Y, &v) || __builtin_mul_overflow(v, static_cast<i128>(63), &v))
            return std::nullopt;
        return u >= v;
    }

    Integer a_, b_, q_;
    std::vector<Integer> P_;
    bool small_ = false;
    i128 a_small_ = 0, b_small_ = 0, q_small_ = 0;
    std::vector<i128> P_small_;
};

struct DiscCount {
    long m = 0;
    std::uint64_t all = 0;      // w in Z[i]^n inside the disc: z = w/m with denominator dividing m
    std::uint64_t exact = 0;    // of these, Pr(w/m) = log2 m
    std::vector<std::vector<long long>> exact_points;  // kept when `keep_points`
};

inline DiscCount count_disc(const DiscTester& t, long m, bool keep_points = false) {
    DiscCount c;
    c.m = m;
    const std::size_t dim = t.real_dim();
    double R = t.radius_bound(m);
    std::vector<long long> lo(dim), hi(dim), w(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        double center = Rational(Integer(m) * t.P()[k], t.q()).get_d();
        lo[k] = static_cast<long long>(std::floor(center - R)) - 1;
        hi[k] = static_cast<long long>(std::ceil(center + R)) + 1;
        w[k] = lo[k];
    }
    if (dim == 0) return c;
    while (true) {
        if (t.inside(w, m)) {
            ++c.all;
            long long g = m;
            for (long long v : w) g = std::gcd(g, v);
            if (g == 1) {
                ++c.exact;
                if (keep_points) c.exact_points.push_back(w);
            }
        }
        std::size_t k = dim;
        while (k > 0 && w[k - 1] == hi[k - 1]) {
            w[k - 1] = lo[k - 1];
            --k;
        }
        if (k == 0) break;
        ++w[k - 1];
    }
    return c;
}

struct ApproxZeroCensus {
    Rational gamma_sq;
    Interval H1;     // sqrt(gamma / (3 - sqrt 7))
    Interval H2;     // gamma / (3 - sqrt 7)
    std::vector<DiscCount> rows;  // m = 1..m_max
};

inline ApproxZeroCensus approx_zero_census(const std::vector<GaussRational>& zeta, const Rational& gamma_sq, long m_max,
                                          bool keep_points = false, mpfr_prec_t prec = kDefaultPrecision) {
    ApproxZeroCensus out;
    out.gamma_sq = gamma_sq;
    DiscTester t(zeta, gamma_sq);
    Interval g = Interval::from(gamma_sq, prec).sqrt();
    out.H2 = g / (Interval::from(3L, prec) - Interval::from(7L, prec).sqrt());
    out.H1 = out.H2.sqrt();
    for (long m = 1; m <= m_max; ++m) out.rows.push_back(count_disc(t, m, keep_points));
    return out;
}

struct ApproxZeroStructure {
    bool item_i = true;        // sum_{m <= H} N_m <= 1 for every integer H < H1
    bool item_ii = true;       // N_m <= 1 for H1 <= m <= H2
    bool item_iii = true;      // sandwich on the dividing counts
    bool gap_principle = true; // m < H2: the disc is narrower than 1/m, so it holds at most one point of (1/m)Z[i]^n
    long middle_first = 0, middle_last = -1;  // integers in [H1, H2]
    long first_failure_m = -1;
    std::vector<Interval> lower, upper;       // item (iii) bounds per m
};

// Item (iii) with K_{2n} (volume of the unit ball of R^{2n} = C^n) and r_m - sqrt(2n) clamped at 0.
inline ApproxZeroStructure approx_zero_structure_check(const ApproxZeroCensus& c, unsigned n, mpfr_prec_t prec = kDefaultPrecision) {
    ApproxZeroStructure r;
    Interval K = ball_volume_K(2 * n, prec);
    Interval s2n = Interval::from(static_cast<long>(2 * n), prec).sqrt();
    Interval rad_unit = (Interval::from(3L, prec) - Interval::from(7L, prec).sqrt()) / (Interval::from(c.gamma_sq, prec).sqrt() * 2L);
    std::uint64_t prefix = 0;
    for (const auto& row : c.rows) {
        prefix += row.exact;
        Rational mq(row.m);
        if (c.H1.certainly_gt(mq) && prefix > 1) {
            r.item_i = false;
            if (r.first_failure_m < 0) r.first_failure_m = row.m;
        }
        if (c.H1.certainly_le(mq) && c.H2.certainly_ge(mq)) {
            if (r.middle_first == 0) r.middle_first = row.m;
            r.middle_last = row.m;
            if (row.exact > 1) {
                r.item_ii = false;
                if (r.first_failure_m < 0) r.first_failure_m = row.m;
            }
        }
        Interval rm = rad_unit * Interval::from(static_cast<long>(row.m), prec);
        Interval lo_base = rm - s2n;
        if (!lo_base.certainly_positive()) lo_base = Interval(prec);
        Interval lo = K * lo_base.pow(2 * n);
        Interval hi = K * (rm + s2n / 2L).pow(2 * n);
        Interval N = Interval::from(static_cast<long>(row.all), prec);
        if (!(lo.certainly_le(N) && N.certainly_le(hi))) {
            r.item_iii = false;
            if (r.first_failure_m < 0) r.first_failure_m = row.m;
        }
        r.lower.push_back(lo);
        r.upper.push_back(hi);
        if (c.H2.certainly_gt(mq) && row.all > 1) {
            r.gap_principle = false;
            if (r.first_failure_m < 0) r.first_failure_m = row.m;
        }
    }
    return r;
}

struct ApproxZeroPrecision {
    long p = 0;                         // smallest integer meeting the threshold
    Interval threshold;                 // log gamma + log(K_n^{-1/2n} + sqrt 2n) + 1
    std::vector<GaussRational> z;       // constructed point on the grid 2^{-p}
    PrecisionValue precision;
    bool exact_precision = false;       // Pr(z) = p
    bool certified = false;
    std::string diagnostic;
};

// Smallest p >= log_b gamma + log_b(K_n^{-1/(2n)} + sqrt(2n)) + 1 (K_n as written, base b = 2 by
// default), then a constructive witness: zeta rounded to the grid 2^{-p}; if that point has a smaller
// denominator, the nearest grid point of exact denominator 2^p is tried as well.
inline ApproxZeroPrecision approx_zero_precision(const AffineSystem& f, const ZeroPoint& zeta, double log_base = 2,
                                         mpfr_prec_t prec = kDefaultPrecision) {
    const unsigned n = static_cast<unsigned>(f.n());
    ApproxZeroPrecision r;
    GammaValue g = gamma_quantity(f, zeta);
    if (!g.upper.certainly_positive()) {
        r.threshold = Interval::from(1L, prec);
    } else {
        Interval lb = Interval::from_double(std::log(log_base), prec);
        Interval K = ball_volume_K(n, prec);
        Interval inner = Interval::from(1L, prec) / K.root(2 * n) + Interval::from(static_cast<long>(2 * n), prec).sqrt();
        r.threshold = g.upper.log() / lb + inner.log() / lb + 1L;
    }
    r.p = std::max(0L, static_cast<long>(std::ceil(r.threshold.upper())));
    Integer scale = ipow(Integer(2), static_cast<unsigned long>(r.p));
    auto round_to_grid = [&](const Interval& v) {
        Rational x = Rational(v.mid()) * scale;
        Integer k;
        mpz_fdiv_q(k.get_mpz_t(), Rational(x + make_rational(1, 2)).get_num_mpz_t(), Rational(x + make_rational(1, 2)).get_den_mpz_t());
        return k;
    };
    std::vector<Integer> w;
    for (const auto& c : zeta.box) {
        w.push_back(round_to_grid(c.re));
        w.push_back(round_to_grid(c.im));
    }
    auto build = [&](const std::vector<Integer>& v) {
        std::vector<GaussRational> z;
        for (std::size_t j = 0; j < v.size() / 2; ++j) z.push_back({Rational(v[2 * j], scale), Rational(v[2 * j + 1], scale)});
        for (auto& c : z) {
            c.re.canonicalize();
            c.im.canonicalize();
        }
        return z;
    };
    auto attempt = [&](const std::vector<Integer>& v) {
        auto z = build(v);
        auto cert = certify_approx_zero(f, zeta, z, 0);
        return std::make_pair(z, cert.certified);
    };
    auto [z0, ok0] = attempt(w);
    r.z = z0;
    r.certified = ok0;
    r.precision = precision_of(z0);
    r.exact_precision = r.precision.q == scale;
    if (!r.exact_precision && r.p > 0) {
        // Move one coordinate by one grid step to make it odd.
        for (std::size_t k = 0; k < w.size() && !r.exact_precision; ++k)
            for (int delta : {1, -1}) {
                std::vector<Integer> v = w;
                v[k] += delta;
                auto [z1, ok1] = attempt(v);
                if (ok1 && precision_of(z1).q == scale) {
                    r.z = z1;
                    r.certified = true;
                    r.precision = precision_of(z1);
                    r.exact_precision = true;
                    break;
                }
            }
    }
    if (!r.certified) r.diagnostic = "rounded point does not certify";
    return r;
}

}  // namespace ratcond::newton
