#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ratcond/exact/constants.hpp"
#include "ratcond/exact/interval.hpp"

namespace ratcond::census {

struct RegionOracle {
    unsigned dim = 0;
    std::function<bool(std::span<const Rational>)> contains;
    std::vector<std::pair<Rational, Rational>> hull;  // per-axis [lo, hi]; empty region: lo > hi on some axis
    bool bounded = true;
};

inline RegionOracle ball_region(unsigned m, const Rational& H) {
    RegionOracle r;
    r.dim = m;
    Rational H2 = H * H;
    r.contains = [H2](std::span<const Rational> x) {
        Rational s = 0;
        for (const auto& v : x) s += v * v;
        return s <= H2;
    };
    r.hull.assign(m, {-H, H});
    return r;
}

inline RegionOracle empty_region(unsigned m) {
    RegionOracle r;
    r.dim = m;
    r.contains = [](std::span<const Rational>) { return false; };
    r.hull.assign(m, {Rational(1), Rational(0)});
    return r;
}

// V(R, l) for the ball of radius H in R^m: C(m, l) coordinate projections, each an l-ball.
// Index l = 0..m; entry m is Vol(R).
inline std::vector<Interval> ball_projections(unsigned m, const Rational& H, mpfr_prec_t prec = kDefaultPrecision) {
    std::vector<Interval> v;
    Interval h = Interval::from(H, prec);
    for (unsigned l = 0; l <= m; ++l)
        v.push_back(Interval::from(binomial(m, l), prec) * ball_volume_K(l, prec) * h.pow(l));
    return v;
}

struct DavenportRecord {
    std::uint64_t count = 0;
    Interval volume;
    Interval bound;
    Interval discrepancy;  // |N - Vol|
    bool pass = false;
};

// |N(R) - Vol(R)| <= sum_{l<m} h^{m-l} V(R, l). `projections` holds V(R, 0..m), the last entry Vol(R).
inline DavenportRecord davenport_check(const RegionOracle& region, unsigned long h_R, const std::vector<Interval>& projections) {
    const unsigned m = region.dim;
    if (!region.bounded || region.hull.size() != m) throw std::invalid_argument("davenport_check: region must be bounded with a hull per axis");
    if (projections.size() != m + 1) throw std::invalid_argument("davenport_check: need V(R, l) for l = 0..m");
    if (h_R < 1) throw std::invalid_argument("davenport_check: h_R must be positive");
    DavenportRecord rec;
    std::vector<long long> lo(m), hi(m);
    bool empty = false;
    for (unsigned k = 0; k < m; ++k) {
        Integer a, b;
        mpz_cdiv_q(a.get_mpz_t(), region.hull[k].first.get_num_mpz_t(), region.hull[k].first.get_den_mpz_t());
        mpz_fdiv_q(b.get_mpz_t(), region.hull[k].second.get_num_mpz_t(), region.hull[k].second.get_den_mpz_t());
        lo[k] = a.get_si();
        hi[k] = b.get_si();
        if (lo[k] > hi[k]) empty = true;
    }
    if (!empty && m > 0) {
        std::vector<long long> x(lo);
        std::vector<Rational> q(m);
        while (true) {
            for (unsigned k = 0; k < m; ++k) q[k] = Rational(static_cast<long>(x[k]));
            if (region.contains(q)) ++rec.count;
            unsigned k = m;
            while (k > 0 && x[k - 1] == hi[k - 1]) {
                x[k - 1] = lo[k - 1];
                --k;
            }
            if (k == 0) break;
            ++x[k - 1];
        }
    }
    mpfr_prec_t prec = projections.back().prec();
    rec.volume = projections[m];
    Interval b(prec);
    for (unsigned l = 0; l < m; ++l)
        b = b + Interval::from(ipow(Integer(h_R), m - l), prec) * projections[l];
    rec.bound = b;
    rec.discrepancy = (Interval::from(static_cast<long>(rec.count), prec) - rec.volume).abs();
    rec.pass = rec.discrepancy.certainly_le(rec.bound);
    return rec;
}

}  // namespace ratcond::census
