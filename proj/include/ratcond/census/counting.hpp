#pragma once

#include <optional>
#include <vector>

#include "ratcond/census/census.hpp"
#include "ratcond/exact/constants.hpp"

namespace ratcond::census {

// Lattice-point counts of the height ball against its volume, for every integer radius h <= H
// of one census. Linear (m = n^2, u = 2 units):
//   |N - Vol| <= h^{m-1} S^(m),   |visible/2 - Vol/(2 zeta(m))| <= L(1,n) h^{m-1} + h/2.
// Binary forms (m = 2N+2, u = 4 units, Vol of the Delta ball):
//   |visible/4 - Vol/(4 zeta(m))| <= Lbar(1,N) h^{m-1} + h/4; no all-point row.
struct CountingRow {
    long long h = 0;
    std::uint64_t N = 0;           // lattice points in the ball of radius h, zero included
    std::uint64_t visible = 0;
    Interval volume;
    bool all_checked = false;
    Interval all_lhs;              // |N - Vol|
    Interval all_rhs;
    bool all_holds = false;
    Interval proj_lhs;             // |visible/u - Vol/(u zeta(m))|
    Interval proj_rhs;
    Interval proj_margin;          // rhs - lhs
    bool proj_holds = false;
};

inline std::vector<CountingRow> counting_rows(const CensusReport& rep, mpfr_prec_t prec = kDefaultPrecision) {
    const bool linear = rep.spec.kind == CensusKind::linear;
    std::optional<LinearBoundConstants> lc;
    std::optional<NonlinearBoundConstants> nc;
    unsigned m = 0;
    long units = 2;
    Interval L(prec), zeta_m(prec);
    if (linear) {
        lc = linear_bound_constants(rep.spec.n, Rational(1), prec);
        m = rep.spec.n * rep.spec.n;
        L = lc->L1;
        zeta_m = lc->zeta_n2;
    } else {
        nc = nonlinear_bound_constants(rep.spec.degrees, Rational(1), prec);
        m = 2 * nc->N + 2;
        units = 4;
        L = nc->Lbar1;
        zeta_m = nc->zeta_2N2;
    }
    std::vector<CountingRow> out;
    for (long long h = 1; h * h * rep.norm_scale <= rep.scaled_bound; ++h) {
        const long long T = h * h * rep.norm_scale;
        const Rational hq(static_cast<long>(h));
        CountingRow r;
        r.h = h;
        r.N = rep.all.total_upto(T) + 1;
        r.visible = rep.all.visible_upto(T);
        Interval hh = Interval::from(static_cast<long>(h), prec);
        r.volume = linear ? lc->ball_volume(hq) : nc->ball_volume(hq);
        if (linear) {
            r.all_checked = true;
            r.all_lhs = (Interval::from(static_cast<long>(r.N), prec) - r.volume).abs();
            r.all_rhs = hh.pow(m - 1) * lc->sigma;
            r.all_holds = r.all_lhs.certainly_le(r.all_rhs);
        }
        Interval proj = Interval::from(make_rational(Integer(static_cast<long>(r.visible)), Integer(units)), prec);
        r.proj_lhs = (proj - r.volume / (zeta_m * units)).abs();
        r.proj_rhs = L * hh.pow(m - 1) + hh / units;
        r.proj_margin = r.proj_rhs - r.proj_lhs;
        r.proj_holds = r.proj_lhs.certainly_le(r.proj_rhs);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace ratcond::census
