#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ratcond/exact/gauss.hpp"
#include "ratcond/exact/interval.hpp"
#include "ratcond/exact/univariate.hpp"
#include "ratcond/polysys/zeros.hpp"

namespace ratcond::polysys {

// For a binary form f with coefficients a_k of X0^{d-k} X1^k and a simple zero t = x1/x0:
//   rho(f, zeta)^2 = |p'(t)|^2 / ((1 + |t|^2)^{d-2} d ||f||_Delta^2),   p(t) = f(1, t),
// and at the zero (0:1): rho^2 = |a_{d-1}|^2 / (d ||f||_Delta^2).
// For d = 2 both collapse to rho(f)^2 = |a_1^2 - 4 a_0 a_2| / (2 ||f||_Delta^2).

// Homogeneous discriminant for d <= 3 (zero iff a repeated zero in P^1, infinity included).
template <class Int>
GaussInteger<Int> binary_discriminant(std::span<const GaussInteger<Int>> a) {
    using G = GaussInteger<Int>;
    switch (a.size()) {
        case 2:
            return G{Int(1), Int(0)};
        case 3:
            return a[1] * a[1] - G{Int(4)} * a[0] * a[2];
        case 4: {
            // p(t) = a0 + a1 t + a2 t^2 + a3 t^3
            const G &A = a[0], &B = a[1], &C = a[2], &D = a[3];
            return B * B * C * C - G{Int(4)} * A * C * C * C - G{Int(4)} * B * B * B * D - G{Int(27)} * A * A * D * D +
                   G{Int(18)} * A * B * C * D;
        }
        default:
            throw std::domain_error("binary_discriminant: degree must be 1, 2 or 3");
    }
}

// Enclosure of rho(f)^2 for a square-free binary form; nullopt when root isolation fails
// at this precision. `norm_sq` is ||f||_Delta^2.
inline std::optional<Interval> binary_rho_squared(const std::vector<GaussRational>& a, const Rational& norm_sq,
                                                  mpfr_prec_t prec) {
    const int d = static_cast<int>(a.size()) - 1;
    Poly<GaussRational> p = dehomogenized(a);
    const int deg = degree(p);
    Interval denom_base = Interval::from(norm_sq * Rational(d), prec);
    std::optional<Interval> best;
    auto take = [&](Interval v) { best = best ? Interval::min(*best, v) : v; };
    if (deg < d) take(Interval::from(a[d - 1].norm() / (norm_sq * Rational(d)), prec));
    auto discs = isolate_roots(p, prec);
    if (!discs) return std::nullopt;
    std::vector<ComplexInterval> dP;
    for (int k = 1; k <= deg; ++k) dP.push_back(to_interval(p[k], prec) * Interval::from(static_cast<long>(k), prec));
    for (const auto& disc : *discs) {
        ComplexInterval T = disc.box();
        Interval num = horner(dP, T).norm_sq();
        Interval w = 1L + T.norm_sq();
        Interval v = d >= 2 ? num / (w.pow(d - 2) * denom_base) : num * w / denom_base;
        take(v);
    }
    return best;
}

enum class Membership { inside, outside, uncertain };

struct RhoClassification {
    std::vector<Membership> per_epsilon;  // rho <= eps_j ?
    mpfr_prec_t precision_used = 0;
};

// Decides rho(f) <= eps_j for every eps_j, refining the enclosure up to `max_prec`.
inline RhoClassification classify_binary_form(const std::vector<GaussRational>& a, const Rational& norm_sq,
                                               const std::vector<Rational>& eps_sq, mpfr_prec_t start_prec = 64,
                                               mpfr_prec_t max_prec = 512) {
    RhoClassification out;
    out.per_epsilon.assign(eps_sq.size(), Membership::uncertain);
    for (mpfr_prec_t prec = start_prec; prec <= max_prec; prec *= 2) {
        out.precision_used = prec;
        auto r = binary_rho_squared(a, norm_sq, prec);
        if (!r) continue;
        bool all = true;
        for (std::size_t j = 0; j < eps_sq.size(); ++j) {
            if (out.per_epsilon[j] != Membership::uncertain) continue;
            if (r->certainly_le(eps_sq[j]))
                out.per_epsilon[j] = Membership::inside;
            else if (r->certainly_gt(eps_sq[j]))
                out.per_epsilon[j] = Membership::outside;
            else
                all = false;
        }
        if (all) break;
    }
    return out;
}

}  // namespace ratcond::polysys
