#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratcond/newton/affine.hpp"
#include "ratcond/polysys/condition.hpp"
#include "ratcond/polysys/zeros.hpp"

namespace ratcond::newton {

// A zero of f: an exact Gauss-rational point, or a box enclosing it.
struct ZeroPoint {
    std::vector<ComplexInterval> box;
    std::optional<std::vector<GaussRational>> exact;

    static ZeroPoint exact_point(const AffineSystem& f, const std::vector<GaussRational>& z, mpfr_prec_t prec = kDefaultPrecision) {
        if (static_cast<int>(z.size()) != f.n()) throw std::invalid_argument("zero: point dimension");
        if (!is_exact_zero(f, z)) throw std::invalid_argument("zero: point is not an exact zero of the system");
        ZeroPoint p;
        for (const auto& c : z) p.box.push_back(ComplexInterval::from(c.re, c.im, prec));
        p.exact = z;
        return p;
    }
    static ZeroPoint enclosure(std::vector<ComplexInterval> box) {
        ZeroPoint p;
        p.box = std::move(box);
        return p;
    }
    mpfr_prec_t prec() const { return box.empty() ? kDefaultPrecision : box[0].re.prec(); }
};

// Certified boxes around the simple zeros of a univariate f (n = 1).
inline std::vector<ZeroPoint> univariate_zeros(const AffineSystem& f, mpfr_prec_t prec = kDefaultPrecision) {
    if (f.n() != 1) throw std::domain_error("univariate_zeros: n must be 1");
    Poly<GaussRational> p(static_cast<std::size_t>(f.degrees[0]) + 1, GaussRational(0));
    for (std::size_t k = 0; k < f.coeffs[0].size(); ++k) p[static_cast<std::size_t>(f.exponents[0][k][0])] += f.coeffs[0][k];
    trim(p);
    std::vector<ZeroPoint> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        if (mult != 1) continue;
        auto discs = polysys::isolate_roots(factor, prec);
        if (!discs) throw std::runtime_error("univariate_zeros: root isolation failed");
        for (const auto& d : *discs) out.push_back(ZeroPoint::enclosure({d.box()}));
    }
    return out;
}

// (3 - sqrt 7) / 2, outward rounded.
inline Interval gamma_threshold(mpfr_prec_t prec = kDefaultPrecision) {
    return (Interval::from(3L, prec) - Interval::from(7L, prec).sqrt()) / 2L;
}

struct GammaValue {
    Interval upper;                       // enclosure whose upper end bounds gamma(F, zeta)
    std::vector<Interval> per_k;          // index k - 2
    std::optional<Rational> exact_square; // gamma^2 when it is rational and exact (zeta exact, D <= 2)
};

// gamma(F, zeta) <= max_{2<=k<=D} ||DF^{-1} D^k F / k!||_F^{1/(k-1)}, with
// ||DF^{-1} D^k F / k!||_F^2 = sum_{|beta|=k} (beta!/k!) ||DF^{-1} g_beta||^2, g_beta the Taylor
// coefficients. For n = 1 this is |f^(k)/(k! f')|^{1/(k-1)}, the exact value.
inline GammaValue gamma_quantity(const AffineSystem& f, const ZeroPoint& zeta) {
    const int n = f.n();
    const int D = static_cast<int>(f.degrees.D());
    const mpfr_prec_t prec = zeta.prec();
    GammaValue g;
    g.upper = Interval(prec);
    if (zeta.exact && D <= 2) {
        ExactField ex;
        auto J = jacobian(ex, f, *zeta.exact);
        Rational sum = 0;
        if (D == 2)
            for (const auto& beta : monomials_of_degree(2, n)) {
                auto u = solve(ex, J, taylor_coefficients(ex, f, *zeta.exact, beta));
                Rational w = Rational(multinomial(beta));  // 2!/beta!
                Rational nrm = 0;
                for (const auto& c : u) nrm += c.norm();
                sum += nrm / w;
            }
        else
            solve(ex, J, std::vector<GaussRational>(static_cast<std::size_t>(n), GaussRational(0)));
        g.exact_square = sum;
        g.upper = Interval::from(sum, prec).sqrt();
        if (D == 2) g.per_k.push_back(g.upper);
        return g;
    }
    IntervalField fld{prec};
    auto J = jacobian(fld, f, zeta.box);
    for (int k = 2; k <= D; ++k) {
        Interval sum(prec);
        for (const auto& beta : monomials_of_degree(k, n)) {
            auto u = solve(fld, J, taylor_coefficients(fld, f, zeta.box, beta));
            Interval nrm(prec);
            for (const auto& c : u) nrm = nrm + c.norm_sq();
            sum = sum + nrm / Interval::from(multinomial(beta), prec);
        }
        Interval gk = sum.root(static_cast<unsigned long>(2 * (k - 1)));
        g.per_k.push_back(gk);
        g.upper = Interval::max(g.upper, gk);
    }
    if (D < 2) solve(fld, J, std::vector<ComplexInterval>(static_cast<std::size_t>(n), fld.zero()));
    return g;
}

struct Iterate {
    std::vector<GaussRational> z;
    double residual = 0;      // max |f_i(z)|
    Interval distance;        // ||z - zeta||
    Interval allowed;         // (1/2)^{2^k - 1} ||z_0 - zeta||
    bool within = true;
};

struct CertResult {
    GammaValue gamma;
    Interval radius;          // (3 - sqrt 7) / (2 gamma_upper)
    Interval distance;        // ||z - zeta||
    bool certified = false;
    bool convergence_ok = false;
    std::vector<Iterate> iterates;
    std::string diagnostic;
};

namespace detail {

inline Interval distance_to(const std::vector<GaussRational>& z, const ZeroPoint& zeta) {
    const mpfr_prec_t prec = zeta.prec();
    Interval s(prec);
    for (std::size_t j = 0; j < z.size(); ++j)
        s = s + (ComplexInterval::from(z[j].re, z[j].im, prec) - zeta.box[j]).norm_sq();
    return s.sqrt();
}

inline Rational distance_sq_exact(const std::vector<GaussRational>& z, const std::vector<GaussRational>& zeta) {
    Rational s = 0;
    for (std::size_t j = 0; j < z.size(); ++j) s += (z[j] - zeta[j]).norm();
    return s;
}

// delta * gamma <= (3 - sqrt 7)/2 for rational delta^2, gamma^2: with t = delta^2 gamma^2,
// the condition is 4 - t >= (3/2) sqrt 7, i.e. 4 - t >= 0 and (4 - t)^2 >= 63/4.
inline bool exact_threshold_holds(const Rational& t) {
    Rational a = Rational(4) - t;
    return a >= 0 && a * a >= make_rational(63, 4);
}

}  // namespace detail

// Certifies z as an approximate zero with associated zero zeta, then runs `steps` Newton
// iterates and checks ||z_k - zeta|| <= (1/2)^{2^k - 1} ||z_0 - zeta||.
inline CertResult certify_approx_zero(const AffineSystem& f, const ZeroPoint& zeta, const std::vector<GaussRational>& z,
                                      int steps = 5) {
    if (static_cast<int>(z.size()) != f.n() || zeta.box.size() != z.size())
        throw std::invalid_argument("certify_approx_zero: dimension mismatch");
    CertResult r;
    const mpfr_prec_t prec = zeta.prec();
    r.gamma = gamma_quantity(f, zeta);
    Interval thr = gamma_threshold(prec);
    r.radius = r.gamma.upper.certainly_positive() ? thr / r.gamma.upper : Interval::infinity(prec);
    r.distance = detail::distance_to(z, zeta);
    if (zeta.exact && r.gamma.exact_square) {
        Rational d2 = detail::distance_sq_exact(z, *zeta.exact);
        r.certified = detail::exact_threshold_holds(d2 * *r.gamma.exact_square);
    } else {
        r.certified = (r.distance * r.gamma.upper).certainly_le(thr);
    }
    if (!r.certified) {
        r.diagnostic = "||z - zeta|| gamma exceeds (3 - sqrt 7)/2 (or cannot be certified below it)";
        return r;
    }
    std::vector<GaussRational> cur = z;
    Rational d0sq = zeta.exact ? detail::distance_sq_exact(z, *zeta.exact) : Rational(0);
    r.convergence_ok = true;
    for (int k = 0; k <= steps; ++k) {
        if (k > 0) {
            try {
                cur = newton_step(f, cur);
            } catch (const SingularJacobian& e) {
                r.convergence_ok = false;
                r.diagnostic = std::string("singular Jacobian at iterate ") + std::to_string(k);
                return r;
            }
        }
        Iterate it;
        it.z = cur;
        for (const auto& v : evaluate(ExactField{}, f, cur)) it.residual = std::max(it.residual, std::sqrt(v.norm().get_d()));
        it.distance = detail::distance_to(cur, zeta);
        unsigned long e = (1ul << k) - 1;
        Interval factor = Interval::from(make_rational(1, ipow(Integer(2), e)), prec);
        it.allowed = factor * r.distance;
        if (zeta.exact) {
            Rational lhs = detail::distance_sq_exact(cur, *zeta.exact);
            Rational scale = make_rational(1, ipow(Integer(4), e));
            it.within = lhs <= scale * d0sq;
        } else {
            // Enclosures of both sides must not be separated in the wrong direction.
            it.within = !(it.distance.certainly_gt(Rational(0)) && it.allowed.certainly_lt(it.distance));
        }
        r.convergence_ok = r.convergence_ok && it.within;
        r.iterates.push_back(std::move(it));
    }
    if (!r.convergence_ok) r.diagnostic = "quadratic convergence display violated";
    return r;
}

struct GammaMuCheck {
    Interval gamma;          // upper end used
    Interval mu_norm;        // lower end used
    Interval rhs;            // D^{3/2} mu_norm / 2
    bool holds = false;
};

// gamma(F, zeta) <= D^{3/2} mu_norm(F, (1 : zeta)) / 2, checked with gamma's upper end against
// the right side's lower end, so a pass is conservative.
inline GammaMuCheck gamma_vs_mu_bound_check(const AffineSystem& f, const ZeroPoint& zeta) {
    GammaMuCheck c;
    c.gamma = gamma_quantity(f, zeta).upper;
    std::vector<polysys::cplx> pt{polysys::cplx(1, 0)};
    for (const auto& b : zeta.box) pt.emplace_back(b.re.mid(), b.im.mid());
    c.mu_norm = polysys::mu_norm_at(polysys::to_numeric(homogenize(f)), pt);
    Interval D = Interval::from(static_cast<long>(f.degrees.D()), c.mu_norm.prec());
    c.rhs = D.pow(3).sqrt() * c.mu_norm / 2L;
    c.holds = c.gamma.certainly_le(c.rhs);
    return c;
}

}  // namespace ratcond::newton
