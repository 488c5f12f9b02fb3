#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <vector>

#include "ratcond/exact/interval.hpp"
#include "ratcond/exact/univariate.hpp"
#include "ratcond/polysys/system.hpp"

namespace ratcond::polysys {

struct ProjZero {
    std::vector<cplx> point;  // unit vector in C^2
    int multiplicity = 1;
    bool at_infinity = false;
    double radius = 0;        // affine-chart enclosure radius of the root t = x1/x0 (0 at infinity)
};

// Disc {center, radius} certified to hold exactly one root.
struct RootDisc {
    ComplexInterval center;
    Interval radius;
    ComplexInterval box() const {
        return {center.re + Interval::hull(-radius, radius), center.im + Interval::hull(-radius, radius)};
    }
};

// p(t) = f(1, t) for a binary form; coefficient k multiplies X0^{d-k} X1^k.
template <class S>
Poly<S> dehomogenized(const std::vector<S>& coeffs) {
    Poly<S> p(coeffs.begin(), coeffs.end());
    trim(p);
    return p;
}

inline ComplexInterval to_interval(const GaussRational& z, mpfr_prec_t prec) {
    return ComplexInterval::from(z.re, z.im, prec);
}

inline ComplexInterval horner(const std::vector<ComplexInterval>& p, const ComplexInterval& x) {
    ComplexInterval acc(x.prec());
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

// Double-precision root estimates from the companion matrix.
inline std::vector<cplx> approximate_roots(const Poly<GaussRational>& p) {
    const int m = degree(p);
    if (m <= 0) return {};
    cplx lead = p[m].to_complex();
    if (m == 1) return {-p[0].to_complex() / lead};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(m, m);
    for (int k = 1; k < m; ++k) C(k, k - 1) = 1;
    for (int k = 0; k < m; ++k) C(k, m - 1) = -p[k].to_complex() / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<cplx> r;
    for (int k = 0; k < m; ++k) r.push_back(es.eigenvalues()(k));
    return r;
}

// Certified isolation of the roots of a square-free q. Returns nullopt if the discs
// cannot be separated at this precision.
inline std::optional<std::vector<RootDisc>> isolate_roots(const Poly<GaussRational>& q, mpfr_prec_t prec) {
    const int m = degree(q);
    std::vector<RootDisc> out;
    if (m <= 0) return out;
    std::vector<ComplexInterval> P, dP;
    for (int k = 0; k <= m; ++k) P.push_back(to_interval(q[k], prec));
    for (int k = 1; k <= m; ++k) dP.push_back(to_interval(q[k], prec) * Interval::from(static_cast<long>(k), prec));
    for (cplx z0 : approximate_roots(q)) {
        ComplexInterval c{Interval::from_double(z0.real(), prec), Interval::from_double(z0.imag(), prec)};
        for (int it = 0; it < 60; ++it) {
            ComplexInterval step = horner(P, c) / horner(dP, c);
            c = (c - step).midpoint();
            if (!step.re.is_finite()) return std::nullopt;
            double s = std::abs(step.re.mid()) + std::abs(step.im.mid());
            double scale = 1 + std::abs(c.re.mid()) + std::abs(c.im.mid());
            if (s <= scale * std::ldexp(1.0, -static_cast<int>(prec) + 4) || (s == 0)) break;
        }
        Interval num = horner(P, c).abs();
        Interval den = horner(dP, c).abs();
        if (!den.certainly_positive()) return std::nullopt;
        Interval r = num * Interval::from(static_cast<long>(m), prec) / den;
        out.push_back({c, Interval::hull(r, r)});
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            Interval dist = (out[i].center - out[j].center).abs();
            if (!(out[i].radius + out[j].radius).certainly_lt(dist)) return std::nullopt;
        }
    return out;
}

// All zeros in P^1(C) with multiplicity, for a nonzero binary form with Gauss-rational coefficients.
inline std::vector<ProjZero> zeros_projective(const PolySystem& F, mpfr_prec_t prec = 128) {
    if (F.n() != 1) throw std::domain_error("zeros_projective: only binary forms (n = 1) are supported");
    if (F.is_zero()) throw std::invalid_argument("zeros_projective: zero polynomial");
    const int d = static_cast<int>(F.degrees[0]);
    Poly<GaussRational> p = dehomogenized(F.coeffs[0]);
    std::vector<ProjZero> zs;
    int inf_mult = d - degree(p);
    if (inf_mult > 0) zs.push_back({{cplx(0), cplx(1)}, inf_mult, true, 0});
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        std::optional<std::vector<RootDisc>> discs;
        for (mpfr_prec_t pr = prec; pr <= 8 * prec && !discs; pr *= 2) discs = isolate_roots(factor, pr);
        if (!discs) throw std::runtime_error("zeros_projective: root isolation failed");
        for (const auto& disc : *discs) {
            cplx t(disc.center.re.mid(), disc.center.im.mid());
            double nrm = std::sqrt(1 + std::norm(t));
            zs.push_back({{cplx(1 / nrm), t / nrm}, mult, false, disc.radius.upper()});
        }
    }
    return zs;
}

}  // namespace ratcond::polysys
