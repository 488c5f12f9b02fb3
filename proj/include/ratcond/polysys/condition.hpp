#pragma once

#include <Eigen/Dense>

#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ratcond/polysys/system.hpp"
#include "ratcond/polysys/unitary.hpp"
#include "ratcond/polysys/zeros.hpp"

namespace ratcond::polysys {

namespace detail {

// Floating results carry a relative radius of 64 u (1 + kappa), kappa the condition of the
// matrix whose smallest singular value was taken. Not rigorous; see README.
inline Interval numeric_enclosure(double v, double kappa) {
    double err = 64 * DBL_EPSILON * (1 + kappa) * std::abs(v);
    return Interval::around(v, err);
}

inline void require_zero(const PolySystemD& F, const std::vector<cplx>& zeta) {
    double r = 0;
    for (cplx v : evaluate(F, zeta)) r = std::max(r, std::abs(v));
    double scale = 0;
    for (const auto& eq : F.coeffs)
        for (cplx c : eq) scale = std::max(scale, std::abs(c));
    if (r > 1e-8 * std::max(scale, 1e-300)) throw std::invalid_argument("zeta is not a zero of F");
}

inline std::vector<cplx> normalized(std::vector<cplx> z) {
    double s = 0;
    for (cplx v : z) s += std::norm(v);
    s = std::sqrt(s);
    if (s == 0) throw std::invalid_argument("zero vector is not a projective point");
    for (cplx& v : z) v /= s;
    return z;
}

}  // namespace detail

// ||F||_Delta ||(DF(zeta)|_T)^{-1} Diag(sqrt d_i)||, zeta normalized; T spanned by the
// last n columns of the Householder matrix sending zeta to e_0.
inline Interval mu_norm_at(const PolySystemD& F, const std::vector<cplx>& zeta_in) {
    const int n = F.n();
    if (static_cast<int>(zeta_in.size()) != n + 1) throw std::invalid_argument("mu_norm_at: point dimension");
    std::vector<cplx> zeta = detail::normalized(zeta_in);
    detail::require_zero(F, zeta);
    auto J = jacobian(F, zeta);
    CMat H = householder_to_e0(to_cvec(zeta));
    CMat A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx s = 0;
            for (int l = 0; l <= n; ++l) s += J[i][l] * H(l, j + 1);
            A(i, j) = s / std::sqrt(static_cast<double>(F.degrees[i]));
        }
    Eigen::JacobiSVD<CMat> svd(A);
    double smin = svd.singularValues()(n - 1);
    double smax = svd.singularValues()(0);
    if (smin <= smax * 1e-15 || smin == 0) return Interval::infinity();
    double v = norm_delta(F) / smin;
    return detail::numeric_enclosure(v, smax / smin);
}

// Scaled-Jacobian route: move zeta to e_0 by a unitary, read the Jacobian of sigma(F) at e_0 off
// the coefficients of X0^{d_i-1} X_j, scale rows by d_i^{-1/2}, and take sigma_min through
// the real 2n x 2n embedding. F must be Delta-normalized.
inline Interval rho_fiber(const PolySystemD& F, const std::vector<cplx>& zeta_in) {
    const int n = F.n();
    if (static_cast<int>(zeta_in.size()) != n + 1) throw std::invalid_argument("rho_fiber: point dimension");
    if (std::abs(norm_delta(F) - 1) > 1e-9) throw std::invalid_argument("rho_fiber: F must satisfy ||F||_Delta = 1");
    std::vector<cplx> zeta = detail::normalized(zeta_in);
    detail::require_zero(F, zeta);
    CMat H = householder_to_e0(to_cvec(zeta));
    PolySystemD G = unitary_apply(H, F);
    Eigen::MatrixXd E(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        const auto& ms = G.degrees.monomials(i);
        const int d = static_cast<int>(G.degrees[i]);
        for (int j = 0; j < n; ++j) {
            Exponent mu(n + 1, 0);
            mu[0] = d - 1;
            mu[j + 1] += 1;
            cplx c = 0;
            for (std::size_t k = 0; k < ms.size(); ++k)
                if (ms[k] == mu) c = G.coeffs[i][k];
            c /= std::sqrt(static_cast<double>(d));
            E(i, j) = c.real();
            E(i, j + n) = -c.imag();
            E(i + n, j) = c.imag();
            E(i + n, j + n) = c.real();
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(E.transpose() * E, Eigen::EigenvaluesOnly);
    double lmin = std::max(0.0, es.eigenvalues()(0));
    double lmax = es.eigenvalues()(2 * n - 1);
    double v = std::sqrt(lmin);
    double kappa = v > 0 ? std::sqrt(lmax) / v : 1e300;
    return detail::numeric_enclosure(v, kappa);
}

inline PolySystemD delta_normalized(const PolySystemD& F) {
    double s = norm_delta(F);
    if (s == 0) throw std::invalid_argument("zero system");
    return scaled(F, cplx(1 / s));
}

inline Interval mu_norm_system(const PolySystem& F) {
    auto zs = zeros_projective(F);
    PolySystemD Fd = to_numeric(F);
    Interval best(53);
    bool first = true;
    for (const auto& z : zs) {
        if (z.multiplicity > 1) return Interval::infinity();
        Interval v = mu_norm_at(Fd, z.point);
        if (v.is_infinite()) return v;
        best = first ? v : Interval::max(best, v);
        first = false;
    }
    return best;
}

// min over zeros of rho_fiber on the normalized system; checked against 1/mu_norm.
inline Interval rho_of_system(const PolySystem& F) {
    auto zs = zeros_projective(F);
    PolySystemD Fd = delta_normalized(to_numeric(F));
    Interval best(53);
    bool first = true;
    for (const auto& z : zs) {
        if (z.multiplicity > 1) return Interval(53);
        Interval v = rho_fiber(Fd, z.point);
        best = first ? v : Interval::min(best, v);
        first = false;
    }
    Interval mu = mu_norm_system(F);
    if (!mu.is_infinite() && best.certainly_positive()) {
        double defect = std::abs(best.mid() * mu.mid() - 1);
        if (defect > 1e-6) throw std::logic_error("rho_of_system: rho * mu_norm deviates from 1");
    }
    return best;
}

}  // namespace ratcond::polysys
