#pragma once

#include <Eigen/Dense>

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "ratcond/polysys/system.hpp"

namespace ratcond::polysys {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline double orthonormality_defect(const CMat& s) {
    CMat d = s * s.adjoint() - CMat::Identity(s.rows(), s.cols());
    return d.cwiseAbs().maxCoeff();
}

// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases of R removed.
template <class Rng>
CMat random_unitary(int size, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMat z(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) z(i, j) = cplx(g(rng), g(rng));
    Eigen::HouseholderQR<CMat> qr(z);
    CMat q = qr.householderQ();
    CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < size; ++j) {
        cplx d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return q;
}

// Hermitian unitary H = I - 2 v v*/(v* v) with H zeta a unit multiple of e_0 (zeta normalized).
inline CMat householder_to_e0(const CVec& zeta) {
    const int m = static_cast<int>(zeta.size());
    CVec z = zeta / zeta.norm();
    cplx phase = std::abs(z(0)) > 0 ? z(0) / std::abs(z(0)) : cplx(1, 0);
    CVec v = z;
    v(0) += phase;
    return CMat::Identity(m, m) - 2.0 * (v * v.adjoint()) / v.squaredNorm();
}

inline CVec to_cvec(const std::vector<cplx>& x) {
    CVec v(static_cast<Eigen::Index>(x.size()));
    for (std::size_t k = 0; k < x.size(); ++k) v(static_cast<Eigen::Index>(k)) = x[k];
    return v;
}

inline std::vector<cplx> to_std(const CVec& v) { return std::vector<cplx>(v.data(), v.data() + v.size()); }

// sigma(F)(x) = F(sigma^{-1} x) = F(sigma^* x).
inline PolySystemD unitary_apply(const CMat& sigma, const PolySystemD& F, double tolerance = 1e-10) {
    const int m = F.degrees.vars();
    if (sigma.rows() != m || sigma.cols() != m) throw std::invalid_argument("unitary_apply: size mismatch");
    if (orthonormality_defect(sigma) > tolerance) throw std::invalid_argument("unitary_apply: matrix is not unitary");
    CMat inv = sigma.adjoint();
    using Sparse = std::map<Exponent, cplx>;
    PolySystemD out(F.degrees);
    for (std::size_t i = 0; i < F.coeffs.size(); ++i) {
        Sparse acc;
        const auto& ms = F.degrees.monomials(i);
        for (std::size_t k = 0; k < ms.size(); ++k) {
            if (F.coeffs[i][k] == cplx(0)) continue;
            Sparse prod{{Exponent(m, 0), F.coeffs[i][k]}};
            for (int j = 0; j < m; ++j)
                for (int e = 0; e < ms[k][j]; ++e) {
                    // multiply by the linear form sum_l inv(j,l) x_l
                    Sparse next;
                    for (const auto& [mu, c] : prod)
                        for (int l = 0; l < m; ++l) {
                            if (inv(j, l) == cplx(0)) continue;
                            Exponent nu = mu;
                            ++nu[l];
                            next[nu] += c * inv(j, l);
                        }
                    prod.swap(next);
                }
            for (const auto& [mu, c] : prod) acc[mu] += c;
        }
        for (std::size_t k = 0; k < ms.size(); ++k) {
            auto it = acc.find(ms[k]);
            out.coeffs[i][k] = it == acc.end() ? cplx(0) : it->second;
        }
    }
    return out;
}

inline std::vector<cplx> unitary_apply_point(const CMat& sigma, const std::vector<cplx>& x) {
    return to_std(sigma * to_cvec(x));
}

}  // namespace ratcond::polysys
