#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ratcond/exact/combinatorics.hpp"
#include "ratcond/exact/gauss.hpp"
#include "ratcond/exact/interval.hpp"
#include "ratcond/polysys/system.hpp"

namespace ratcond::newton {

using polysys::DegreeList;
using polysys::PolySystem;

struct SingularJacobian : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// f_i(x_1..x_n) = sum_k coeffs[i][k] x^{exponents[i][k]}, deg f_i <= d_i. The k-th term is the
// dehomogenization of the k-th monomial of degree d_i in (X_0, ..., X_n).
struct AffineSystem {
    DegreeList degrees;
    std::vector<std::vector<Exponent>> exponents;
    std::vector<std::vector<GaussRational>> coeffs;

    int n() const { return degrees.n(); }
};

inline AffineSystem dehomogenize(const PolySystem& F) {
    AffineSystem f;
    f.degrees = F.degrees;
    f.coeffs = F.coeffs;
    for (std::size_t i = 0; i < F.degrees.size(); ++i) {
        std::vector<Exponent> ex;
        for (const auto& mu : F.degrees.monomials(i)) ex.emplace_back(mu.begin() + 1, mu.end());
        f.exponents.push_back(std::move(ex));
    }
    return f;
}

inline PolySystem homogenize(const AffineSystem& f) {
    PolySystem F(f.degrees);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        for (std::size_t k = 0; k < f.coeffs[i].size(); ++k) {
            int tot = 0;
            for (int e : f.exponents[i][k]) tot += e;
            if (tot > static_cast<int>(f.degrees[i])) throw std::invalid_argument("homogenize: term exceeds the degree");
            Exponent mu{static_cast<int>(f.degrees[i]) - tot};
            mu.insert(mu.end(), f.exponents[i][k].begin(), f.exponents[i][k].end());
            F.at(i, mu) += f.coeffs[i][k];
        }
    return F;
}

// Scalar back ends: exact Gauss rationals and complex interval enclosures.
struct ExactField {
    using S = GaussRational;
    S from(const GaussRational& c) const { return c; }
    S from_rational(const Rational& q) const { return {q, Rational(0)}; }
    S zero() const { return GaussRational(0); }
    S one() const { return GaussRational(1); }
    bool maybe_zero(const S& s) const { return s.is_zero(); }
    double magnitude(const S& s) const { return s.norm().get_d(); }
};

struct IntervalField {
    using S = ComplexInterval;
    mpfr_prec_t prec = kDefaultPrecision;
    S from(const GaussRational& c) const { return ComplexInterval::from(c.re, c.im, prec); }
    S from_rational(const Rational& q) const { return ComplexInterval::from(q, Rational(0), prec); }
    S zero() const { return ComplexInterval(prec); }
    S one() const { return from_rational(Rational(1)); }
    bool maybe_zero(const S& s) const { return s.re.contains_zero() && s.im.contains_zero(); }
    double magnitude(const S& s) const { return s.norm_sq().mid(); }
};

namespace detail {

template <class Field>
std::vector<std::vector<typename Field::S>> powers(const Field& fld, const std::vector<typename Field::S>& x, int D) {
    std::vector<std::vector<typename Field::S>> pw(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        pw[j].push_back(fld.one());
        for (int e = 1; e <= D; ++e) pw[j].push_back(pw[j].back() * x[j]);
    }
    return pw;
}

inline Integer beta_binomial(const Exponent& alpha, const Exponent& beta) {
    Integer c = 1;
    for (std::size_t j = 0; j < alpha.size(); ++j) c *= binomial(static_cast<unsigned long>(alpha[j]), static_cast<unsigned long>(beta[j]));
    return c;
}

}  // namespace detail

// Taylor coefficients g_beta(x) = (d^beta f_i)(x) / beta! for every equation.
template <class Field>
std::vector<typename Field::S> taylor_coefficients(const Field& fld, const AffineSystem& f,
                                                   const std::vector<typename Field::S>& x, const Exponent& beta) {
    using S = typename Field::S;
    const int D = static_cast<int>(f.degrees.D());
    auto pw = detail::powers(fld, x, D);
    std::vector<S> out;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        S acc = fld.zero();
        for (std::size_t k = 0; k < f.coeffs[i].size(); ++k) {
            if (f.coeffs[i][k].is_zero()) continue;
            const Exponent& alpha = f.exponents[i][k];
            bool ok = true;
            for (std::size_t j = 0; j < alpha.size(); ++j) ok = ok && alpha[j] >= beta[j];
            if (!ok) continue;
            S term = fld.from(f.coeffs[i][k]) * fld.from_rational(Rational(detail::beta_binomial(alpha, beta)));
            for (std::size_t j = 0; j < alpha.size(); ++j) term = term * pw[j][static_cast<std::size_t>(alpha[j] - beta[j])];
            acc = acc + term;
        }
        out.push_back(acc);
    }
    return out;
}

template <class Field>
std::vector<typename Field::S> evaluate(const Field& fld, const AffineSystem& f, const std::vector<typename Field::S>& x) {
    return taylor_coefficients(fld, f, x, Exponent(static_cast<std::size_t>(f.n()), 0));
}

// J[i][j] = d f_i / d x_j.
template <class Field>
std::vector<std::vector<typename Field::S>> jacobian(const Field& fld, const AffineSystem& f,
                                                     const std::vector<typename Field::S>& x) {
    const int n = f.n();
    std::vector<std::vector<typename Field::S>> J(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Exponent e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(j)] = 1;
        auto col = taylor_coefficients(fld, f, x, e);
        for (int i = 0; i < n; ++i) J[static_cast<std::size_t>(i)].push_back(col[static_cast<std::size_t>(i)]);
    }
    return J;
}

// Solves A u = b by Gaussian elimination with largest-magnitude pivoting.
template <class Field>
std::vector<typename Field::S> solve(const Field& fld, std::vector<std::vector<typename Field::S>> A,
                                     std::vector<typename Field::S> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        double best = -1;
        for (std::size_t r = c; r < n; ++r) {
            if (fld.maybe_zero(A[r][c])) continue;
            double m = fld.magnitude(A[r][c]);
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        if (piv == n) throw SingularJacobian("Jacobian is singular (or not certified nonsingular)");
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            auto factor = A[r][c] / A[c][c];
            for (std::size_t k = c; k < n; ++k) A[r][k] = A[r][k] - factor * A[c][k];
            b[r] = b[r] - factor * b[c];
        }
    }
    std::vector<typename Field::S> u(n, fld.zero());
    for (std::size_t r = n; r-- > 0;) {
        auto acc = b[r];
        for (std::size_t k = r + 1; k < n; ++k) acc = acc - A[r][k] * u[k];
        u[r] = acc / A[r][r];
    }
    return u;
}

// N_F(z) = z - DF(z)^{-1} F(z), exact.
inline std::vector<GaussRational> newton_step(const AffineSystem& f, const std::vector<GaussRational>& z) {
    if (static_cast<int>(z.size()) != f.n()) throw std::invalid_argument("newton_step: point dimension");
    ExactField fld;
    auto u = solve(fld, jacobian(fld, f, z), evaluate(fld, f, z));
    std::vector<GaussRational> out(z);
    for (std::size_t j = 0; j < z.size(); ++j) out[j] = z[j] - u[j];
    return out;
}

inline bool is_exact_zero(const AffineSystem& f, const std::vector<GaussRational>& z) {
    for (const auto& v : evaluate(ExactField{}, f, z))
        if (!v.is_zero()) return false;
    return true;
}

}  // namespace ratcond::newton
