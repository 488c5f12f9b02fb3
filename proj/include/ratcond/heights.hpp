#pragma once

#include <cmath>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratcond/exact/combinatorics.hpp"
#include "ratcond/exact/gauss.hpp"
#include "ratcond/exact/integer.hpp"
#include "ratcond/exact/interval.hpp"

namespace ratcond {

// Point of P_m(Q), stored as its visible representative with first nonzero coordinate > 0.
struct ProjectivePointQ {
    std::vector<Integer> coords;
    friend bool operator==(const ProjectivePointQ&, const ProjectivePointQ&) = default;
};

// Point of P(H_(d)(Q[i])), stored as its C-visible representative. Among the four unit
// multiples the first nonzero coordinate is taken with re > 0 and im >= 0.
struct ProjectivePointQi {
    std::vector<GaussInteger<Integer>> coords;
    friend bool operator==(const ProjectivePointQi& a, const ProjectivePointQi& b) { return a.coords == b.coords; }
};

struct HeightRecord {
    Rational height_squared;
    double bit_length;  // (1/2) log2(height_squared)

    Interval height(mpfr_prec_t prec = kDefaultPrecision) const { return Interval::from(height_squared, prec).sqrt(); }
};

inline double half_log2(const Rational& q) {
    // log2 of a rational without overflowing doubles
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    return 0.5 * (std::log2(mn / md) + static_cast<double>(en - ed));
}

template <class Int>
bool is_zero_vector(std::span<const Int> x) {
    for (const auto& v : x)
        if (v != 0) return false;
    return true;
}

inline bool is_visible(std::span<const Integer> x) {
    if (is_zero_vector(x)) throw std::invalid_argument("is_visible: zero vector");
    Integer g = 0;
    for (const auto& v : x) g = gcd(g, v);
    return g == 1;
}
inline bool is_visible(const std::vector<Integer>& x) { return is_visible(std::span<const Integer>(x)); }

inline bool is_c_visible(std::span<const GaussInteger<Integer>> z) {
    bool all_zero = true;
    for (const auto& v : z) all_zero = all_zero && v.is_zero();
    if (all_zero) throw std::invalid_argument("is_c_visible: zero vector");
    return gauss_gcd(z).is_unit();
}
inline bool is_c_visible(const std::vector<GaussInteger<Integer>>& z) {
    return is_c_visible(std::span<const GaussInteger<Integer>>(z));
}

inline ProjectivePointQ canonical_representative(std::span<const Rational> x) {
    Integer L = 1;
    bool all_zero = true;
    for (const auto& q : x) {
        L = lcm(L, q.get_den());
        all_zero = all_zero && q == 0;
    }
    if (all_zero) throw std::invalid_argument("canonical_representative: zero vector");
    ProjectivePointQ P;
    Integer g = 0;
    for (const auto& q : x) {
        Integer v = q.get_num() * (L / q.get_den());
        g = gcd(g, v);
        P.coords.push_back(v);
    }
    int sign = 0;
    for (const auto& v : P.coords)
        if (v != 0) {
            sign = v > 0 ? 1 : -1;
            break;
        }
    for (auto& v : P.coords) v = v / g * sign;
    return P;
}
inline ProjectivePointQ canonical_representative(const std::vector<Rational>& x) {
    return canonical_representative(std::span<const Rational>(x));
}

inline ProjectivePointQi canonical_representative_qi(std::span<const GaussRational> x) {
    Integer L = 1;
    bool all_zero = true;
    for (const auto& z : x) {
        L = lcm(L, lcm(z.re.get_den(), z.im.get_den()));
        all_zero = all_zero && z.is_zero();
    }
    if (all_zero) throw std::invalid_argument("canonical_representative: zero vector");
    std::vector<GaussInteger<Integer>> c;
    for (const auto& z : x)
        c.push_back({z.re.get_num() * (L / z.re.get_den()), z.im.get_num() * (L / z.im.get_den())});
    GaussInteger<Integer> g = gauss_gcd(std::span<const GaussInteger<Integer>>(c));
    for (auto& v : c) v = gauss_exact_div(v, g);
    // rotate by the unit that normalizes the first nonzero coordinate
    for (const auto& v : c) {
        if (v.is_zero()) continue;
        GaussInteger<Integer> target = unit_normalize(v);
        GaussInteger<Integer> u = gauss_exact_div(target, v);
        for (auto& w : c) w = w * u;
        break;
    }
    return {c};
}
inline ProjectivePointQi canonical_representative_qi(const std::vector<GaussRational>& x) {
    return canonical_representative_qi(std::span<const GaussRational>(x));
}

inline HeightRecord ns_height(const ProjectivePointQ& P) {
    Integer s = 0;
    for (const auto& v : P.coords) s += v * v;
    Rational q(s);
    return {q, half_log2(q)};
}

inline double bit_length(const ProjectivePointQ& P) { return ns_height(P).bit_length; }

// 1 / multinomial weights for the monomials of every equation, in coefficient order.
inline std::vector<Integer> delta_multinomials(const std::vector<unsigned>& degrees) {
    std::vector<Integer> out;
    const int vars = static_cast<int>(degrees.size()) + 1;
    for (unsigned d : degrees)
        for (const auto& mu : monomials_of_degree(static_cast<int>(d), vars)) out.push_back(multinomial(mu));
    return out;
}

inline HeightRecord ui_height(const ProjectivePointQi& F, const std::vector<unsigned>& degrees) {
    std::vector<Integer> w = delta_multinomials(degrees);
    if (w.size() != F.coords.size()) throw std::invalid_argument("ui_height: coordinate count does not match degrees");
    Rational s = 0;
    for (std::size_t k = 0; k < w.size(); ++k) s += Rational(F.coords[k].norm()) / Rational(w[k]);
    s.canonicalize();
    return {s, half_log2(s)};
}

inline double ui_bit_length(const ProjectivePointQi& F, const std::vector<unsigned>& degrees) {
    return ui_height(F, degrees).bit_length;
}

// Unweighted height of the C-visible representative (the H of the H/D! <= H_Delta <= H sandwich).
inline HeightRecord plain_height(const ProjectivePointQi& F) {
    Integer s = 0;
    for (const auto& z : F.coords) s += z.norm();
    Rational q(s);
    return {q, half_log2(q)};
}

// Point text "a/b:c/d:..."; coordinates may be Gauss rationals "p/q+r/s i".
inline std::vector<GaussRational> parse_point(const std::string& text) {
    std::vector<GaussRational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) out.push_back(parse_gauss_rational(item));
    if (out.empty()) throw std::invalid_argument("empty point");
    return out;
}

inline std::string format_point(const ProjectivePointQ& P) {
    std::string s;
    for (std::size_t k = 0; k < P.coords.size(); ++k) s += (k ? ":" : "") + P.coords[k].get_str();
    return s;
}

inline std::string format_point(const ProjectivePointQi& P) {
    std::string s;
    for (std::size_t k = 0; k < P.coords.size(); ++k)
        s += (k ? ":" : "") + to_string(GaussRational(Rational(P.coords[k].re), Rational(P.coords[k].im)));
    return s;
}

}  // namespace ratcond
