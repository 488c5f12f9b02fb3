#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratcond/exact/integer.hpp"

namespace ratcond {

template <class Int>
struct GaussInteger {
    Int re{};
    Int im{};

    GaussInteger() = default;
    GaussInteger(Int r, Int i = Int(0)) : re(std::move(r)), im(std::move(i)) {}

    Int norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }
    GaussInteger conj() const { return {re, Int(-im)}; }

    friend GaussInteger operator+(const GaussInteger& a, const GaussInteger& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussInteger operator-(const GaussInteger& a, const GaussInteger& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussInteger operator*(const GaussInteger& a, const GaussInteger& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussInteger operator-() const { return {Int(-re), Int(-im)}; }
    friend bool operator==(const GaussInteger& a, const GaussInteger& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussInteger& a, const GaussInteger& b) { return !(a == b); }
};

namespace detail {

// round(n / d) for d > 0, ties toward +infinity.
inline long long round_div(long long n, long long d) {
    long long q = n / d, r = n % d;
    if (r < 0) {
        --q;
        r += d;
    }
    if (2 * r >= d) ++q;
    return q;
}
inline Integer round_div(const Integer& n, const Integer& d) {
    Integer q;
    Integer twice = 2 * n + d;
    Integer den = 2 * d;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace detail

// Euclidean division with the nearest-lattice-point quotient; N(remainder) <= N(b)/2.
template <class Int>
GaussInteger<Int> gauss_rem(const GaussInteger<Int>& a, const GaussInteger<Int>& b) {
    GaussInteger<Int> num = a * b.conj();
    Int den = b.norm();
    GaussInteger<Int> q{detail::round_div(num.re, den), detail::round_div(num.im, den)};
    return a - q * b;
}

template <class Int>
bool gauss_divides(const GaussInteger<Int>& d, const GaussInteger<Int>& a) {
    if (d.is_zero()) return a.is_zero();
    GaussInteger<Int> num = a * d.conj();
    Int n = d.norm();
    return num.re % n == 0 && num.im % n == 0;
}

// Associate with re > 0 and im >= 0 (zero stays zero).
template <class Int>
GaussInteger<Int> unit_normalize(GaussInteger<Int> z) {
    if (z.is_zero()) return z;
    for (int k = 0; k < 4; ++k) {
        if (z.re > 0 && z.im >= 0) return z;
        z = GaussInteger<Int>{Int(-z.im), z.re};  // multiply by i
    }
    return z;
}

template <class Int>
GaussInteger<Int> gauss_gcd(GaussInteger<Int> a, GaussInteger<Int> b) {
    while (!b.is_zero()) {
        GaussInteger<Int> r = gauss_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return unit_normalize(a);
}

template <class Int>
GaussInteger<Int> gauss_gcd(std::span<const GaussInteger<Int>> zs) {
    GaussInteger<Int> g{Int(0), Int(0)};
    for (const auto& z : zs) {
        if (g.is_unit()) break;
        g = gauss_gcd(g, z);
    }
    return g;
}

// Exact quotient a / d; d must divide a.
template <class Int>
GaussInteger<Int> gauss_exact_div(const GaussInteger<Int>& a, const GaussInteger<Int>& d) {
    GaussInteger<Int> num = a * d.conj();
    Int n = d.norm();
    return {Int(num.re / n), Int(num.im / n)};
}

// Element of Q(i).
struct GaussRational {
    Rational re{0};
    Rational im{0};

    GaussRational() = default;
    GaussRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(long r) : re(r), im(0) {}

    Rational norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }
    GaussRational conj() const { return {re, Rational(-im)}; }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        Rational n = b.norm();
        if (n == 0) throw std::domain_error("division by zero in Q(i)");
        GaussRational t = a * b.conj();
        return {t.re / n, t.im / n};
    }
    GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
    GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
    GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
    GaussRational operator-() const { return {Rational(-re), Rational(-im)}; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

inline std::string to_string(const GaussRational& z) {
    if (z.im == 0) return z.re.get_str();
    if (z.re == 0) return z.im.get_str() + "i";
    std::string im = z.im.get_str();
    return z.re.get_str() + (z.im > 0 ? "+" : "") + im + "i";
}

// Accepts "p/q", "r/s i", "p/q+r/s i", "(...)", "i", "-i".
inline GaussRational parse_gauss_rational(std::string s) {
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '(' && c != ')' && c != '*') t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty Gauss rational");
    if (t.back() != 'i') return {parse_rational(t), Rational(0)};
    t.pop_back();
    // split at the last sign that is not at position 0 and not part of an exponent
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;)
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            split = k;
            break;
        }
    auto parse_im = [](const std::string& u) {
        if (u.empty() || u == "+") return Rational(1);
        if (u == "-") return Rational(-1);
        return parse_rational(u);
    };
    if (split == std::string::npos) return {Rational(0), parse_im(t)};
    return {parse_rational(t.substr(0, split)), parse_im(t.substr(split))};
}

}  // namespace ratcond
