#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "ratcond/exact/integer.hpp"

namespace ratcond {

// Dense univariate polynomial, coefficient k multiplies t^k.
template <class T>
using Poly = std::vector<T>;

template <class T>
void trim(Poly<T>& p) {
    while (!p.empty() && p.back() == T(0)) p.pop_back();
}

template <class T>
int degree(const Poly<T>& p) {
    for (std::size_t k = p.size(); k-- > 0;)
        if (p[k] != T(0)) return static_cast<int>(k);
    return -1;
}

template <class T>
Poly<T> derivative(const Poly<T>& p) {
    Poly<T> d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * T(static_cast<long>(k)));
    trim(d);
    return d;
}

template <class T, class X>
X evaluate(const Poly<T>& p, const X& x, const X& zero) {
    X acc = zero;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + X(p[k]);
    return acc;
}

// Quotient and remainder over a field.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(Poly<T> a, Poly<T> b) {
    trim(a);
    trim(b);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    int db = degree(b);
    Poly<T> q(std::max(0, degree(a) - db + 1), T(0));
    while (degree(a) >= db) {
        int da = degree(a);
        T c = a[da] / b[db];
        q[da - db] = c;
        for (int k = 0; k <= db; ++k) a[da - db + k] = a[da - db + k] - c * b[k];
        a[da] = T(0);
        trim(a);
    }
    trim(q);
    return {q, a};
}

template <class T>
Poly<T> make_monic(Poly<T> p) {
    trim(p);
    if (p.empty()) return p;
    T lead = p.back();
    for (auto& c : p) c = c / lead;
    return p;
}

template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly<T> r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// Yun's square-free decomposition: p = c * prod f_k^k; returns (f_k, k) with deg f_k > 0.
template <class T>
std::vector<std::pair<Poly<T>, int>> squarefree_decomposition(const Poly<T>& p) {
    std::vector<std::pair<Poly<T>, int>> out;
    Poly<T> a = make_monic(p);
    if (degree(a) <= 0) return out;
    Poly<T> d = derivative(a);
    Poly<T> g = poly_gcd(a, d);
    Poly<T> b = divmod(a, g).first;
    Poly<T> c = divmod(d, g).first;
    int k = 1;
    while (degree(b) > 0) {
        Poly<T> bd = derivative(b);
        Poly<T> e = c;
        for (std::size_t i = 0; i < std::max(e.size(), bd.size()); ++i) {
            if (i >= e.size()) e.push_back(T(0));
            if (i < bd.size()) e[i] = e[i] - bd[i];
        }
        trim(e);
        Poly<T> f = poly_gcd(b, e);
        if (degree(f) > 0) out.emplace_back(f, k);
        b = divmod(b, f).first;
        c = e.empty() ? Poly<T>{} : divmod(e, f).first;
        ++k;
    }
    return out;
}

// p(x + c), exact for any commutative ring.
template <class T>
Poly<T> taylor_shift(Poly<T> p, const T& c) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t k = n - 1; k > i; --k) p[k - 1] = p[k - 1] + c * p[k];
    return p;
}

template <class T>
int sign_of(const T& v) {
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

template <class T>
int sign_variations(const Poly<T>& p) {
    int v = 0, last = 0;
    for (const auto& c : p) {
        int s = sign_of(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Sturm chain p, p', -rem(...), ... over Q.
inline std::vector<Poly<Rational>> sturm_chain(Poly<Rational> p) {
    trim(p);
    std::vector<Poly<Rational>> chain;
    if (p.empty()) return chain;
    chain.push_back(p);
    Poly<Rational> d = derivative(p);
    if (d.empty()) return chain;
    chain.push_back(d);
    while (true) {
        Poly<Rational> r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sturm_variations_at(const std::vector<Poly<Rational>>& chain, const Rational& x) {
    int v = 0, last = 0;
    for (const auto& q : chain) {
        int s = sign_of(evaluate(q, x, Rational(0)));
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Distinct real roots in (a, b]; requires p(a) != 0.
inline int sturm_count(const std::vector<Poly<Rational>>& chain, const Rational& a, const Rational& b) {
    if (chain.empty()) throw std::domain_error("sturm_count: zero polynomial");
    return sturm_variations_at(chain, a) - sturm_variations_at(chain, b);
}

}  // namespace ratcond
