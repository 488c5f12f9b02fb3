#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratcond/exact/integer.hpp"
#include "ratcond/exact/univariate.hpp"

namespace ratcond::linear {

template <class T>
struct BasicMatrix {
    std::size_t n = 0;
    std::vector<T> a;  // row-major

    BasicMatrix() = default;
    explicit BasicMatrix(std::size_t size) : n(size), a(size * size, T(0)) {}
    BasicMatrix(std::size_t size, std::vector<T> entries) : n(size), a(std::move(entries)) {
        if (a.size() != n * n) throw std::invalid_argument("matrix: entry count is not n*n");
    }

    T& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    static BasicMatrix identity(std::size_t size) {
        BasicMatrix m(size);
        for (std::size_t i = 0; i < size; ++i) m(i, i) = T(1);
        return m;
    }
    friend bool operator==(const BasicMatrix& x, const BasicMatrix& y) { return x.n == y.n && x.a == y.a; }
};

using SquareMatrix = BasicMatrix<Rational>;

template <class T>
BasicMatrix<T> operator*(const BasicMatrix<T>& x, const BasicMatrix<T>& y) {
    BasicMatrix<T> r(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k) {
            if (x(i, k) == 0) continue;
            for (std::size_t j = 0; j < x.n; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

template <class T>
BasicMatrix<T> transpose(const BasicMatrix<T>& m) {
    BasicMatrix<T> r(m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) r(j, i) = m(i, j);
    return r;
}

// M^T M
template <class T>
BasicMatrix<T> gram(const BasicMatrix<T>& m) {
    BasicMatrix<T> r(m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = i; j < m.n; ++j) {
            T s(0);
            for (std::size_t k = 0; k < m.n; ++k) s += m(k, i) * m(k, j);
            r(i, j) = s;
            r(j, i) = s;
        }
    return r;
}

template <class T>
T frobenius_squared(const BasicMatrix<T>& m) {
    T s(0);
    for (const auto& v : m.a) s += v * v;
    return s;
}

// det(lambda I - A) by Faddeev-LeVerrier; coefficients low to high, monic.
// Exact over Z as well, since every division by k is exact there.
template <class T>
Poly<T> charpoly(const BasicMatrix<T>& A) {
    const std::size_t n = A.n;
    Poly<T> c(n + 1, T(0));
    c[n] = T(1);
    BasicMatrix<T> Mk(n);
    for (std::size_t k = 1; k <= n; ++k) {
        BasicMatrix<T> AM = A * Mk;
        for (std::size_t i = 0; i < n; ++i) AM(i, i) += c[n - k + 1];
        Mk = std::move(AM);
        BasicMatrix<T> AMk = A * Mk;
        T tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += AMk(i, i);
        c[n - k] = -tr / T(static_cast<long>(k));
    }
    return c;
}

inline Rational determinant(SquareMatrix m) {
    const std::size_t n = m.n;
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            Rational f = m(i, col) / m(col, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

// "p/q,r/s;t/u,v/w": rows by ';', entries by ','.
inline SquareMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<Rational> r;
        std::stringstream rs(row);
        std::string e;
        while (std::getline(rs, e, ',')) r.push_back(parse_rational(e));
        rows.push_back(std::move(r));
    }
    const std::size_t n = rows.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    std::vector<Rational> a;
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("matrix is not square");
        a.insert(a.end(), r.begin(), r.end());
    }
    return SquareMatrix(n, std::move(a));
}

inline std::string format_matrix(const SquareMatrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.n; ++i) {
        if (i) s += ';';
        for (std::size_t j = 0; j < m.n; ++j) s += (j ? "," : "") + m(i, j).get_str();
    }
    return s;
}

}  // namespace ratcond::linear
