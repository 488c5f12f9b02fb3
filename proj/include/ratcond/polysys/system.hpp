#pragma once

#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratcond/exact/combinatorics.hpp"
#include "ratcond/exact/gauss.hpp"
#include "ratcond/exact/interval.hpp"

namespace ratcond::polysys {

using cplx = std::complex<double>;

class DegreeList {
public:
    DegreeList() = default;
    explicit DegreeList(std::vector<unsigned> d) : d_(std::move(d)) {
        if (d_.empty()) throw std::invalid_argument("DegreeList: empty");
        for (unsigned v : d_)
            if (v < 1) throw std::invalid_argument("DegreeList: degrees must be >= 1");
        for (unsigned v : d_) monomials_.push_back(monomials_of_degree(static_cast<int>(v), vars()));
    }

    const std::vector<unsigned>& degrees() const { return d_; }
    unsigned operator[](std::size_t i) const { return d_[i]; }
    std::size_t size() const { return d_.size(); }
    int n() const { return static_cast<int>(d_.size()); }
    int vars() const { return n() + 1; }
    std::size_t count(std::size_t i) const { return monomials_[i].size(); }  // N_{d_i}
    std::size_t N() const {
        std::size_t s = 0;
        for (const auto& m : monomials_) s += m.size();
        return s - 1;
    }
    unsigned D() const {
        unsigned m = 0;
        for (unsigned v : d_) m = std::max(m, v);
        return m;
    }
    Integer bezout() const {
        Integer b = 1;
        for (unsigned v : d_) b *= v;
        return b;
    }
    const std::vector<Exponent>& monomials(std::size_t i) const { return monomials_[i]; }
    friend bool operator==(const DegreeList& a, const DegreeList& b) { return a.d_ == b.d_; }

private:
    std::vector<unsigned> d_;
    std::vector<std::vector<Exponent>> monomials_;
};

struct DeltaWeights {
    std::vector<std::vector<Integer>> multinomials;  // per equation, per monomial
    std::vector<std::vector<double>> weights;         // multinomial^{-1/2}
    Rational det_squared;                              // prod of multinomial^{-1}

    Interval det(mpfr_prec_t prec = kDefaultPrecision) const { return Interval::from(det_squared, prec).sqrt(); }
};

inline DeltaWeights delta_weights(const DegreeList& degrees) {
    DeltaWeights w;
    Integer prod = 1;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        std::vector<Integer> m;
        std::vector<double> v;
        for (const auto& mu : degrees.monomials(i)) {
            Integer c = multinomial(mu);
            prod *= c;
            v.push_back(1.0 / std::sqrt(c.get_d()));
            m.push_back(std::move(c));
        }
        w.multinomials.push_back(std::move(m));
        w.weights.push_back(std::move(v));
    }
    w.det_squared = make_rational(1, prod);
    return w;
}

// F in H_(d): coeffs[i][k] multiplies monomial degrees.monomials(i)[k] of equation i.
template <class S>
struct BasicPolySystem {
    DegreeList degrees;
    std::vector<std::vector<S>> coeffs;

    BasicPolySystem() = default;
    explicit BasicPolySystem(DegreeList d) : degrees(std::move(d)) {
        for (std::size_t i = 0; i < degrees.size(); ++i) coeffs.emplace_back(degrees.count(i), S(0));
    }
    BasicPolySystem(DegreeList d, std::vector<std::vector<S>> c) : degrees(std::move(d)), coeffs(std::move(c)) {
        if (coeffs.size() != degrees.size()) throw std::invalid_argument("PolySystem: equation count mismatch");
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i].size() != degrees.count(i)) throw std::invalid_argument("PolySystem: coefficient count mismatch");
    }

    int n() const { return degrees.n(); }
    bool is_zero() const {
        for (const auto& eq : coeffs)
            for (const auto& c : eq)
                if (!(c == S(0))) return false;
        return true;
    }
    // Coefficient of a monomial; the exponent must have the equation's degree.
    S& at(std::size_t eq, const Exponent& mu) {
        const auto& ms = degrees.monomials(eq);
        for (std::size_t k = 0; k < ms.size(); ++k)
            if (ms[k] == mu) return coeffs[eq][k];
        throw std::invalid_argument("PolySystem: monomial not of the equation's degree");
    }
};

using PolySystem = BasicPolySystem<GaussRational>;
using PolySystemD = BasicPolySystem<cplx>;

inline PolySystemD to_numeric(const PolySystem& F) {
    PolySystemD G(F.degrees);
    for (std::size_t i = 0; i < F.coeffs.size(); ++i)
        for (std::size_t k = 0; k < F.coeffs[i].size(); ++k) G.coeffs[i][k] = F.coeffs[i][k].to_complex();
    return G;
}

template <class S>
void require_same_degrees(const BasicPolySystem<S>& F, const BasicPolySystem<S>& G) {
    if (!(F.degrees == G.degrees)) throw std::invalid_argument("degree lists differ");
}

// Exact <F,G>_Delta over Q(i).
inline GaussRational inner_delta(const PolySystem& F, const PolySystem& G) {
    require_same_degrees(F, G);
    DeltaWeights w = delta_weights(F.degrees);
    GaussRational s;
    for (std::size_t i = 0; i < F.coeffs.size(); ++i)
        for (std::size_t k = 0; k < F.coeffs[i].size(); ++k) {
            GaussRational t = F.coeffs[i][k] * G.coeffs[i][k].conj();
            s += GaussRational(t.re / Rational(w.multinomials[i][k]), t.im / Rational(w.multinomials[i][k]));
        }
    return s;
}

inline cplx inner_delta(const PolySystemD& F, const PolySystemD& G) {
    require_same_degrees(F, G);
    DeltaWeights w = delta_weights(F.degrees);
    cplx s = 0;
    for (std::size_t i = 0; i < F.coeffs.size(); ++i)
        for (std::size_t k = 0; k < F.coeffs[i].size(); ++k)
            s += F.coeffs[i][k] * std::conj(G.coeffs[i][k]) / w.multinomials[i][k].get_d();
    return s;
}

inline Rational norm_delta_squared(const PolySystem& F) { return inner_delta(F, F).re; }
inline Interval norm_delta(const PolySystem& F, mpfr_prec_t prec = kDefaultPrecision) {
    return Interval::from(norm_delta_squared(F), prec).sqrt();
}
inline double norm_delta(const PolySystemD& F) { return std::sqrt(inner_delta(F, F).real()); }

template <class S>
BasicPolySystem<S> scaled(BasicPolySystem<S> F, const S& s) {
    for (auto& eq : F.coeffs)
        for (auto& c : eq) c = c * s;
    return F;
}

inline cplx cpow(cplx x, int e) {
    cplx r = 1;
    for (int k = 0; k < e; ++k) r *= x;
    return r;
}

// Values f_i(x) and Jacobian rows d f_i / d x_j at a point of C^{n+1}.
inline std::vector<cplx> evaluate(const PolySystemD& F, const std::vector<cplx>& x) {
    std::vector<cplx> out;
    for (std::size_t i = 0; i < F.coeffs.size(); ++i) {
        cplx s = 0;
        const auto& ms = F.degrees.monomials(i);
        for (std::size_t k = 0; k < ms.size(); ++k) {
            cplx t = F.coeffs[i][k];
            for (std::size_t j = 0; j < x.size(); ++j) t *= cpow(x[j], ms[k][j]);
            s += t;
        }
        out.push_back(s);
    }
    return out;
}

inline std::vector<std::vector<cplx>> jacobian(const PolySystemD& F, const std::vector<cplx>& x) {
    std::vector<std::vector<cplx>> J(F.coeffs.size(), std::vector<cplx>(x.size(), 0));
    for (std::size_t i = 0; i < F.coeffs.size(); ++i) {
        const auto& ms = F.degrees.monomials(i);
        for (std::size_t k = 0; k < ms.size(); ++k)
            for (std::size_t j = 0; j < x.size(); ++j) {
                if (ms[k][j] == 0) continue;
                cplx t = F.coeffs[i][k] * static_cast<double>(ms[k][j]);
                for (std::size_t l = 0; l < x.size(); ++l) t *= cpow(x[l], ms[k][l] - (l == j ? 1 : 0));
                J[i][j] += t;
            }
    }
    return J;
}

namespace detail {

inline std::string trim_copy(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Splits a polynomial line into signed terms at top-level '+'/'-' (outside parentheses and
// not part of an exponent or a "X0^" power).
inline std::vector<std::string> split_terms(const std::string& line) {
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (std::size_t k = 0; k < line.size(); ++k) {
        char c = line[k];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        bool sign = (c == '+' || c == '-') && depth == 0;
        if (sign && k > 0) {
            char prev = 0;
            for (std::size_t j = k; j-- > 0;)
                if (line[j] != ' ') {
                    prev = line[j];
                    break;
                }
            if (prev == 'e' || prev == 'E' || prev == '^' || prev == '*' || prev == '+' || prev == '-' || prev == 0) sign = false;
        }
        if (sign && !trim_copy(cur).empty()) {
            terms.push_back(trim_copy(cur));
            cur.clear();
        }
        cur.push_back(c);
    }
    if (!trim_copy(cur).empty()) terms.push_back(trim_copy(cur));
    return terms;
}

}  // namespace detail

// One term: [sign] [coef] ['*'] X0^a*X1^b..., coef = rational | (gauss) | rational i.
inline std::pair<GaussRational, Exponent> parse_term(std::string term, int vars) {
    Exponent mu(vars, 0);
    std::string t;
    for (char c : term)
        if (c != ' ') t.push_back(c);
    bool neg = false;
    while (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg ^= t[0] == '-';
        t.erase(0, 1);
    }
    std::vector<std::string> factors;
    {
        std::string cur;
        int depth = 0;
        for (char c : t) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == '*' && depth == 0) {
                factors.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        factors.push_back(cur);
    }
    GaussRational coef(1);
    for (const auto& f : factors) {
        if (f.empty()) throw std::invalid_argument("bad term '" + term + "'");
        if (f[0] == 'X' || f[0] == 'x') {
            std::size_t caret = f.find('^');
            int var = std::stoi(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
            int e = caret == std::string::npos ? 1 : std::stoi(f.substr(caret + 1));
            if (var < 0 || var >= vars) throw std::invalid_argument("variable out of range in '" + term + "'");
            mu[var] += e;
        } else {
            coef = coef * parse_gauss_rational(f);
        }
    }
    if (neg) coef = -coef;
    return {coef, mu};
}

// Text format:
//   degrees: 2,3
//   <one polynomial per line>
// Lines starting with '#' are ignored.
inline PolySystem parse_system(const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    std::vector<std::string> body;
    std::vector<unsigned> degs;
    while (std::getline(ss, line)) {
        std::string t = detail::trim_copy(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.rfind("degrees", 0) == 0) {
            std::string rest = t.substr(t.find_first_of(":=") == std::string::npos ? 7 : t.find_first_of(":=") + 1);
            std::stringstream ds(rest);
            std::string item;
            while (std::getline(ds, item, ',')) degs.push_back(static_cast<unsigned>(std::stoul(detail::trim_copy(item))));
            continue;
        }
        body.push_back(t);
    }
    if (degs.empty()) throw std::invalid_argument("system text: missing 'degrees:' header");
    if (body.size() != degs.size()) throw std::invalid_argument("system text: polynomial count does not match degrees");
    DegreeList dl(degs);
    PolySystem F(dl);
    for (std::size_t i = 0; i < body.size(); ++i)
        for (const auto& term : detail::split_terms(body[i])) {
            auto [c, mu] = parse_term(term, dl.vars());
            int tot = 0;
            for (int e : mu) tot += e;
            if (tot != static_cast<int>(degs[i])) throw std::invalid_argument("term '" + term + "' is not homogeneous of the declared degree");
            F.at(i, mu) += c;
        }
    return F;
}

inline std::string format_system(const PolySystem& F) {
    std::string out = "degrees: ";
    for (std::size_t i = 0; i < F.degrees.size(); ++i) out += (i ? "," : "") + std::to_string(F.degrees[i]);
    out += "\n";
    for (std::size_t i = 0; i < F.coeffs.size(); ++i) {
        std::string line;
        const auto& ms = F.degrees.monomials(i);
        for (std::size_t k = 0; k < ms.size(); ++k) {
            const auto& c = F.coeffs[i][k];
            if (c.is_zero()) continue;
            if (!line.empty()) line += " + ";
            line += "(" + to_string(c) + ")";
            for (std::size_t j = 0; j < ms[k].size(); ++j)
                if (ms[k][j]) line += "*X" + std::to_string(j) + (ms[k][j] > 1 ? "^" + std::to_string(ms[k][j]) : "");
        }
        out += (line.empty() ? "0" : line) + "\n";
    }
    return out;
}

}  // namespace ratcond::polysys
