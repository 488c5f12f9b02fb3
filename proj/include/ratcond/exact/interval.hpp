#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <utility>

#include "ratcond/exact/integer.hpp"

namespace ratcond {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;

// Closed interval [lo, hi] with MPFR endpoints rounded outward.
// This is the BoundValue of the library: every transcendental constant is one.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = kDefaultPrecision) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    Interval(const Interval& o) {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval(Interval&& o) noexcept {
        mpfr_init2(lo_, MPFR_PREC_MIN);
        mpfr_init2(hi_, MPFR_PREC_MIN);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    Interval& operator=(const Interval& o) {
        if (this != &o) {
            mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
            mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }
    Interval& operator=(Interval&& o) noexcept {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static Interval from(const Rational& q, mpfr_prec_t prec = kDefaultPrecision) {
        Interval r(prec);
        mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static Interval from(const Integer& z, mpfr_prec_t prec = kDefaultPrecision) {
        Interval r(prec);
        mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
        return r;
    }
    static Interval from(long v, mpfr_prec_t prec = kDefaultPrecision) {
        Interval r(prec);
        mpfr_set_si(r.lo_, v, MPFR_RNDD);
        mpfr_set_si(r.hi_, v, MPFR_RNDU);
        return r;
    }
    static Interval from_double(double v, mpfr_prec_t prec = kDefaultPrecision) {
        Interval r(std::max<mpfr_prec_t>(prec, 53));
        mpfr_set_d(r.lo_, v, MPFR_RNDD);
        mpfr_set_d(r.hi_, v, MPFR_RNDU);
        return r;
    }
    // [v - err, v + err]; used for floating results carrying an a posteriori error estimate.
    static Interval around(double v, double err, mpfr_prec_t prec = 64) {
        Interval r(std::max<mpfr_prec_t>(prec, 53));
        mpfr_set_d(r.lo_, v, MPFR_RNDD);
        mpfr_set_d(r.hi_, v, MPFR_RNDU);
        mpfr_sub_d(r.lo_, r.lo_, std::abs(err), MPFR_RNDD);
        mpfr_add_d(r.hi_, r.hi_, std::abs(err), MPFR_RNDU);
        return r;
    }
    static Interval hull(const Interval& a, const Interval& b) {
        Interval r(std::max(a.prec(), b.prec()));
        mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    static Interval infinity(mpfr_prec_t prec = kDefaultPrecision) {
        Interval r(prec);
        mpfr_set_inf(r.lo_, 1);
        mpfr_set_inf(r.hi_, 1);
        return r;
    }
    static Interval entire(mpfr_prec_t prec = kDefaultPrecision) {
        Interval r(prec);
        mpfr_set_inf(r.lo_, -1);
        mpfr_set_inf(r.hi_, 1);
        return r;
    }
    static Interval pi(mpfr_prec_t prec = kDefaultPrecision) {
        Interval r(prec);
        mpfr_const_pi(r.lo_, MPFR_RNDD);
        mpfr_const_pi(r.hi_, MPFR_RNDU);
        return r;
    }
    static Interval e(mpfr_prec_t prec = kDefaultPrecision) {
        Interval one = from(1L, prec);
        return one.exp();
    }

    mpfr_prec_t prec() const { return std::max(mpfr_get_prec(lo_), mpfr_get_prec(hi_)); }
    const mpfr_t& lo_raw() const { return lo_; }
    const mpfr_t& hi_raw() const { return hi_; }
    double lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid() const {
        if (is_infinite()) return upper();
        mpfr_t m;
        mpfr_init2(m, prec() + 1);
        mpfr_add(m, lo_, hi_, MPFR_RNDN);
        mpfr_div_2ui(m, m, 1, MPFR_RNDN);
        double d = mpfr_get_d(m, MPFR_RNDN);
        mpfr_clear(m);
        return d;
    }
    Interval midpoint() const {
        Interval r(prec());
        mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
        mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
        mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
        return r;
    }
    double width() const {
        mpfr_t w;
        mpfr_init2(w, 64);
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        double d = mpfr_get_d(w, MPFR_RNDU);
        mpfr_clear(w);
        return d;
    }
    // Half width as an interval-safe upper bound.
    Interval radius() const {
        Interval r(prec());
        mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
        mpfr_div_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
        mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
        return r;
    }

    bool is_infinite() const { return mpfr_inf_p(lo_) && mpfr_sgn(lo_) > 0; }
    bool is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }
    bool contains(const Rational& q) const {
        return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
    }
    bool contains(const Interval& o) const { return mpfr_lessequal_p(lo_, o.lo_) && mpfr_greaterequal_p(hi_, o.hi_); }
    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    bool overlaps(const Interval& o) const { return mpfr_lessequal_p(lo_, o.hi_) && mpfr_lessequal_p(o.lo_, hi_); }

    bool certainly_lt(const Interval& o) const { return mpfr_less_p(hi_, o.lo_); }
    bool certainly_le(const Interval& o) const { return mpfr_lessequal_p(hi_, o.lo_); }
    bool certainly_le(const Rational& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0; }
    bool certainly_ge(const Rational& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0; }
    bool certainly_gt(const Rational& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0; }
    bool certainly_lt(const Rational& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0; }
    bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }

    Interval operator-() const {
        Interval r(prec());
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }
    friend Interval operator+(const Interval& a, const Interval& b) {
        Interval r(std::max(a.prec(), b.prec()));
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        Interval r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        mpfr_prec_t p = std::max(a.prec(), b.prec());
        Interval r(p);
        if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
            mul_endpoint(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
            mul_endpoint(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
            return r;
        }
        mpfr_t t;
        mpfr_init2(t, p);
        const mpfr_srcptr as[2] = {a.lo_, a.hi_};
        const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
        mpfr_set_inf(r.lo_, 1);
        mpfr_set_inf(r.hi_, -1);
        for (auto x : as)
            for (auto y : bs) {
                mul_endpoint(t, x, y, MPFR_RNDD);
                mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
                mul_endpoint(t, x, y, MPFR_RNDU);
                mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
            }
        mpfr_clear(t);
        return r;
    }
    friend Interval operator/(const Interval& a, const Interval& b) {
        mpfr_prec_t p = std::max(a.prec(), b.prec());
        if (b.contains_zero()) {
            if (mpfr_zero_p(b.lo_) && mpfr_sgn(b.hi_) > 0 && mpfr_sgn(a.lo_) >= 0) {
                Interval r(p);
                mpfr_div(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
                mpfr_set_inf(r.hi_, 1);
                if (mpfr_zero_p(a.hi_)) mpfr_set_zero(r.hi_, 1);
                return r;
            }
            return entire(p);
        }
        Interval inv(p);
        mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
        mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
        return a * inv;
    }
    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }
    Interval& operator/=(const Interval& o) { return *this = *this / o; }

    Interval square() const {
        Interval r(prec());
        if (mpfr_sgn(lo_) >= 0) {
            mpfr_sqr(r.lo_, lo_, MPFR_RNDD);
            mpfr_sqr(r.hi_, hi_, MPFR_RNDU);
        } else if (mpfr_sgn(hi_) <= 0) {
            mpfr_sqr(r.lo_, hi_, MPFR_RNDD);
            mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
        } else {
            mpfr_set_zero(r.lo_, 1);
            mpfr_t t;
            mpfr_init2(t, prec());
            mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
            mpfr_sqr(t, hi_, MPFR_RNDU);
            mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
            mpfr_clear(t);
        }
        return r;
    }
    Interval abs() const {
        if (mpfr_sgn(lo_) >= 0) return *this;
        if (mpfr_sgn(hi_) <= 0) return -*this;
        Interval r(prec());
        mpfr_set_zero(r.lo_, 1);
        mpfr_t t;
        mpfr_init2(t, prec());
        mpfr_neg(t, lo_, MPFR_RNDU);
        mpfr_max(r.hi_, hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }
    // Negative parts are clipped: callers take roots of quantities known to be >= 0.
    Interval sqrt() const {
        Interval r(prec());
        if (mpfr_sgn(lo_) <= 0)
            mpfr_set_zero(r.lo_, 1);
        else
            mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
        if (mpfr_sgn(hi_) <= 0)
            mpfr_set_zero(r.hi_, 1);
        else
            mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    Interval root(unsigned long k) const {
        Interval r(prec());
        if (mpfr_sgn(lo_) <= 0)
            mpfr_set_zero(r.lo_, 1);
        else
            mpfr_rootn_ui(r.lo_, lo_, k, MPFR_RNDD);
        if (mpfr_sgn(hi_) <= 0)
            mpfr_set_zero(r.hi_, 1);
        else
            mpfr_rootn_ui(r.hi_, hi_, k, MPFR_RNDU);
        return r;
    }
    Interval pow(unsigned long e) const {
        if (e == 0) return from(1L, prec());
        if (e % 2 == 0) {
            Interval s = abs();
            Interval r(prec());
            mpfr_pow_ui(r.lo_, s.lo_, e, MPFR_RNDD);
            mpfr_pow_ui(r.hi_, s.hi_, e, MPFR_RNDU);
            return r;
        }
        Interval r(prec());
        mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
        mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
        return r;
    }
    Interval exp() const {
        Interval r(prec());
        mpfr_exp(r.lo_, lo_, MPFR_RNDD);
        mpfr_exp(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    Interval log() const {
        Interval r(prec());
        mpfr_log(r.lo_, lo_, MPFR_RNDD);
        mpfr_log(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    Interval log2() const {
        Interval r(prec());
        mpfr_log2(r.lo_, lo_, MPFR_RNDD);
        mpfr_log2(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    static Interval max(const Interval& a, const Interval& b) {
        Interval r(std::max(a.prec(), b.prec()));
        mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    static Interval min(const Interval& a, const Interval& b) {
        Interval r(std::max(a.prec(), b.prec()));
        mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    // Smallest integer >= every point of the interval (upper endpoint ceiling).
    Integer ceil_upper() const {
        Integer z;
        mpfr_t t;
        mpfr_init2(t, prec());
        mpfr_ceil(t, hi_);
        mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDU);
        mpfr_clear(t);
        return z;
    }

    std::string str(int digits = 20) const {
        if (is_infinite()) return "[inf, inf]";
        return "[" + endpoint(lo_, digits, MPFR_RNDD) + ", " + endpoint(hi_, digits, MPFR_RNDU) + "]";
    }
    std::string lower_str(int digits = 20) const { return endpoint(lo_, digits, MPFR_RNDD); }
    std::string upper_str(int digits = 20) const { return endpoint(hi_, digits, MPFR_RNDU); }

    friend std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << x.str(); }

private:
    mpfr_t lo_;
    mpfr_t hi_;

    // 0 * inf is taken as 0: endpoints at infinity only arise as one-sided bounds.
    static void mul_endpoint(mpfr_ptr out, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
        if (mpfr_zero_p(x) || mpfr_zero_p(y))
            mpfr_set_zero(out, 1);
        else
            mpfr_mul(out, x, y, rnd);
    }
    static std::string endpoint(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
        if (mpfr_inf_p(v)) return mpfr_sgn(v) > 0 ? "inf" : "-inf";
        char buf[256];
        const char* fmt = rnd == MPFR_RNDD ? "%.*RDg" : "%.*RUg";
        mpfr_snprintf(buf, sizeof buf, fmt, digits, v);
        return buf;
    }
};

inline Interval operator+(const Interval& a, long b) { return a + Interval::from(b, a.prec()); }
inline Interval operator-(const Interval& a, long b) { return a - Interval::from(b, a.prec()); }
inline Interval operator*(const Interval& a, long b) { return a * Interval::from(b, a.prec()); }
inline Interval operator/(const Interval& a, long b) { return a / Interval::from(b, a.prec()); }
inline Interval operator*(long b, const Interval& a) { return Interval::from(b, a.prec()) * a; }
inline Interval operator+(long b, const Interval& a) { return Interval::from(b, a.prec()) + a; }
inline Interval operator-(long b, const Interval& a) { return Interval::from(b, a.prec()) - a; }
inline Interval operator/(long b, const Interval& a) { return Interval::from(b, a.prec()) / a; }
inline Interval operator*(const Interval& a, const Rational& q) { return a * Interval::from(q, a.prec()); }
inline Interval operator*(const Rational& q, const Interval& a) { return Interval::from(q, a.prec()) * a; }
inline Interval operator+(const Interval& a, const Rational& q) { return a + Interval::from(q, a.prec()); }
inline Interval operator*(const Interval& a, const Integer& z) { return a * Interval::from(z, a.prec()); }
inline Interval operator*(const Integer& z, const Interval& a) { return Interval::from(z, a.prec()) * a; }

// Rectangular complex enclosure.
struct ComplexInterval {
    Interval re, im;

    ComplexInterval(mpfr_prec_t prec = kDefaultPrecision) : re(prec), im(prec) {}
    ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    static ComplexInterval from(const Rational& r, const Rational& i, mpfr_prec_t prec) {
        return {Interval::from(r, prec), Interval::from(i, prec)};
    }

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    Interval norm_sq() const { return re.square() + im.square(); }
    Interval abs() const { return norm_sq().sqrt(); }
    ComplexInterval conj() const { return {re, -im}; }
    ComplexInterval midpoint() const { return {re.midpoint(), im.midpoint()}; }

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
        Interval d = b.norm_sq();
        ComplexInterval n = a * b.conj();
        return {n.re / d, n.im / d};
    }
    friend ComplexInterval operator*(const ComplexInterval& a, const Interval& s) { return {a.re * s, a.im * s}; }
    ComplexInterval operator-() const { return {-re, -im}; }
};

}  // namespace ratcond
