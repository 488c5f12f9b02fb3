#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratcond/census/enumerate.hpp"
#include "ratcond/census/histogram.hpp"
#include "ratcond/census/membership.hpp"
#include "ratcond/exact/constants.hpp"
#include "ratcond/polysys/binary_forms.hpp"
#include "ratcond/polysys/system.hpp"

namespace ratcond::census {

enum class CensusKind { linear, nonlinear };

struct CensusSpec {
    CensusKind kind = CensusKind::linear;
    unsigned n = 2;                     // linear: matrix size
    std::vector<unsigned> degrees;      // nonlinear: (d_1), n = 1
    Rational H = 1;
    std::vector<Rational> epsilons;
    std::vector<Rational> headline_w = {2, 4, 8};  // linear n = 2: k(M) >= w n^{5/2}
    unsigned jobs = 1;
    double cap = 1e8;                   // max predicted enumeration size
    mpfr_prec_t max_precision = 512;    // nonlinear refinement cap
    mpfr_prec_t bound_precision = 128;

    void validate() const {
        if (H < 1) throw std::invalid_argument("census: H must be >= 1");
        for (std::size_t j = 0; j < epsilons.size(); ++j) {
            if (epsilons[j] <= 0) throw std::invalid_argument("census: epsilons must be positive");
            if (j && epsilons[j] < epsilons[j - 1]) throw std::invalid_argument("census: epsilons must be sorted ascending");
        }
        if (kind == CensusKind::linear) {
            if (n != 2 && n != 3) throw std::domain_error("census_linear: n must be 2 or 3");
        } else {
            if (degrees.size() != 1 || degrees[0] < 1 || degrees[0] > 3)
                throw std::domain_error("census_nonlinear: only n = 1 with d <= 3 is supported");
        }
    }
};

struct EpsilonRow {
    Rational epsilon;
    std::uint64_t N = 0;                  // raw count of certain members, zero point included
    std::uint64_t N_uncertain = 0;        // enclosure straddled epsilon at the precision cap
    std::uint64_t visible = 0;
    std::uint64_t visible_uncertain = 0;
    Integer Ncal = 0;                     // projective count
    Integer Ncal_uncertain = 0;
    double empirical_tail = 0;            // Ncal / Ncal(1)
    double empirical_tail_upper = 0;      // (Ncal + Ncal_uncertain) / Ncal(1)
    Interval lead;                        // eps n^{5/2} (linear), eps^4 c (nonlinear)
    Interval bound;                       // tail bound at H; infinite below its range of validity
    bool vacuous = true;                  // bound not certainly below 1
    GcdHistogram members;
    GcdHistogram uncertain;
};

struct KTailRow {
    std::string label;
    Rational r;                           // k(M) >= 1/sqrt(r)
    std::uint64_t N = 0;
    std::uint64_t visible = 0;
    Integer Ncal = 0;
    double empirical_tail = 0;
    double reference = 0;                 // 2/w for the headline rows, 0 otherwise
};

struct CensusReport {
    CensusSpec spec;
    long long norm_scale = 1;             // squared norms are stored multiplied by this
    long long scaled_bound = 0;           // floor(norm_scale H^2)
    std::uint64_t N1 = 0;                 // all points, zero included
    std::uint64_t visible1 = 0;
    Integer Ncal1 = 0;
    GcdHistogram all;
    std::vector<EpsilonRow> rows;
    std::vector<KTailRow> k_tail;
    std::uint64_t refined_points = 0;     // nonlinear points that needed more than the start precision
    mpfr_prec_t max_precision_used = 0;
    double wall_seconds = 0;
};

namespace detail {

struct Accumulator {
    GcdHistogram all;
    std::vector<GcdHistogram> members, uncertain;
    std::vector<std::uint64_t> k_all, k_visible;
    bool zero_seen = false;
    std::uint64_t refined = 0;
    mpfr_prec_t max_prec = 0;
    std::map<std::vector<long long>, polysys::RhoClassification> rho_cache;  // per worker, never merged

    Accumulator(Scaling sc, long long B, std::size_t rows, std::size_t krows)
        : all(sc, B), members(rows, GcdHistogram(sc, B)), uncertain(rows, GcdHistogram(sc, B)),
          k_all(krows, 0), k_visible(krows, 0) {}

    void merge(const Accumulator& o) {
        all.merge(o.all);
        for (std::size_t j = 0; j < members.size(); ++j) {
            members[j].merge(o.members[j]);
            uncertain[j].merge(o.uncertain[j]);
        }
        for (std::size_t j = 0; j < k_all.size(); ++j) {
            k_all[j] += o.k_all[j];
            k_visible[j] += o.k_visible[j];
        }
        zero_seen = zero_seen || o.zero_seen;
        refined += o.refined;
        max_prec = std::max(max_prec, o.max_prec);
    }
};

inline Integer exact_quotient(std::uint64_t v, unsigned by, const char* what) {
    if (v % by != 0) throw std::logic_error(std::string("census: visible count not divisible by ") + what);
    return Integer(static_cast<unsigned long>(v / by));
}

inline double ratio(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("tail: projective count at eps = 1 is zero");
    return Rational(a, b).get_d();
}

inline void finish_report(CensusReport& rep, Accumulator& acc, unsigned unit_count) {
    const char* what = unit_count == 2 ? "2" : "4";
    rep.all = std::move(acc.all);
    rep.N1 = rep.all.total_upto(rep.scaled_bound) + (acc.zero_seen ? 1 : 0);
    rep.visible1 = rep.all.visible_upto(rep.scaled_bound);
    rep.Ncal1 = exact_quotient(rep.visible1, unit_count, what);
    for (std::size_t j = 0; j < rep.rows.size(); ++j) {
        EpsilonRow& row = rep.rows[j];
        row.members = std::move(acc.members[j]);
        row.uncertain = std::move(acc.uncertain[j]);
        row.N = row.members.total_upto(rep.scaled_bound) + (acc.zero_seen ? 1 : 0);
        row.N_uncertain = row.uncertain.total_upto(rep.scaled_bound);
        row.visible = row.members.visible_upto(rep.scaled_bound);
        row.visible_uncertain = row.uncertain.visible_upto(rep.scaled_bound);
        row.Ncal = exact_quotient(row.visible, unit_count, what);
        row.Ncal_uncertain = exact_quotient(row.visible_uncertain, unit_count, what);
        row.empirical_tail = ratio(row.Ncal, rep.Ncal1);
        row.empirical_tail_upper = ratio(row.Ncal + row.Ncal_uncertain, rep.Ncal1);
        row.vacuous = !row.bound.certainly_lt(Rational(1));
    }
    for (std::size_t j = 0; j < rep.k_tail.size(); ++j) {
        KTailRow& k = rep.k_tail[j];
        k.N = acc.k_all[j] + (acc.zero_seen ? 1 : 0);
        k.visible = acc.k_visible[j];
        k.Ncal = exact_quotient(k.visible, unit_count, what);
        k.empirical_tail = ratio(k.Ncal, rep.Ncal1);
    }
    rep.refined_points = acc.refined;
    rep.max_precision_used = acc.max_prec;
}

// Smallest j with test(j) true, assuming test is monotone in j; size if none.
template <class Test>
std::size_t first_true(std::size_t size, Test&& test) {
    std::size_t lo = 0, hi = size;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (test(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

template <class Int>
Int to_int(const Integer& z) {
    if constexpr (std::is_same_v<Int, Integer>) {
        return z;
    } else {
        return static_cast<Int>(static_cast<long long>(z.get_si()));
    }
}

template <class Int>
CensusReport run_linear(const CensusSpec& spec, const WeightedBall& ball, CensusReport rep) {
    const int n = static_cast<int>(spec.n);
    const std::size_t R = spec.epsilons.size();
    std::vector<Int> ep(R), eq(R), kp(rep.k_tail.size()), kq(rep.k_tail.size());
    for (std::size_t j = 0; j < R; ++j) {
        Rational e2 = spec.epsilons[j] * spec.epsilons[j];
        ep[j] = to_int<Int>(e2.get_num());
        eq[j] = to_int<Int>(e2.get_den());
    }
    for (std::size_t j = 0; j < rep.k_tail.size(); ++j) {
        kp[j] = to_int<Int>(rep.k_tail[j].r.get_num());
        kq[j] = to_int<Int>(rep.k_tail[j].r.get_den());
    }
    auto make = [&] { return Accumulator(Scaling::integer, rep.scaled_bound, R, rep.k_tail.size()); };
    auto visit = [&](Accumulator& acc, std::span<const long long> x, long long s) {
        if (s == 0) {
            acc.zero_seen = true;
            return;
        }
        long long g = 0;
        for (long long v : x) g = std::gcd(g, v);
        acc.all.add(g, s);
        auto e = gram_symmetric_functions<Int>(x, n);
        std::size_t j0 = first_true(R, [&](std::size_t j) { return linear_tube_member<Int>(e, n, ep[j], eq[j]); });
        for (std::size_t j = j0; j < R; ++j) acc.members[j].add(g, s);
        for (std::size_t j = 0; j < kp.size(); ++j)
            if (linear_k_tail_member_2x2<Int>(e, kp[j], kq[j])) {
                ++acc.k_all[j];
                if (g == 1) ++acc.k_visible[j];
            }
    };
    auto merge = [](Accumulator& a, const Accumulator& b) { a.merge(b); };
    Accumulator acc = parallel_reduce<Accumulator>(ball, spec.jobs, make, visit, merge);
    finish_report(rep, acc, 2);
    return rep;
}

template <class Int>
using GI = GaussInteger<Int>;

// X/gcd, reduced to the least element (lexicographic on (Re, Im) pairs) of its orbit under
// units, coefficient conjugation, X0 <-> X1 and X1 -> i X1. These maps are unitary and keep
// Z[i] coefficients, so rho and the Delta-norm are constant on the orbit.
inline std::vector<long long> orbit_canonical(const std::vector<GI<long long>>& z, const GI<long long>& g) {
    const std::size_t m = z.size();
    std::vector<GI<long long>> prim;
    prim.reserve(m);
    for (const auto& c : z) prim.push_back(gauss_exact_div(c, g));
    const GI<long long> units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::vector<long long> best, cand(2 * m);
    for (int rev = 0; rev < 2; ++rev)
        for (int cj = 0; cj < 2; ++cj)
            for (int tw = 0; tw < 4; ++tw)
                for (int u = 0; u < 4; ++u) {
                    for (std::size_t k = 0; k < m; ++k) {
                        GI<long long> c = prim[rev ? m - 1 - k : k];
                        if (cj) c = c.conj();
                        c = c * units[(tw * k) % 4] * units[u];
                        cand[2 * k] = c.re;
                        cand[2 * k + 1] = c.im;
                    }
                    if (best.empty() || cand < best) best = cand;
                }
    return best;
}

template <class Int>
CensusReport run_nonlinear(const CensusSpec& spec, const WeightedBall& ball, long long L, CensusReport rep) {
    const unsigned d = spec.degrees[0];
    const std::size_t R = spec.epsilons.size();
    std::vector<Int> ep(R), eq(R);
    std::vector<Rational> eps_sq;
    for (std::size_t j = 0; j < R; ++j) {
        Rational e2 = spec.epsilons[j] * spec.epsilons[j];
        ep[j] = to_int<Int>(e2.get_num());
        eq[j] = to_int<Int>(e2.get_den());
        eps_sq.push_back(e2);
    }
    // rho <= 1 always, so every row with eps >= 1 holds every point.
    const std::size_t first_trivial = first_true(R, [&](std::size_t j) { return spec.epsilons[j] >= 1; });
    auto make = [&] { return Accumulator(Scaling::gaussian, rep.scaled_bound, R, 0); };
    auto visit = [&](Accumulator& acc, std::span<const long long> x, long long s) {
        if (s == 0) {
            acc.zero_seen = true;
            return;
        }
        std::vector<GI<long long>> z(d + 1);
        for (unsigned k = 0; k <= d; ++k) z[k] = {x[2 * k], x[2 * k + 1]};
        GI<long long> g = gauss_gcd(std::span<const GI<long long>>(z));
        const long long key = g.norm();
        acc.all.add(key, s);
        auto mark = [&](std::size_t j, polysys::Membership m) {
            if (m == polysys::Membership::inside)
                acc.members[j].add(key, s);
            else if (m == polysys::Membership::uncertain)
                acc.uncertain[j].add(key, s);
        };
        for (std::size_t j = first_trivial; j < R; ++j) mark(j, polysys::Membership::inside);
        if (first_trivial == 0 || d == 1) return;  // linear forms have rho = 1
        if (d == 2) {
            GI<Int> a0{widen<Int>(z[0].re), widen<Int>(z[0].im)}, a1{widen<Int>(z[1].re), widen<Int>(z[1].im)},
                a2{widen<Int>(z[2].re), widen<Int>(z[2].im)};
            GI<Int> D = a1 * a1 - GI<Int>{Int(4), Int(0)} * a0 * a2;
            Int dn = D.norm();
            for (std::size_t j = 0; j < first_trivial; ++j)
                if (quadratic_tube_member<Int>(dn, widen<Int>(s), widen<Int>(L), ep[j], eq[j])) mark(j, polysys::Membership::inside);
            return;
        }
        std::vector<GI<i128>> wide;
        for (const auto& c : z) wide.push_back({i128(c.re), i128(c.im)});
        if (polysys::binary_discriminant<i128>(std::span<const GI<i128>>(wide)).is_zero()) {
            for (std::size_t j = 0; j < first_trivial; ++j) mark(j, polysys::Membership::inside);
            return;
        }
        auto rep_key = orbit_canonical(z, g);
        auto it = acc.rho_cache.find(rep_key);
        if (it == acc.rho_cache.end()) {
            std::vector<GaussRational> coeffs;
            for (unsigned k = 0; k <= d; ++k)
                coeffs.push_back({Rational(static_cast<long>(rep_key[2 * k])), Rational(static_cast<long>(rep_key[2 * k + 1]))});
            Rational norm_sq = make_rational(Integer(static_cast<long>(s / key)), Integer(static_cast<long>(L)));
            std::vector<Rational> open(eps_sq.begin(), eps_sq.begin() + static_cast<std::ptrdiff_t>(first_trivial));
            it = acc.rho_cache.emplace(rep_key, polysys::classify_binary_form(coeffs, norm_sq, open, 64, spec.max_precision)).first;
        }
        const auto& cls = it->second;
        if (cls.precision_used > 64) ++acc.refined;
        acc.max_prec = std::max(acc.max_prec, cls.precision_used);
        for (std::size_t j = 0; j < first_trivial; ++j) mark(j, cls.per_epsilon[j]);
    };
    auto merge = [](Accumulator& a, const Accumulator& b) { a.merge(b); };
    Accumulator acc = parallel_reduce<Accumulator>(ball, spec.jobs, make, visit, merge);
    finish_report(rep, acc, 4);
    return rep;
}

}  // namespace detail

// Delta-norm ball for binary forms of degree d: real coordinates (Re a_0, Im a_0, Re a_1, ...),
// scaled squared norm L ||f||_Delta^2 = sum_k (L / C(d,k)) |a_k|^2 with L = lcm of the binomials.
inline WeightedBall delta_ball(unsigned d, const Rational& H, long long* scale_out = nullptr) {
    Integer L = 1;
    for (unsigned k = 0; k <= d; ++k) L = lcm(L, binomial(d, k));
    std::vector<long long> w;
    for (unsigned k = 0; k <= d; ++k) {
        Integer wk = L / binomial(d, k);
        w.push_back(wk.get_si());
        w.push_back(wk.get_si());
    }
    if (scale_out) *scale_out = L.get_si();
    return {w, H < 0 ? -1 : scaled_bound(H, L.get_si())};
}

// Points of the height ball in the given norm, in lexicographic order.
// Coordinates are integer entries (euclidean) or (Re, Im) pairs of Z[i] coefficients (delta).
inline WeightedBall enumerate_ball_region(std::size_t m, const Rational& H, const std::optional<unsigned>& delta_degree) {
    if (delta_degree) return delta_ball(*delta_degree, H);
    return euclidean_ball(m, H);
}

template <class Visit>
void enumerate_ball(std::size_t m, const Rational& H, const std::optional<unsigned>& delta_degree, Visit&& visit,
                    double cap = 2e8) {
    if (H < 1) throw std::invalid_argument("enumerate_ball: H must be >= 1");
    WeightedBall ball = enumerate_ball_region(m, H, delta_degree);
    ball.check_cap(cap);
    ball.visit_all([&](std::span<const long long> x, long long) { visit(x); });
}

inline CensusReport census_linear(const CensusSpec& spec) {
    if (spec.kind != CensusKind::linear) throw std::invalid_argument("census_linear: spec is not linear");
    spec.validate();
    auto t0 = std::chrono::steady_clock::now();
    CensusReport rep;
    rep.spec = spec;
    WeightedBall ball = euclidean_ball(spec.n * spec.n, spec.H);
    ball.check_cap(spec.cap);
    rep.norm_scale = 1;
    rep.scaled_bound = ball.bound;
    for (const auto& e : spec.epsilons) {
        EpsilonRow row;
        row.epsilon = e;
        auto c = linear_bound_constants(spec.n, e, spec.bound_precision);
        row.lead = c.lead;
        row.bound = c.linear_tail_bound(spec.H);
        rep.rows.push_back(std::move(row));
    }
    if (spec.n == 2) {
        for (const auto& e : spec.epsilons) rep.k_tail.push_back({"k>=1/eps", e * e, 0, 0, 0, 0, 0});
        for (const auto& w : spec.headline_w) {
            if (w <= 0) throw std::invalid_argument("census: headline w must be positive");
            KTailRow k{"k>=w*n^(5/2)", Rational(1) / (w * w * 32), 0, 0, 0, 0, 0};
            k.reference = Rational(Rational(2) / w).get_d();
            rep.k_tail.push_back(std::move(k));
        }
    }
    int bits = 0;
    for (const auto& e : spec.epsilons) bits = std::max(bits, linear_test_bits(static_cast<int>(spec.n), ball.bound, e * e));
    for (const auto& k : rep.k_tail) bits = std::max(bits, linear_test_bits(2, ball.bound, k.r) + 4);
    rep = bits <= 120 ? detail::run_linear<i128>(spec, ball, std::move(rep)) : detail::run_linear<Integer>(spec, ball, std::move(rep));
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline CensusReport census_nonlinear(const CensusSpec& spec) {
    if (spec.kind != CensusKind::nonlinear) throw std::invalid_argument("census_nonlinear: spec is not nonlinear");
    spec.validate();
    auto t0 = std::chrono::steady_clock::now();
    CensusReport rep;
    rep.spec = spec;
    long long L = 1;
    WeightedBall ball = delta_ball(spec.degrees[0], spec.H, &L);
    ball.check_cap(spec.cap);
    rep.norm_scale = L;
    rep.scaled_bound = ball.bound;
    for (const auto& e : spec.epsilons) {
        EpsilonRow row;
        row.epsilon = e;
        auto c = nonlinear_bound_constants(spec.degrees, e, spec.bound_precision);
        row.lead = c.eps4c;
        row.bound = c.nonlinear_tail_bound(spec.H);
        rep.rows.push_back(std::move(row));
    }
    // |D|^2 <= 25 B^2 for coefficients with |a_k|^2 <= B.
    double B = static_cast<double>(std::max(ball.bound, 1LL));
    int bits = 0;
    for (const auto& e : spec.epsilons) {
        Rational e2 = e * e;
        double m = std::max(std::abs(e2.get_num().get_d()), e2.get_den().get_d());
        bits = std::max(bits, static_cast<int>(std::ceil(std::log2(100.0 * B * B * L * L * m * m))) + 2);
    }
    rep = bits <= 120 ? detail::run_nonlinear<i128>(spec, ball, L, std::move(rep))
                      : detail::run_nonlinear<Integer>(spec, ball, L, std::move(rep));
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline CensusReport run_census(const CensusSpec& spec) {
    return spec.kind == CensusKind::linear ? census_linear(spec) : census_nonlinear(spec);
}

inline std::vector<MobiusCheck> mobius_inversion_checks(const CensusReport& rep) {
    std::vector<MobiusCheck> out{mobius_inversion_check(rep.all)};
    for (const auto& row : rep.rows) {
        out.push_back(mobius_inversion_check(row.members));
        out.push_back(mobius_inversion_check(row.uncertain));
    }
    return out;
}

// First failing identity over the whole census (all points, every tube, every uncertainty band).
inline MobiusCheck mobius_inversion_check(const CensusReport& rep) {
    for (const auto& c : mobius_inversion_checks(rep))
        if (!c.holds) return c;
    return {};
}

struct TailRow {
    Rational epsilon;
    double empirical = 0;
    double empirical_upper = 0;
    Interval lead;
    Interval bound;
    bool vacuous = true;
    Integer Ncal = 0;
};

inline std::vector<TailRow> tail_probability(const CensusReport& rep) {
    if (rep.Ncal1 == 0) throw std::domain_error("tail_probability: projective count at eps = 1 is zero");
    std::vector<TailRow> out;
    for (const auto& r : rep.rows)
        out.push_back({r.epsilon, r.empirical_tail, r.empirical_tail_upper, r.lead, r.bound, r.vacuous, r.Ncal});
    return out;
}

}  // namespace ratcond::census
