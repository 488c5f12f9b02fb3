#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ratcond/exact/constants.hpp"
#include "ratcond/exact/integer.hpp"

namespace ratcond::census {

struct ResourceCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer points x in Z^m with sum_k w_k x_k^2 <= bound (w_k >= 1).
// Emission order: lexicographic on (x_0, ..., x_{m-1}), each coordinate ascending.
struct WeightedBall {
    std::vector<long long> weights;
    long long bound = -1;  // negative: empty

    std::size_t dim() const { return weights.size(); }

    // Volume of the ellipsoid plus a surface allowance; used only for the resource guard.
    double predicted_count() const {
        if (bound < 0) return 0;
        const unsigned m = static_cast<unsigned>(dim());
        double r = std::sqrt(static_cast<double>(bound));
        double det = 1;
        for (long long w : weights) det *= std::sqrt(static_cast<double>(w));
        return ball_volume_K(m, 64).upper() * std::pow(r + std::sqrt(static_cast<double>(m)), m) / det;
    }

    void check_cap(double cap) const {
        if (predicted_count() > cap)
            throw ResourceCapExceeded("predicted enumeration size " + std::to_string(predicted_count()) +
                                      " exceeds cap " + std::to_string(cap));
    }

    long long coordinate_limit(std::size_t k, long long remaining) const {
        long long r = static_cast<long long>(std::sqrt(static_cast<double>(remaining) / static_cast<double>(weights[k])));
        while (r > 0 && weights[k] * r * r > remaining) --r;
        while (weights[k] * (r + 1) * (r + 1) <= remaining) ++r;
        return r;
    }

    // Visits every point whose first coordinate is x0; visit(span, weighted_norm).
    template <class Visit>
    void visit_slab(long long x0, Visit&& visit) const {
        if (bound < 0 || dim() == 0) return;
        long long first = weights[0] * x0 * x0;
        if (first > bound) return;
        std::vector<long long> x(dim(), 0);
        x[0] = x0;
        rec(1, bound - first, first, x, visit);
    }

    template <class Visit>
    void visit_all(Visit&& visit) const {
        if (bound < 0) return;
        if (dim() == 0) {
            std::vector<long long> x;
            visit(std::span<const long long>(x), 0LL);
            return;
        }
        long long lim = coordinate_limit(0, bound);
        for (long long x0 = -lim; x0 <= lim; ++x0) visit_slab(x0, visit);
    }

    std::vector<long long> slabs() const {
        std::vector<long long> s;
        if (bound < 0 || dim() == 0) return s;
        long long lim = coordinate_limit(0, bound);
        for (long long x0 = -lim; x0 <= lim; ++x0) s.push_back(x0);
        return s;
    }

private:
    template <class Visit>
    void rec(std::size_t k, long long remaining, long long used, std::vector<long long>& x, Visit& visit) const {
        if (k == dim()) {
            visit(std::span<const long long>(x), used);
            return;
        }
        long long lim = coordinate_limit(k, remaining);
        for (long long v = -lim; v <= lim; ++v) {
            x[k] = v;
            long long c = weights[k] * v * v;
            rec(k + 1, remaining - c, used + c, x, visit);
        }
        x[k] = 0;
    }
};

// floor(W * H^2) for rational H.
inline long long scaled_bound(const Rational& H, long long W) {
    Rational r = H * H * Rational(static_cast<long>(W));
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    if (!f.fits_slong_p()) throw ResourceCapExceeded("height bound too large");
    return f.get_si();
}

inline WeightedBall euclidean_ball(std::size_t m, const Rational& H) {
    if (H < 0) return {std::vector<long long>(m, 1), -1};
    return {std::vector<long long>(m, 1), scaled_bound(H, 1)};
}

// Slab-parallel reduction: each worker owns an accumulator; merge is commutative, so the
// result does not depend on the schedule.
template <class Acc, class MakeAcc, class Visit, class Merge>
Acc parallel_reduce(const WeightedBall& ball, unsigned jobs, MakeAcc make, Visit visit, Merge merge) {
    std::vector<long long> slabs = ball.slabs();
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, slabs.size()))));
    std::vector<Acc> accs;
    for (unsigned j = 0; j < jobs; ++j) accs.push_back(make());
    if (slabs.empty() && ball.bound >= 0 && ball.dim() == 0) {
        ball.visit_all([&](std::span<const long long> x, long long s) { visit(accs[0], x, s); });
    }
    auto work = [&](unsigned j) {
        for (std::size_t k = j; k < slabs.size(); k += jobs)
            ball.visit_slab(slabs[k], [&](std::span<const long long> x, long long s) { visit(accs[j], x, s); });
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> ts;
        for (unsigned j = 0; j < jobs; ++j) ts.emplace_back(work, j);
        for (auto& t : ts) t.join();
    }
    for (unsigned j = 1; j < jobs; ++j) merge(accs[0], accs[j]);
    return std::move(accs[0]);
}

}  // namespace ratcond::census
