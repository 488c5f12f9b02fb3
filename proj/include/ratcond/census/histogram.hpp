#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratcond/exact/number_theory.hpp"

namespace ratcond::census {

// How multiplying a primitive point by a scalar of "key" k moves its squared norm:
// integer lattices scale by g (s -> g^2 s, key = g); Z[i] lattices by lambda (s -> N(lambda) s, key = N(lambda)).
enum class Scaling { integer, gaussian };

// cells[key][s]: number of nonzero lattice points with gcd key `key` and scaled squared norm s.
class GcdHistogram {
public:
    GcdHistogram() = default;
    GcdHistogram(Scaling scaling, long long bound) : scaling_(scaling), bound_(bound) {
        if (bound_ < 0) {
            max_key_ = 0;
        } else if (scaling_ == Scaling::integer) {
            max_key_ = static_cast<long long>(std::sqrt(static_cast<double>(bound_)));
            while (max_key_ * max_key_ > bound_) --max_key_;
            while ((max_key_ + 1) * (max_key_ + 1) <= bound_) ++max_key_;
        } else {
            max_key_ = bound_;
        }
        cells_.assign(static_cast<std::size_t>((max_key_ + 1) * (std::max(bound_, -1LL) + 1)), 0);
    }

    Scaling scaling() const { return scaling_; }
    long long bound() const { return bound_; }
    long long max_key() const { return max_key_; }

    void add(long long key, long long s, std::uint64_t count = 1) {
        if (key < 1 || key > max_key_ || s < 0 || s > bound_) throw std::out_of_range("GcdHistogram::add");
        cells_[index(key, s)] += count;
    }
    std::uint64_t cell(long long key, long long s) const {
        if (key < 1 || key > max_key_ || s < 0 || s > bound_) return 0;
        return cells_[index(key, s)];
    }
    void merge(const GcdHistogram& o) {
        if (o.scaling_ != scaling_ || o.bound_ != bound_) throw std::invalid_argument("GcdHistogram::merge: shape mismatch");
        for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] += o.cells_[k];
    }

    // Points of gcd key `key` with s <= T.
    std::uint64_t class_upto(long long key, long long T) const {
        std::uint64_t c = 0;
        for (long long s = 0; s <= std::min(T, bound_); ++s) c += cell(key, s);
        return c;
    }
    std::vector<std::uint64_t> cumulative(long long key) const {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(std::max(bound_, -1LL) + 1), 0);
        std::uint64_t acc = 0;
        for (long long s = 0; s <= bound_; ++s) c[static_cast<std::size_t>(s)] = acc += cell(key, s);
        return c;
    }
    std::uint64_t visible_upto(long long T) const { return class_upto(1, T); }
    std::uint64_t total_upto(long long T) const {
        std::uint64_t c = 0;
        for (long long k = 1; k <= max_key_; ++k) c += class_upto(k, T);
        return c;
    }

    // Squared-norm multiplier of a key.
    long long scale_of(long long key) const { return scaling_ == Scaling::integer ? key * key : key; }

private:
    std::size_t index(long long key, long long s) const {
        return static_cast<std::size_t>(key * (bound_ + 1) + s);
    }

    Scaling scaling_ = Scaling::integer;
    long long bound_ = -1;
    long long max_key_ = 0;
    std::vector<std::uint64_t> cells_;
};

struct MobiusCheck {
    bool holds = true;
    std::string failed_identity;  // empty when all hold
    long long T = -1;             // first threshold where it failed
    long long m = -1;             // first class index where it failed (class identity only)
};

// With f(T) = visible points with s <= T and g(T) = all nonzero points with s <= T:
//   integer:  class_m(T) = f(T/m^2),      g(T) = sum_m f(T/m^2),      f(T) = sum_m mu(m) g(T/m^2)
//   gaussian: class_m(T) = a(m) f(T/m),   g(T) = sum_m a(m) f(T/m),   f(T) = sum_m b(m) g(T/m)
// where a(m) counts ideals of Z[i] of norm m and b is its Dirichlet inverse. Every T in [0, bound] is checked.
inline MobiusCheck mobius_inversion_check(const GcdHistogram& h) {
    MobiusCheck out;
    const long long B = h.bound();
    if (B < 0) return out;
    const long long K = h.max_key();
    if (K < 1) return out;  // no nonzero point fits
    std::vector<std::vector<std::uint64_t>> cum(static_cast<std::size_t>(K + 1));
    for (long long k = 1; k <= K; ++k) cum[static_cast<std::size_t>(k)] = h.cumulative(k);
    const auto& f = cum[1];
    std::vector<long long> g(static_cast<std::size_t>(B + 1), 0);
    for (long long k = 1; k <= K; ++k)
        for (long long T = 0; T <= B; ++T) g[static_cast<std::size_t>(T)] += static_cast<long long>(cum[static_cast<std::size_t>(k)][static_cast<std::size_t>(T)]);

    std::vector<long long> a(static_cast<std::size_t>(K + 1), 1), b(static_cast<std::size_t>(K + 1), 0);
    if (h.scaling() == Scaling::gaussian) {
        a = gaussian_ideal_counts(static_cast<std::size_t>(K));
        b = dirichlet_inverse(a);
    } else {
        auto mu = mobius_table(static_cast<std::size_t>(K));
        for (long long m = 1; m <= K; ++m) b[static_cast<std::size_t>(m)] = mu[static_cast<std::size_t>(m)];
    }
    auto fail = [&](const char* what, long long T, long long m) {
        out.holds = false;
        out.failed_identity = what;
        out.T = T;
        out.m = m;
        return out;
    };
    auto at = [](const auto& v, long long T) { return static_cast<long long>(v[static_cast<std::size_t>(T)]); };

    for (long long m = 1; m <= K; ++m)
        for (long long T = 0; T <= B; ++T) {
            long long expect = a[static_cast<std::size_t>(m)] * at(f, T / h.scale_of(m));
            if (at(cum[static_cast<std::size_t>(m)], T) != expect) return fail("class decomposition", T, m);
        }
    for (long long T = 0; T <= B; ++T) {
        long long sum_f = 0, sum_g = 0;
        for (long long m = 1; m <= K && h.scale_of(m) <= std::max(T, 1LL); ++m) {
            sum_f += a[static_cast<std::size_t>(m)] * at(f, T / h.scale_of(m));
            sum_g += b[static_cast<std::size_t>(m)] * g[static_cast<std::size_t>(T / h.scale_of(m))];
        }
        if (sum_f != g[static_cast<std::size_t>(T)]) return fail("g = sum f", T, -1);
        if (sum_g != at(f, T)) return fail("f = sum mu g", T, -1);
    }
    return out;
}

}  // namespace ratcond::census
