#pragma once

#include <algorithm>
#include <vector>

#include "ratcond/exact/integer.hpp"

namespace ratcond {

using Exponent = std::vector<int>;

// All exponent vectors of total degree d in `vars` variables, lexicographically
// decreasing (X0^d first, X_{vars-1}^d last).
inline std::vector<Exponent> monomials_of_degree(int d, int vars) {
    std::vector<Exponent> out;
    Exponent cur(vars, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == vars - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
    };
    if (vars == 0) return out;
    rec(rec, 0, d);
    return out;
}

inline Integer multinomial(const Exponent& mu) {
    int total = 0;
    for (int e : mu) total += e;
    Integer r = factorial(total);
    for (int e : mu) r /= factorial(e);
    return r;
}

}  // namespace ratcond
