#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ratcond/heights.hpp"

using namespace ratcond;

namespace {

using GI = GaussInteger<Integer>;

std::vector<Integer> ints(std::initializer_list<long> v) {
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

std::vector<Rational> rats(std::initializer_list<Rational> v) { return std::vector<Rational>(v); }

GI gi(long re, long im) { return {Integer(re), Integer(im)}; }

}  // namespace

TEST(Visibility, Integer) {
    EXPECT_TRUE(is_visible(ints({1, 2, 3, 4})));
    EXPECT_FALSE(is_visible(ints({2, 4, 6, 8})));
    EXPECT_FALSE(is_visible(ints({0, 0, 5})));
    EXPECT_TRUE(is_visible(ints({0, -1})));
    EXPECT_THROW(is_visible(ints({0, 0})), std::invalid_argument);
}

TEST(Visibility, Gaussian) {
    EXPECT_TRUE(is_c_visible(std::vector<GI>{gi(1, 0), gi(0, 1)}));
    EXPECT_FALSE(is_c_visible(std::vector<GI>{gi(2, 0), gi(2, 2)}));
    EXPECT_FALSE(is_c_visible(std::vector<GI>{gi(1, 1), gi(1, -1)}));
    EXPECT_TRUE(is_c_visible(std::vector<GI>{gi(2, 1), gi(1, 2)}));  // 2+i and 1+2i are non-associate primes
}

TEST(Canonical, Examples) {
    EXPECT_EQ(canonical_representative(rats({make_rational(1, 2), make_rational(1, 3)})).coords, ints({3, 2}));
    EXPECT_EQ(canonical_representative(rats({Rational(2), Rational(4)})).coords, ints({1, 2}));
    EXPECT_EQ(canonical_representative(rats({Rational(-1), Rational(0)})).coords, ints({1, 0}));
    EXPECT_EQ(canonical_representative(rats({Rational(0), Rational(-6), Rational(4)})).coords, ints({0, 3, -2}));
    EXPECT_THROW(canonical_representative(rats({Rational(0), Rational(0)})), std::invalid_argument);
}

TEST(Canonical, IdempotentAndProjectivelyInvariant) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 30);
    for (int t = 0; t < 2000; ++t) {
        std::vector<Rational> x;
        for (int k = 0; k < 4; ++k) x.push_back(make_rational(num(rng), den(rng)));
        bool zero = true;
        for (const auto& q : x) zero = zero && q == 0;
        if (zero) continue;
        auto P = canonical_representative(x);
        std::vector<Rational> back;
        for (const auto& v : P.coords) back.emplace_back(v);
        ASSERT_EQ(canonical_representative(back), P);
        Rational lambda = make_rational(num(rng) == 0 ? 7 : num(rng), den(rng));
        if (lambda == 0) continue;
        std::vector<Rational> y;
        for (const auto& q : x) y.push_back(q * lambda);
        ASSERT_EQ(canonical_representative(y), P);
        ASSERT_TRUE(is_visible(P.coords));
    }
}

TEST(Height, NorthcottSchmidt) {
    auto h = ns_height(canonical_representative(rats({Rational(3), Rational(2)})));
    EXPECT_EQ(h.height_squared, 13);
    EXPECT_NEAR(h.bit_length, 0.5 * std::log2(13.0), 1e-12);
    EXPECT_TRUE(h.height().overlaps(Interval::from(13L, 128).sqrt()));
    EXPECT_EQ(ns_height(canonical_representative(rats({Rational(1), Rational(0), Rational(0)}))).height_squared, 1);
    EXPECT_EQ(bit_length(canonical_representative(rats({Rational(1), Rational(0)}))), 0);
    EXPECT_EQ(ns_height(canonical_representative(rats({Rational(1), Rational(2), Rational(2)}))).height_squared, 9);
}

// The visible representative has the least norm among integer representatives q P, q = a/b, a, b <= 10.
TEST(Height, MinimalAmongIntegerRepresentatives) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-30, 30);
    for (int t = 0; t < 300; ++t) {
        std::vector<Rational> x{Rational(d(rng)), Rational(d(rng)), Rational(d(rng))};
        if (x[0] == 0 && x[1] == 0 && x[2] == 0) continue;
        auto P = canonical_representative(x);
        Rational h2 = ns_height(P).height_squared;
        for (long a = 1; a <= 10; ++a)
            for (long b = 1; b <= 10; ++b) {
                Rational q = make_rational(a, b);
                bool integral = true;
                Rational s = 0;
                for (const auto& v : P.coords) {
                    Rational w = q * Rational(v);
                    integral = integral && w.get_den() == 1;
                    s += w * w;
                }
                if (integral) {
                    ASSERT_GE(s, h2);
                }
            }
    }
}

TEST(Height, UnitarilyInvariantExamples) {
    // X0X1 with (d) = (2): coefficient order X0^2, X0X1, X1^2
    auto F = canonical_representative_qi(std::vector<GaussRational>{GaussRational(0), GaussRational(1), GaussRational(0)});
    auto h = ui_height(F, {2});
    EXPECT_EQ(h.height_squared, make_rational(1, 2));
    EXPECT_TRUE(h.height().overlaps(Interval::from(make_rational(1, 2), 128).sqrt()));
    auto G = canonical_representative_qi(std::vector<GaussRational>{GaussRational(1), GaussRational(0), GaussRational(0)});
    EXPECT_EQ(ui_height(G, {2}).height_squared, 1);
    EXPECT_THROW(ui_height(G, {3}), std::invalid_argument);
}

TEST(Height, CanonicalGaussRepresentative) {
    std::vector<GaussRational> x{GaussRational(Rational(0), Rational(-2)), GaussRational(Rational(4), Rational(2))};
    auto P = canonical_representative_qi(x);
    EXPECT_TRUE(P.coords[0].re > 0 && P.coords[0].im >= 0);
    EXPECT_TRUE(is_c_visible(P.coords));
    EXPECT_EQ(P.coords[0], gi(1, 0));
    EXPECT_EQ(P.coords[1], gi(-1, 2));
}

TEST(Height, UnitInvarianceAndSandwich) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-9, 9);
    const std::vector<std::vector<unsigned>> lists{{2}, {3}, {1, 1}, {2, 2}};
    const GaussRational units[] = {GaussRational(1), GaussRational(-1), GaussRational(Rational(0), Rational(1)),
                                   GaussRational(Rational(0), Rational(-1))};
    for (const auto& degrees : lists) {
        const std::size_t len = delta_multinomials(degrees).size();
        unsigned D = 0;
        for (unsigned v : degrees) D = std::max(D, v);
        for (int t = 0; t < 300; ++t) {
            std::vector<GaussRational> x;
            for (std::size_t k = 0; k < len; ++k) x.push_back(GaussRational(make_rational(d(rng), 1 + std::abs(d(rng))), Rational(d(rng))));
            bool zero = true;
            for (const auto& z : x) zero = zero && z.is_zero();
            if (zero) continue;
            auto P = canonical_representative_qi(x);
            auto h = ui_height(P, degrees);
            for (const auto& u : units) {
                std::vector<GaussRational> y;
                for (const auto& z : x) y.push_back(z * u);
                ASSERT_EQ(canonical_representative_qi(y), P);
            }
            Rational H2 = plain_height(P).height_squared;
            Rational Df = Rational(factorial(D));
            ASSERT_LE(H2 / (Df * Df), h.height_squared);
            ASSERT_LE(h.height_squared, H2);
            double bl = plain_height(P).bit_length;
            ASSERT_LE(bl - D * std::log2(static_cast<double>(D)) - 1e-12, h.bit_length);
            ASSERT_LE(h.bit_length, bl + 1e-12);
        }
    }
}

TEST(Height, PointText) {
    auto z = parse_point("1/2:-3:1/3+1/4i");
    ASSERT_EQ(z.size(), 3u);
    EXPECT_EQ(z[2].im, make_rational(1, 4));
    EXPECT_EQ(format_point(canonical_representative(rats({make_rational(1, 2), make_rational(1, 3)}))), "3:2");
    EXPECT_THROW(parse_point(""), std::invalid_argument);
}
