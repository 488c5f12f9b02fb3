#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ratcond/newton/gamma.hpp"
#include "ratcond/newton/precision.hpp"

using namespace ratcond;
using namespace ratcond::newton;
using polysys::parse_system;

namespace {

AffineSystem affine(const std::string& text) { return dehomogenize(parse_system(text)); }

std::vector<GaussRational> pt(std::initializer_list<Rational> re) {
    std::vector<GaussRational> z;
    for (const auto& r : re) z.emplace_back(r);
    return z;
}

// a (x - r)(x - s) with small integer a, r, s, r != s
AffineSystem random_quadratic(std::mt19937_64& rng, Rational& r, Rational& s) {
    std::uniform_int_distribution<long> d(-6, 6), a(1, 4);
    do {
        r = make_rational(d(rng), a(rng));
        s = make_rational(d(rng), a(rng));
    } while (r == s);
    Rational lead(a(rng));
    polysys::PolySystem F(polysys::DegreeList({2}));
    F.coeffs[0] = {GaussRational(lead * r * s), GaussRational(-lead * (r + s)), GaussRational(lead)};
    return dehomogenize(F);
}

}  // namespace

TEST(NewtonStep, Examples) {
    auto f = affine("degrees: 2\nX1^2 - 2*X0^2");
    auto z1 = newton_step(f, pt({Rational(1)}));
    EXPECT_EQ(z1[0], GaussRational(make_rational(3, 2)));
    auto z2 = newton_step(f, z1);
    EXPECT_EQ(z2[0], GaussRational(make_rational(17, 12)));
    EXPECT_THROW(newton_step(f, pt({Rational(0)})), SingularJacobian);
}

TEST(NewtonStep, LinearSystemsInOneStep) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-5, 5);
    int done = 0;
    for (int t = 0; t < 100; ++t) {
        // x + a y - b, c x + e y - g
        long a = d(rng), b = d(rng), c = d(rng), e = d(rng), g = d(rng);
        if (e - a * c == 0) continue;
        std::string text = "degrees: 1,1\nX1 + (" + std::to_string(a) + ")*X2 - (" + std::to_string(b) + ")*X0\n(" +
                           std::to_string(c) + ")*X1 + (" + std::to_string(e) + ")*X2 - (" + std::to_string(g) + ")*X0";
        auto f = affine(text);
        auto z = newton_step(f, pt({make_rational(d(rng), 3), make_rational(d(rng), 7)}));
        ASSERT_TRUE(is_exact_zero(f, z));
        ++done;
    }
    EXPECT_GT(done, 50);
}

TEST(Homogenize, RoundTrip) {
    auto F = parse_system("degrees: 2,1\n(1/2+i)*X0^2 - 3*X1*X2 + X2^2\nX0 - i*X1");
    EXPECT_EQ(homogenize(dehomogenize(F)).coeffs, F.coeffs);
}

TEST(Gamma, Examples) {
    auto f = affine("degrees: 2\nX1^2 - X0^2");
    auto g = gamma_quantity(f, ZeroPoint::exact_point(f, pt({Rational(1)})));
    EXPECT_TRUE(g.upper.contains(make_rational(1, 2)));
    ASSERT_TRUE(g.exact_square.has_value());
    EXPECT_EQ(*g.exact_square, make_rational(1, 4));

    auto h = affine("degrees: 2\nX1^2 - 2*X0^2");
    auto zs = univariate_zeros(h);
    ASSERT_EQ(zs.size(), 2u);
    for (const auto& z : zs) EXPECT_NEAR(gamma_quantity(h, z).upper.mid(), 1 / (2 * std::sqrt(2.0)), 1e-12);

    auto lin = affine("degrees: 1,1\nX1 - X2\nX1 + X2 - 2*X0");
    auto gl = gamma_quantity(lin, ZeroPoint::exact_point(lin, pt({Rational(1), Rational(1)})));
    EXPECT_TRUE(gl.upper.contains(Rational(0)));
    EXPECT_THROW(ZeroPoint::exact_point(f, pt({Rational(2)})), std::invalid_argument);
}

TEST(Gamma, ScaleInvariant) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        Rational r, s;
        AffineSystem f = random_quadratic(rng, r, s);
        AffineSystem g = f;
        for (auto& c : g.coeffs[0]) c = c * GaussRational(make_rational(-5, 3), Rational(2));
        auto zf = ZeroPoint::exact_point(f, pt({r}));
        auto zg = ZeroPoint::exact_point(g, pt({r}));
        ASSERT_EQ(*gamma_quantity(f, zf).exact_square, *gamma_quantity(g, zg).exact_square);
        ASSERT_TRUE(gamma_quantity(f, zf).upper.overlaps(gamma_quantity(g, zg).upper));
    }
}

TEST(Certify, Examples) {
    auto f = affine("degrees: 2\nX1^2 - X0^2");
    auto zeta = ZeroPoint::exact_point(f, pt({Rational(1)}));
    auto good = certify_approx_zero(f, zeta, pt({make_rational(11, 10)}));
    EXPECT_TRUE(good.certified);
    EXPECT_TRUE(good.convergence_ok);
    EXPECT_EQ(good.iterates.size(), 6u);
    EXPECT_TRUE(good.radius.overlaps(gamma_threshold() * 2L));
    auto far = certify_approx_zero(f, zeta, pt({Rational(2)}));
    EXPECT_FALSE(far.certified);
    EXPECT_FALSE(far.diagnostic.empty());
    auto same = certify_approx_zero(f, zeta, pt({Rational(1)}));
    EXPECT_TRUE(same.certified);
    for (const auto& it : same.iterates) EXPECT_EQ(it.z[0], GaussRational(1));
    // threshold (3 - sqrt 7)/2 = 0.17712
    EXPECT_TRUE(gamma_threshold().certainly_gt(make_rational(1771, 10000)));
    EXPECT_TRUE(gamma_threshold().certainly_lt(make_rational(1772, 10000)));
}

TEST(Certify, QuadraticConvergenceOnCertifiedStarts) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> off(-30, 30);
    int certified = 0;
    for (int t = 0; t < 200; ++t) {
        Rational r, s;
        AffineSystem f = random_quadratic(rng, r, s);
        auto zeta = ZeroPoint::exact_point(f, pt({r}));
        std::vector<GaussRational> z{GaussRational(r + make_rational(off(rng), 400), make_rational(off(rng), 400))};
        auto c = certify_approx_zero(f, zeta, z);
        if (!c.certified) continue;
        ++certified;
        ASSERT_TRUE(c.convergence_ok) << c.diagnostic;
        for (std::size_t k = 0; k < c.iterates.size(); ++k) ASSERT_TRUE(c.iterates[k].within) << "k=" << k;
    }
    EXPECT_GT(certified, 50);
}

TEST(Certify, EnclosedZeroRoute) {
    auto f = affine("degrees: 2\nX1^2 - 2*X0^2");
    auto zs = univariate_zeros(f);
    for (const auto& z : zs) {
        double x = z.box[0].re.mid();
        std::vector<GaussRational> start{GaussRational(Rational(x + 0.05))};
        auto c = certify_approx_zero(f, z, start);
        EXPECT_TRUE(c.certified);
        EXPECT_TRUE(c.convergence_ok);
    }
}

TEST(GammaMu, RandomQuadratics) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 50; ++t) {
        Rational r, s;
        AffineSystem f = random_quadratic(rng, r, s);
        for (const auto& root : {r, s}) {
            auto c = gamma_vs_mu_bound_check(f, ZeroPoint::exact_point(f, pt({root})));
            ASSERT_TRUE(c.holds) << "gamma " << c.gamma.str(10) << " rhs " << c.rhs.str(10);
        }
    }
    auto lin = affine("degrees: 1\nX1 - 3*X0");
    EXPECT_TRUE(gamma_vs_mu_bound_check(lin, ZeroPoint::exact_point(lin, pt({Rational(3)}))).holds);
    auto xy = affine("degrees: 2\nX0*X1");  // x = 0 after dehomogenizing
    EXPECT_TRUE(gamma_vs_mu_bound_check(xy, ZeroPoint::exact_point(xy, pt({Rational(0)}))).holds);
}

TEST(Precision, Examples) {
    auto a = precision_of(pt({make_rational(3, 4), make_rational(1, 2)}));
    EXPECT_EQ(a.q, 4);
    EXPECT_DOUBLE_EQ(a.pr, 2.0);
    auto b = precision_of(pt({Rational(1), Rational(2)}));
    EXPECT_EQ(b.q, 1);
    EXPECT_EQ(b.pr, 0.0);
    auto c = precision_of({GaussRational(make_rational(1, 3), make_rational(1, 3)), GaussRational(make_rational(2, 3))});
    EXPECT_EQ(c.q, 3);
    EXPECT_NEAR(c.pr, std::log2(3.0), 1e-15);
}

TEST(Precision, MinimalDenominator) {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 24);
    for (int t = 0; t < 500; ++t) {
        std::vector<GaussRational> z{GaussRational(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))),
                                     GaussRational(make_rational(num(rng), den(rng)))};
        auto p = precision_of(z);
        auto integral = [&](const Integer& q) {
            for (const auto& c : z)
                if (Rational(c.re * Rational(q)).get_den() != 1 || Rational(c.im * Rational(q)).get_den() != 1) return false;
            return true;
        };
        ASSERT_TRUE(integral(p.q));
        for (long q = 1; q < p.q.get_si(); ++q) ASSERT_FALSE(integral(Integer(q)));
    }
}

// Disc counts against an independent float oracle with a safety margin.
TEST(ApproxZeroCensus, DiscCountsMatchOracle) {
    auto census = approx_zero_census(pt({make_rational(1, 3)}), make_rational(9, 4), 40);
    const double radius = (3 - std::sqrt(7.0)) / (2 * 1.5);
    for (const auto& row : census.rows) {
        const double m = static_cast<double>(row.m);
        std::uint64_t all = 0, exact = 0;
        const long R = static_cast<long>(std::ceil(m * radius)) + 2;
        const long cx = static_cast<long>(std::round(m / 3));
        for (long a = cx - R; a <= cx + R; ++a)
            for (long b = -R; b <= R; ++b) {
                double d = std::hypot(a / m - 1.0 / 3, b / m);
                ASSERT_GT(std::abs(d - radius), 1e-9);  // no boundary cases
                if (d <= radius) {
                    ++all;
                    if (std::gcd(std::gcd(a, b), row.m) == 1) ++exact;
                }
            }
        ASSERT_EQ(row.all, all) << "m=" << row.m;
        ASSERT_EQ(row.exact, exact) << "m=" << row.m;
    }
}

TEST(ApproxZeroCensus, CountsForUnitRoot) {
    // x^2 - 1, zeta = 1, gamma = 1/2: radius 2(3 - sqrt 7)/2 m = 0.354 m
    auto c = approx_zero_census(pt({Rational(1)}), make_rational(1, 4), 200);
    EXPECT_EQ(c.rows[0].all, 1u);
    EXPECT_EQ(c.rows[0].exact, 1u);
    EXPECT_EQ(c.rows[1].exact, 0u);  // w/2 near 1 with w odd: |1/2| > 0.354
    auto chk = approx_zero_structure_check(c, 1);
    EXPECT_TRUE(chk.item_i);
    EXPECT_TRUE(chk.item_ii);
    EXPECT_TRUE(chk.item_iii) << "first failure m=" << chk.first_failure_m;
    EXPECT_TRUE(chk.gap_principle);
    EXPECT_EQ(chk.middle_last, -1);  // H1 = 0.84, H2 = 1.41: no integer inside
}

TEST(ApproxZeroCensus, MiddleRangeNonEmpty) {
    // 100 x^2 - 1, zeta = 1/10: gamma = 5, H1 = 3.76, H2 = 14.17
    auto f = affine("degrees: 2\nX1^2*100 - X0^2");
    auto zeta = ZeroPoint::exact_point(f, pt({make_rational(1, 10)}));
    auto g = gamma_quantity(f, zeta);
    ASSERT_EQ(*g.exact_square, 25);
    auto c = approx_zero_census(*zeta.exact, *g.exact_square, 200);
    auto chk = approx_zero_structure_check(c, 1);
    EXPECT_EQ(chk.middle_first, 4);
    EXPECT_EQ(chk.middle_last, 14);
    EXPECT_TRUE(chk.item_i);
    EXPECT_TRUE(chk.item_ii);
    EXPECT_TRUE(chk.item_iii) << "first failure m=" << chk.first_failure_m;
    EXPECT_TRUE(chk.gap_principle);
}

// Distinct certified points with one denominator m are at least 1/m apart, checked pairwise.
TEST(ApproxZeroCensus, GapPrinciplePairwise) {
    auto c = approx_zero_census(pt({make_rational(1, 10)}), Rational(25), 60, true);
    for (const auto& row : c.rows)
        for (std::size_t i = 0; i < row.exact_points.size(); ++i)
            for (std::size_t j = i + 1; j < row.exact_points.size(); ++j) {
                long long dr = row.exact_points[i][0] - row.exact_points[j][0];
                long long di = row.exact_points[i][1] - row.exact_points[j][1];
                ASSERT_GE(dr * dr + di * di, 1);  // |w - w'| / m >= 1/m
            }
}

TEST(PrecisionWitness, UnitRoot) {
    auto f = affine("degrees: 2\nX1^2 - X0^2");
    auto zeta = ZeroPoint::exact_point(f, pt({Rational(1)}));
    auto r = approx_zero_precision(f, zeta);
    // log2(1/2) + log2(2^{-1/2} + sqrt 2) + 1 = 1.085, so p = 2
    EXPECT_TRUE(r.threshold.overlaps(Interval::from_double(1.0849625007211563, 128) + Interval::around(0, 1e-12)));
    EXPECT_EQ(r.p, 2);
    EXPECT_TRUE(r.certified) << r.diagnostic;
    EXPECT_TRUE(r.exact_precision);
    EXPECT_EQ(r.precision.q, ipow(Integer(2), static_cast<unsigned long>(r.p)));
    // z = 1 itself certifies and has precision 0
    EXPECT_TRUE(certify_approx_zero(f, zeta, pt({Rational(1)})).certified);
    EXPECT_EQ(precision_of(pt({Rational(1)})).pr, 0.0);
}

TEST(PrecisionWitness, RandomQuadratics) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; ++t) {
        Rational r, s;
        AffineSystem f = random_quadratic(rng, r, s);
        auto zeta = ZeroPoint::exact_point(f, pt({r}));
        auto res = approx_zero_precision(f, zeta);
        ASSERT_TRUE(res.certified) << "t=" << t << " " << res.diagnostic;
        ASSERT_GE(static_cast<double>(res.p), res.threshold.lower() - 1e-12);
    }
}
