#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "ratcond/linear/conditioning.hpp"

using namespace ratcond;
using namespace ratcond::linear;

namespace {

SquareMatrix mat(std::size_t n, std::initializer_list<long> v) {
    std::vector<Rational> e;
    for (long x : v) e.emplace_back(x);
    return SquareMatrix(n, e);
}

SquareMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long range = 20) {
    std::uniform_int_distribution<long> d(-range, range), den(1, 7);
    SquareMatrix m(n);
    for (auto& v : m.a) v = make_rational(d(rng), den(rng));
    return m;
}

Eigen::MatrixXd to_eigen(const SquareMatrix& m) {
    Eigen::MatrixXd e(m.n, m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) e(i, j) = m(i, j).get_d();
    return e;
}

// Smallest and largest roots of det(lambda I - M^T M) by rational bisection on Sturm counts.
std::pair<double, double> eigen_extremes_oracle(const SquareMatrix& m) {
    Poly<Rational> p = charpoly(gram(m));
    auto chain = sturm_chain(p);
    Rational hi = frobenius_squared(m) + 1;
    auto root = [&](int index) {  // index-th root from below, 1-based
        Rational lo = -1, up = hi;
        for (int it = 0; it < 120; ++it) {
            Rational mid = (lo + up) / 2;
            if (sturm_count(chain, Rational(-1), mid) >= index)
                up = mid;
            else
                lo = mid;
        }
        return Rational((lo + up) / 2).get_d();
    };
    int total = sturm_count(chain, Rational(-1), hi);
    return {root(1), root(total)};
}

}  // namespace

TEST(Frobenius, Examples) {
    EXPECT_TRUE(frobenius_norm(SquareMatrix::identity(2)).overlaps(Interval::from(2L, 128).sqrt()));
    EXPECT_TRUE(frobenius_norm(mat(2, {3, 0, 0, 4})).contains(Rational(5)));
    EXPECT_TRUE(frobenius_norm(SquareMatrix(2)).contains(Rational(0)));
    EXPECT_EQ(frobenius_squared(mat(2, {3, 0, 0, 4})), 25);
}

TEST(SingularValues, Examples) {
    auto [a, b] = singular_extremes(mat(2, {3, 0, 0, 4}));
    EXPECT_TRUE(a.contains(Rational(3)));
    EXPECT_TRUE(b.contains(Rational(4)));
    auto [c, d] = singular_extremes(mat(2, {1, 0, 0, 0}));
    EXPECT_TRUE(c.contains(Rational(0)));
    EXPECT_TRUE(d.contains(Rational(1)));
}

TEST(SingularValues, MatchCharacteristicPolynomialOracle) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 60; ++t) {
        SquareMatrix m = random_matrix(rng, 3);
        if (determinant(m) == 0) continue;
        auto [smin, smax] = singular_extremes(m);
        auto [lmin, lmax] = eigen_extremes_oracle(m);
        EXPECT_NEAR(smin.mid(), std::sqrt(lmin), 1e-12 * std::max(1.0, std::sqrt(lmax)));
        EXPECT_NEAR(smax.mid(), std::sqrt(lmax), 1e-12 * std::max(1.0, std::sqrt(lmax)));
        EXPECT_LT(smin.width(), 1e-12 * std::max(1.0, smax.mid()));
    }
}

TEST(Condition, Examples) {
    EXPECT_TRUE(condition_k(SquareMatrix::identity(3)).contains(Rational(1)));
    EXPECT_TRUE(condition_k(mat(2, {2, 0, 0, 1})).contains(Rational(2)));
    EXPECT_TRUE(condition_k(mat(2, {1000, 0, 0, 1})).contains(Rational(1000)));
    EXPECT_TRUE(condition_mu(SquareMatrix::identity(2)).overlaps(Interval::from(2L, 128).sqrt()));
    EXPECT_TRUE(condition_mu(mat(2, {2, 0, 0, 1})).overlaps(Interval::from(5L, 128).sqrt()));
    EXPECT_TRUE(condition_k(mat(2, {1, 2, 2, 4})).is_infinite());
}

TEST(Condition, DistanceToSingular) {
    EXPECT_TRUE(fs_distance_to_singular(SquareMatrix::identity(2)).overlaps(1L / Interval::from(2L, 128).sqrt()));
    EXPECT_TRUE(fs_distance_to_singular(mat(2, {1, 2, 2, 4})).contains(Rational(0)));
    EXPECT_TRUE(fs_distance_to_singular(mat(2, {2, 0, 0, 1})).overlaps(1L / Interval::from(5L, 128).sqrt()));
    EXPECT_THROW(fs_distance_to_singular(SquareMatrix(2)), std::invalid_argument);
}

TEST(Condition, KBelowMuAndScaleInvariance) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 2 + t % 2;
        SquareMatrix m = random_matrix(rng, n);
        auto r = condition_record(m);
        if (r.singular) continue;
        ASSERT_TRUE(r.k.certainly_le(r.mu) || r.k.overlaps(r.mu));
        ASSERT_LE(r.k.lower(), r.mu.upper());
        Rational lambda = make_rational(static_cast<long>(t % 9) - 4 == 0 ? 3 : static_cast<long>(t % 9) - 4, 7);
        SquareMatrix s = m;
        for (auto& v : s.a) v *= lambda;
        auto q = condition_record(s);
        ASSERT_TRUE(q.k.overlaps(r.k));
        ASSERT_TRUE(q.mu.overlaps(r.mu));
    }
}

TEST(Condition, DeterminantSandwich2x2) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
        SquareMatrix m = random_matrix(rng, 2);
        auto [smin, smax] = singular_extremes(m);
        Interval det = Interval::from(determinant(m), 128).abs();
        ASSERT_LE((smin * smax).lower(), det.upper());
        ASSERT_LE(det.lower(), smax.square().upper());
    }
}

// Eckart-Young: no sampled singular matrix is closer to M/||M|| than rho(M), and the
// truncated-SVD matrix attains rho.
TEST(Condition, EckartYoungSampling) {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> g(0, 1);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + t % 2;
        SquareMatrix m = random_matrix(rng, static_cast<std::size_t>(n));
        if (determinant(m) == 0) continue;
        double rho = fs_distance_to_singular(m).mid();
        Eigen::MatrixXd M = to_eigen(m);
        M /= M.norm();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
        Eigen::MatrixXd best = M - svd.singularValues()(n - 1) * svd.matrixU().col(n - 1) * svd.matrixV().col(n - 1).transpose();
        ASSERT_NEAR((M - best).norm(), rho, 1e-12);
        ASSERT_NEAR(best.determinant(), 0.0, 1e-12);
        double closest = 1e300;
        for (int s = 0; s < 5000; ++s) {
            // rank-deficient truncation of a perturbed minimizer, perturbation 0.1 down to 1e-4
            const double scale = 0.1 * std::pow(10.0, -(s % 4));
            Eigen::MatrixXd P = best;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) P(i, j) += scale * g(rng);
            Eigen::JacobiSVD<Eigen::MatrixXd> ps(P, Eigen::ComputeFullU | Eigen::ComputeFullV);
            Eigen::VectorXd sv = ps.singularValues();
            sv(n - 1) = 0;
            Eigen::MatrixXd N = ps.matrixU() * sv.asDiagonal() * ps.matrixV().transpose();
            closest = std::min(closest, (M - N).norm());
            ASSERT_GE((M - N).norm(), rho - 1e-12);
        }
        ASSERT_LE(closest, rho * 1.05);
    }
}

TEST(MuTube, SturmMembershipExamples) {
    EXPECT_TRUE(in_mu_tube(mat(2, {1, 2, 2, 4}), make_rational(1, 1000)));
    EXPECT_FALSE(in_mu_tube(SquareMatrix::identity(2), make_rational(7, 10)));
    EXPECT_TRUE(in_mu_tube(SquareMatrix::identity(2), make_rational(71, 100)));  // rho(I_2) = 0.7071
    EXPECT_TRUE(in_mu_tube(SquareMatrix::identity(2), Rational(1)));
    SquareMatrix d = mat(2, {2, 0, 0, 1});
    EXPECT_TRUE(in_mu_tube(d, make_rational(45, 100)));   // 1/sqrt 5 = 0.447
    EXPECT_FALSE(in_mu_tube(d, make_rational(44, 100)));
}

TEST(Matrix, ParseFormatDeterminant) {
    SquareMatrix m = parse_matrix("1,2;3,4");
    EXPECT_EQ(determinant(m), -2);
    EXPECT_EQ(parse_matrix(format_matrix(m)), m);
    EXPECT_EQ(determinant(mat(3, {2, 0, 0, 0, 3, 0, 0, 0, 4})), 24);
}
