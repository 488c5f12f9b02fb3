// A short tour: condition of one matrix, a small census with its tail table, and a
// certified Newton start with the precision it needs.
#include <cstdio>

#include "ratcond/census/census.hpp"
#include "ratcond/linear/conditioning.hpp"
#include "ratcond/newton/gamma.hpp"
#include "ratcond/newton/precision.hpp"
#include "ratcond/polysys/condition.hpp"

using namespace ratcond;

int main() {
    auto M = linear::parse_matrix("3,1;1,2");
    auto rec = linear::condition_record(M);
    std::printf("M = [3 1; 1 2]: k(M) in %s, mu(M) in %s\n", rec.k.str(10).c_str(), rec.mu.str(10).c_str());

    census::CensusSpec spec;
    spec.n = 2;
    spec.H = 12;
    spec.epsilons = {make_rational(1, 20), make_rational(1, 10), make_rational(1, 4), Rational(1)};
    auto rep = census::census_linear(spec);
    std::printf("\n2x2 integer matrices with ||M||_F <= 12: %llu points, %s projective classes\n",
                static_cast<unsigned long long>(rep.N1), rep.Ncal1.get_str().c_str());
    std::printf("%-6s %10s %12s\n", "eps", "tail", "eps n^(5/2)");
    for (const auto& row : rep.rows)
        std::printf("%-6s %10.5f %12.5f\n", row.epsilon.get_str().c_str(), row.empirical_tail, row.lead.mid());

    auto F = polysys::parse_system("degrees: 2\nX1^2 - 2*X0^2 + X0*X1");
    std::printf("\nf = x^2 + x - 2: mu_norm = %.6f, rho = %.6f\n", polysys::mu_norm_system(F).mid(),
                polysys::rho_of_system(F).mid());

    auto f = newton::dehomogenize(F);
    auto zeta = newton::ZeroPoint::exact_point(f, {GaussRational(Rational(1))});
    auto cert = newton::certify_approx_zero(f, zeta, {GaussRational(make_rational(11, 10))});
    std::printf("start 11/10 for the zero 1: %s, radius %s\n", cert.certified ? "certified" : "not certified",
                cert.radius.lower_str(6).c_str());
    for (std::size_t k = 0; k < cert.iterates.size(); ++k)
        std::printf("  z_%zu distance %s\n", k, cert.iterates[k].distance.upper_str(6).c_str());
    auto p = newton::approx_zero_precision(f, zeta);
    std::printf("a certified start of precision %ld bits: z = %s\n", p.p, to_string(p.z[0]).c_str());
    return 0;
}
