#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "ratcond/census/census.hpp"
#include "ratcond/census/counting.hpp"
#include "ratcond/census/davenport.hpp"
#include "ratcond/cli/config.hpp"
#include "ratcond/cli/output.hpp"
#include "ratcond/exact/constants.hpp"
#include "ratcond/heights.hpp"
#include "ratcond/newton/gamma.hpp"
#include "ratcond/newton/precision.hpp"

namespace ratcond::cli {

namespace detail {

inline std::string line(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return std::string(buf) + "\n";
}

inline std::string pass_word(bool ok) { return ok ? "PASS" : "FAIL"; }

// T as "base^exp", recomputed from the closed forms and checked against the stored integer.
inline std::string power_form(const Integer& T, unsigned long base, unsigned long exp) {
    if (ipow(Integer(base), exp) != T) throw std::logic_error("power form does not match the constant");
    return std::to_string(base) + "^" + std::to_string(exp);
}

inline census::CensusSpec census_spec(const ExperimentConfig& c, bool nonlinear) {
    census::CensusSpec s;
    s.kind = nonlinear ? census::CensusKind::nonlinear : census::CensusKind::linear;
    s.n = nonlinear ? 1 : c.n;
    s.degrees = nonlinear ? c.degrees : std::vector<unsigned>{};
    s.H = c.H;
    s.epsilons = c.epsilons;
    s.headline_w = c.headline_w;
    s.jobs = c.jobs;
    s.cap = c.cap;
    s.max_precision = c.max_precision;
    s.bound_precision = c.precision_bits;
    return s;
}

}  // namespace detail

inline void run_constants(RunResult& r) {
    const auto& c = r.config;
    const mpfr_prec_t prec = c.precision_bits;
    StageTimer t("constants");
    std::string& out = r.report;
    if (c.degrees.empty()) {
        const unsigned n = c.n;
        const unsigned long base = 2ul * std::max(4u, n), exp = 2ul * n * n * n * n + 4ul * n * n;
        out += detail::line("linear constants, n = %u", n);
        json rows = json::array();
        for (const auto& e : c.epsilons) {
            auto k = linear_bound_constants(n, e, prec);
            std::string T = detail::power_form(k.T, base, exp);
            out += detail::line("eps = %s", e.get_str().c_str());
            out += detail::line("  T_%u = %s (%zu decimal digits)", n, T.c_str(), k.T.get_str().size());
            out += "  S^(n^2)   = " + fmt_interval(k.sigma) + "\n";
            out += "  K_{n^2}   = " + fmt_interval(k.K) + "\n";
            out += "  zeta(n^2) = " + fmt_interval(k.zeta_n2) + "\n";
            out += "  zeta(n^2-1) = " + fmt_interval(k.zeta_n2m1) + "\n";
            out += "  L(1,n)    = " + fmt_interval(k.L1) + "\n";
            out += "  L'(eps,n) = " + fmt_interval(k.Lprime) + "\n";
            out += "  B(eps,n)  = " + fmt_interval(k.B) + "\n";
            out += "  C(n)      = " + fmt_interval(k.C) + "\n";
            out += "  eps n^(5/2) = " + fmt_interval(k.lead) + "\n";
            rows.push_back({{"eps", e.get_str()}, {"T", T}, {"B", fmt_interval(k.B)}, {"C", fmt_interval(k.C)},
                            {"L1", fmt_interval(k.L1)}, {"Lprime", fmt_interval(k.Lprime)}, {"lead", fmt_interval(k.lead)}});
            r.check("constants.T_" + std::to_string(n) + "(eps=" + e.get_str() + ")", k.B.is_finite() && k.C.is_finite());
        }
        r.results["linear"] = rows;
        r.provenance["B,C,L1,Lprime"] = "linear_bound_constants(n, eps)";
    } else {
        out += "nonlinear constants, degrees =";
        for (unsigned d : c.degrees) out += " " + std::to_string(d);
        out += "\n";
        json rows = json::array();
        for (const auto& e : c.epsilons) {
            auto k = nonlinear_bound_constants(c.degrees, e, prec);
            const unsigned long base = std::max(8ul, 4ul * (k.D + 1));
            const unsigned long exp = 4ul * (k.N * k.N + 3ul * (k.n + 2) * (k.n + 2) * (k.N + 1));
            std::string T = detail::power_form(k.T_bar, base, exp);
            out += detail::line("eps = %s", e.get_str().c_str());
            out += detail::line("  N = %u, D = %u, Bezout = %s, c = %s", k.N, k.D, k.bezout.get_str().c_str(), k.c.get_str().c_str());
            out += "  det(Delta)^2 = " + k.det_delta_sq.get_str() + "\n";
            out += "  frak D  = " + fmt_interval(k.frakD) + "\n";
            out += "  T_bar_N = " + T + "\n";
            out += "  G(N)    = " + fmt_interval(k.G) + "\n";
            out += "  F(eps,N) = " + fmt_interval(k.F) + "\n";
            out += "  eps^4 c = " + fmt_interval(k.eps4c) + "\n";
            rows.push_back({{"eps", e.get_str()}, {"N", k.N}, {"c", k.c.get_str()}, {"T_bar", T},
                            {"G", fmt_interval(k.G)}, {"F", fmt_interval(k.F)}, {"eps4c", fmt_interval(k.eps4c)}});
            r.check("constants.nonlinear(eps=" + e.get_str() + ")", k.F.is_finite() && k.G.is_finite());
        }
        r.results["nonlinear"] = rows;
        r.provenance["G,F,eps4c"] = "nonlinear_bound_constants(degrees, eps)";
    }
    r.stages.push_back(t.finish());
}

inline std::string census_report_text(const census::CensusReport& rep, const std::vector<census::CountingRow>& counting) {
    const bool linear = rep.spec.kind == census::CensusKind::linear;
    std::string out;
    if (linear)
        out += detail::line("linear census: n = %u, H = %s", rep.spec.n, rep.spec.H.get_str().c_str());
    else
        out += detail::line("binary-form census: d = %u, H = %s", rep.spec.degrees[0], rep.spec.H.get_str().c_str());
    out += detail::line("points N(1,H) = %llu, visible = %llu, projective = %s, %.3f s", static_cast<unsigned long long>(rep.N1),
                        static_cast<unsigned long long>(rep.visible1), rep.Ncal1.get_str().c_str(), rep.wall_seconds);
    out += detail::line("%-10s %12s %12s %14s %14s %14s %s", "eps", "N", "Ncal", "tail", "lead", "bound", "");
    for (const auto& row : rep.rows) {
        std::string tail = fmt(row.empirical_tail);
        if (row.Ncal_uncertain > 0) tail += ".." + fmt(row.empirical_tail_upper);
        out += detail::line("%-10s %12llu %12s %14s %14s %14s %s", row.epsilon.get_str().c_str(), static_cast<unsigned long long>(row.N),
                            row.Ncal.get_str().c_str(), tail.c_str(), fmt_upper(row.lead).c_str(), fmt_upper(row.bound).c_str(),
                            row.vacuous ? "vacuous" : "");
    }
    if (!rep.k_tail.empty()) {
        out += "k(M) tails:\n";
        for (const auto& k : rep.k_tail) {
            double w = 1.0 / std::sqrt(32.0 * k.r.get_d());
            if (k.reference > 0)
                out += detail::line("  Pr[k < w n^(5/2)], w = %-6g empirical %.6f vs 1 - 2/w = %.6f", w, 1.0 - k.empirical_tail,
                                    1.0 - k.reference);
            else
                out += detail::line("  %-14s r = %-10s tail %.6f", k.label.c_str(), k.r.get_str().c_str(), k.empirical_tail);
        }
    }
    if (!counting.empty()) {
        const auto& c = counting.back();
        out += detail::line("projective count vs volume at h = %lld: |Ncal - Vol/(u zeta)| = %s <= %s, margin %s: %s", c.h,
                            c.proj_lhs.upper_str(8).c_str(), c.proj_rhs.lower_str(8).c_str(), c.proj_margin.lower_str(8).c_str(),
                            detail::pass_word(c.proj_holds).c_str());
        if (c.all_checked)
            out += detail::line("all-point count vs volume at h = %lld: |N - Vol| = %s <= %s: %s", c.h, c.all_lhs.upper_str(8).c_str(),
                                c.all_rhs.lower_str(8).c_str(), detail::pass_word(c.all_holds).c_str());
    }
    return out;
}

inline void run_census_experiment(RunResult& r, bool nonlinear) {
    const auto& cfg = r.config;
    auto spec = detail::census_spec(cfg, nonlinear);
    StageTimer t1("enumerate");
    census::CensusReport rep = census::run_census(spec);
    t1.stage().counts = {{"N1", rep.N1}, {"visible1", rep.visible1}, {"Ncal1", rep.Ncal1.get_str()},
                         {"refined_points", rep.refined_points}, {"max_precision_used", rep.max_precision_used}};
    r.stages.push_back(t1.finish());

    StageTimer t2("mobius");
    auto checks = census::mobius_inversion_checks(rep);
    bool all_hold = true;
    for (const auto& m : checks) {
        if (!m.holds) r.check("mobius", false, m.failed_identity + " at T = " + std::to_string(m.T));
        all_hold = all_hold && m.holds;
    }
    if (all_hold) r.check("mobius", true, std::to_string(checks.size()) + " histograms");
    t2.stage().counts = {{"histograms", checks.size()}};
    r.stages.push_back(t2.finish());

    StageTimer t3("counting");
    std::vector<census::CountingRow> counting = census::counting_rows(rep, cfg.precision_bits);
    bool all_ok = true, proj_ok = true;
    for (const auto& c : counting) {
        all_ok = all_ok && (!c.all_checked || c.all_holds);
        proj_ok = proj_ok && c.proj_holds;
    }
    if (!nonlinear) r.check("count.all_vs_volume", all_ok, "h = 1.." + std::to_string(counting.size()));
    r.check("count.projective_vs_volume", proj_ok, "h = 1.." + std::to_string(counting.size()));
    t3.stage().counts = {{"radii", counting.size()}};
    r.stages.push_back(t3.finish());

    const std::string stem = to_string(cfg.experiment);
    Csv csv({"epsilon", "N", "Ncal", "empirical_tail", "bound", "vacuous"});
    json rows = json::array(), bands = json::array();
    for (const auto& row : rep.rows) {
        csv.row({row.epsilon.get_str(), std::to_string(row.N), row.Ncal.get_str(), fmt(row.empirical_tail), fmt_upper(row.bound),
                 row.vacuous ? "1" : "0"});
        rows.push_back({{"epsilon", row.epsilon.get_str()}, {"N", row.N}, {"visible", row.visible}, {"Ncal", row.Ncal.get_str()},
                        {"empirical_tail", row.empirical_tail}, {"lead", fmt_interval(row.lead)}, {"bound", fmt_interval(row.bound)},
                        {"vacuous", row.vacuous}});
        bands.push_back({{"epsilon", row.epsilon.get_str()}, {"N_uncertain", row.N_uncertain},
                         {"Ncal_uncertain", row.Ncal_uncertain.get_str()},
                         {"tail", {row.empirical_tail, row.empirical_tail_upper}}});
    }
    r.files.emplace_back(stem + ".csv", csv.str());
    r.results["rows"] = rows;
    r.results["N1"] = rep.N1;
    r.results["visible1"] = rep.visible1;
    r.results["Ncal1"] = rep.Ncal1.get_str();
    r.uncertainty["rows"] = bands;
    if (nonlinear) {
        r.provenance["bound"] = "nonlinear_bound_constants(degrees, eps).nonlinear_tail_bound(H) = eps^4 c + F/(H/zeta(2N+2) - G)";
        r.provenance["lead"] = "nonlinear_bound_constants(degrees, eps).eps4c";
        r.provenance["Ncal"] = "C-visible points / 4 (units of Z[i])";
    } else {
        r.provenance["bound"] = "linear_bound_constants(n, eps).linear_tail_bound(H) = eps n^{5/2} + B/(H - C)";
        r.provenance["lead"] = "linear_bound_constants(n, eps).lead";
        r.provenance["Ncal"] = "visible points / 2 (units +-1)";
    }
    r.provenance["vacuous"] = "1 unless the bound enclosure is certainly below 1";

    if (!rep.k_tail.empty()) {
        Csv k({"label", "r", "N", "Ncal", "empirical_tail", "reference"});
        for (const auto& row : rep.k_tail)
            k.row({row.label, row.r.get_str(), std::to_string(row.N), row.Ncal.get_str(), fmt(row.empirical_tail), fmt(row.reference)});
        r.files.emplace_back(stem + "_ktail.csv", k.str());
    }
    if (!counting.empty()) {
        Csv k({"h", "N", "visible", "all_lhs", "all_rhs", "all_holds", "proj_lhs", "proj_rhs", "proj_holds"});
        for (const auto& c : counting)
            k.row({std::to_string(c.h), std::to_string(c.N), std::to_string(c.visible), c.all_checked ? c.all_lhs.upper_str(12) : "",
                   c.all_checked ? c.all_rhs.lower_str(12) : "", c.all_checked ? (c.all_holds ? "1" : "0") : "",
                   c.proj_lhs.upper_str(12), c.proj_rhs.lower_str(12), c.proj_holds ? "1" : "0"});
        r.files.emplace_back(stem + "_counting.csv", k.str());
        if (nonlinear) {
            r.provenance["proj_rhs"] = "nonlinear_bound_constants(degrees, 1).Lbar1 h^{2N+1} + h/4";
        } else {
            r.provenance["all_rhs"] = "sigma_constant(n^2) h^{n^2-1}";
            r.provenance["proj_rhs"] = "linear_bound_constants(n, 1).L1 h^{n^2-1} + h/2";
        }
    }
    r.report += census_report_text(rep, counting);
}

inline void run_davenport(RunResult& r) {
    const auto& cfg = r.config;
    const unsigned m = cfg.n;
    const long Hmax = cfg.H.get_num().get_si();
    StageTimer t("davenport");
    Csv csv({"dim", "H", "count", "volume", "bound", "discrepancy", "pass"});
    bool all = true;
    std::uint64_t points = 0;
    for (long h = 1; h <= Hmax; ++h) {
        Rational H(h);
        auto rec = census::davenport_check(census::ball_region(m, H), 1, census::ball_projections(m, H, cfg.precision_bits));
        all = all && rec.pass;
        points += rec.count;
        csv.row({std::to_string(m), std::to_string(h), std::to_string(rec.count), fmt(rec.volume.mid()),
                 rec.bound.lower_str(12), rec.discrepancy.upper_str(12), rec.pass ? "1" : "0"});
        if (!rec.pass) r.report += detail::line("dim %u, H = %ld: count %llu, |N - Vol| = %s > %s: FAIL", m, h,
                                                static_cast<unsigned long long>(rec.count), rec.discrepancy.upper_str(8).c_str(),
                                                rec.bound.lower_str(8).c_str());
    }
    r.report += detail::line("lattice points in the %u-ball, H = 1..%ld: %s", m, Hmax, detail::pass_word(all).c_str());
    r.check("davenport.dim" + std::to_string(m), all, "H = 1.." + std::to_string(Hmax));
    r.files.emplace_back("davenport.csv", csv.str());
    r.provenance["bound"] = "sum_{l<m} C(m,l) ball_volume_K(l) H^l, h(R) = 1";
    r.provenance["volume"] = "ball_volume_K(m) H^m";
    t.stage().counts = {{"points", points}};
    r.stages.push_back(t.finish());
}

inline std::string point_text(const std::vector<GaussRational>& z) {
    std::string s;
    for (std::size_t k = 0; k < z.size(); ++k) s += (k ? ":" : "") + to_string(z[k]);
    return s;
}

inline newton::ZeroPoint resolve_zero(const newton::AffineSystem& f, const ExperimentConfig& cfg, const std::vector<GaussRational>& z) {
    const mpfr_prec_t prec = cfg.precision_bits;
    if (!cfg.zeta.empty()) return newton::ZeroPoint::exact_point(f, parse_point(cfg.zeta), prec);
    if (f.n() != 1) throw ConfigError("newton-cert: --zeta is required when n > 1");
    auto zs = newton::univariate_zeros(f, prec);
    if (zs.empty()) throw std::runtime_error("newton-cert: f has no simple zero");
    auto dist = [&](const newton::ZeroPoint& p) {
        double dr = z[0].re.get_d() - p.box[0].re.mid(), di = z[0].im.get_d() - p.box[0].im.mid();
        return dr * dr + di * di;
    };
    std::size_t best = 0;
    for (std::size_t k = 1; k < zs.size(); ++k)
        if (dist(zs[k]) < dist(zs[best])) best = k;
    return zs[best];
}

inline void run_newton_cert(RunResult& r) {
    const auto& cfg = r.config;
    StageTimer t("certify");
    auto f = newton::dehomogenize(polysys::parse_system(cfg.system));
    auto z = parse_point(cfg.point);
    if (static_cast<int>(z.size()) != f.n()) throw ConfigError("newton-cert: point dimension does not match the system");
    auto zeta = resolve_zero(f, cfg, z);
    auto cert = newton::certify_approx_zero(f, zeta, z, cfg.steps);
    auto gm = newton::gamma_vs_mu_bound_check(f, zeta);
    std::string& out = r.report;
    out += "gamma(f, zeta) <= " + cert.gamma.upper.upper_str(12) + "\n";
    out += "radius (3 - sqrt 7)/(2 gamma) >= " + cert.radius.lower_str(12) + "\n";
    out += "||z - zeta|| = " + fmt_interval(cert.distance) + "\n";
    out += std::string("approximate zero: ") + (cert.certified ? "certified" : "not certified") +
           (cert.diagnostic.empty() ? "" : " (" + cert.diagnostic + ")") + "\n";
    Csv csv({"k", "residual", "distance", "allowed", "within"});
    for (std::size_t k = 0; k < cert.iterates.size(); ++k) {
        const auto& it = cert.iterates[k];
        csv.row({std::to_string(k), fmt(it.residual), it.distance.upper_str(12), it.allowed.lower_str(12), it.within ? "1" : "0"});
        out += detail::line("  z_%zu: |f| = %-12s ||z_k - zeta|| <= %-14s allowed %-14s %s", k, fmt(it.residual).c_str(),
                            it.distance.upper_str(6).c_str(), it.allowed.lower_str(6).c_str(), it.within ? "ok" : "VIOLATED");
    }
    out += "gamma <= D^(3/2) mu_norm / 2: " + gm.gamma.upper_str(8) + " <= " + gm.rhs.lower_str(8) + ": " + detail::pass_word(gm.holds) + "\n";
    r.check("gamma_vs_mu", gm.holds);
    if (cert.certified) r.check("quadratic_convergence", cert.convergence_ok, cert.diagnostic);
    r.files.emplace_back("newton_cert.csv", csv.str());
    r.results = {{"certified", cert.certified}, {"convergence_ok", cert.convergence_ok},
                 {"gamma", fmt_interval(cert.gamma.upper)}, {"radius", fmt_interval(cert.radius)},
                 {"distance", fmt_interval(cert.distance)}, {"point", point_text(z)}};
    if (zeta.exact) r.results["zeta"] = point_text(*zeta.exact);
    r.provenance["gamma"] = "gamma_quantity(f, zeta): Frobenius bound on ||Df^{-1} D^k f / k!||";
    t.stage().counts = {{"iterates", cert.iterates.size()}};
    r.stages.push_back(t.finish());
}

inline void run_precision_census(RunResult& r) {
    const auto& cfg = r.config;
    const mpfr_prec_t prec = cfg.precision_bits;
    auto f = newton::dehomogenize(polysys::parse_system(cfg.system));
    auto zeta = newton::ZeroPoint::exact_point(f, parse_point(cfg.zeta), prec);
    auto g = newton::gamma_quantity(f, zeta);
    if (!g.exact_square) throw ConfigError("precision-census: gamma must be exact (degree <= 2 and an exact zero)");
    StageTimer t1("disc_census");
    auto cen = newton::approx_zero_census(*zeta.exact, *g.exact_square, cfg.m_max, false, prec);
    auto chk = newton::approx_zero_structure_check(cen, static_cast<unsigned>(f.n()), prec);
    std::uint64_t total = 0;
    for (const auto& row : cen.rows) total += row.all;
    t1.stage().counts = {{"m_max", cfg.m_max}, {"points", total}};
    r.stages.push_back(t1.finish());
    Csv csv({"m", "N_m", "dividing", "lower", "upper"});
    for (std::size_t k = 0; k < cen.rows.size(); ++k)
        csv.row({std::to_string(cen.rows[k].m), std::to_string(cen.rows[k].exact), std::to_string(cen.rows[k].all),
                 chk.lower[k].lower_str(12), chk.upper[k].upper_str(12)});
    r.files.emplace_back("precision_census.csv", csv.str());
    std::string& out = r.report;
    out += "gamma^2 = " + g.exact_square->get_str() + "\n";
    out += "H1 = sqrt(gamma/(3 - sqrt 7)) in " + fmt_interval(cen.H1) + ", H2 = gamma/(3 - sqrt 7) in " + fmt_interval(cen.H2) + "\n";
    out += detail::line("(i)   at most one point below H1:          %s", detail::pass_word(chk.item_i).c_str());
    out += detail::line("(ii)  N_m <= 1 on the middle range %ld..%ld: %s", chk.middle_first, chk.middle_last,
                        detail::pass_word(chk.item_ii).c_str());
    out += detail::line("(iii) volume sandwich for m <= %ld:        %s", cfg.m_max, detail::pass_word(chk.item_iii).c_str());
    out += detail::line("gap principle below H2:                    %s", detail::pass_word(chk.gap_principle).c_str());
    r.check("precision.item_i", chk.item_i);
    r.check("precision.item_ii", chk.item_ii, std::to_string(chk.middle_first) + ".." + std::to_string(chk.middle_last));
    r.check("precision.item_iii", chk.item_iii, chk.first_failure_m < 0 ? "" : "first failure m = " + std::to_string(chk.first_failure_m));
    r.check("precision.gap_principle", chk.gap_principle);

    StageTimer t2("precision_witness");
    auto pw = newton::approx_zero_precision(f, zeta, cfg.log_base, prec);
    out += "precision threshold " + fmt_interval(pw.threshold) + " -> p = " + std::to_string(pw.p) + ", z = " + point_text(pw.z) +
           (pw.exact_precision ? " (Pr(z) = p)" : " (Pr(z) < p)") + (pw.certified ? ", certified" : ", NOT certified") + "\n";
    r.check("precision.witness_certified", pw.certified, pw.diagnostic);
    t2.stage().counts = {{"p", pw.p}};
    r.stages.push_back(t2.finish());
    r.results = {{"gamma_sq", g.exact_square->get_str()}, {"H1", fmt_interval(cen.H1)}, {"H2", fmt_interval(cen.H2)},
                 {"middle", {chk.middle_first, chk.middle_last}}, {"p", pw.p}, {"witness", point_text(pw.z)}};
    r.provenance["lower,upper"] = "ball_volume_K(2n) (r_m -+ sqrt(2n))^{2n}, r_m = m (3 - sqrt 7)/(2 gamma)";
}

// Small instances of every declared check; the exit status is their conjunction.
inline void run_check_all(RunResult& r) {
    const auto base = r.config;
    auto sub = [&](Experiment e, auto&& tweak, auto&& body) {
        RunResult s;
        s.config = base;
        s.config.experiment = e;
        tweak(s.config);
        s.config.validate();
        body(s);
        for (auto& a : s.assertions) {
            r.report += detail::line("%-34s %s %s", (to_string(e) + ":" + a.name).c_str(), detail::pass_word(a.pass).c_str(), a.detail.c_str());
            a.name = to_string(e) + ":" + a.name;
            r.assertions.push_back(a);
        }
        for (auto& st : s.stages) {
            st.name = to_string(e) + ":" + st.name;
            r.stages.push_back(st);
        }
    };
    {
        StageTimer t("constants");
        bool artin = artin_estimate_check(50, base.precision_bits);
        Interval z2 = zeta(2, base.precision_bits), z4 = zeta(4, base.precision_bits);
        Interval pi = Interval::pi(2 * base.precision_bits);
        bool zc = z2.contains(pi.square() / 6L) && z4.contains(pi.pow(4) / 90L);
        auto k2 = linear_bound_constants(2, make_rational(1, 20), base.precision_bits);
        bool t2 = k2.T == ipow(Integer(8), 48);
        r.check("constants:artin_m<=50", artin);
        r.check("constants:zeta_contains_pi", zc);
        r.check("constants:T_2=8^48", t2);
        r.report += detail::line("%-34s %s", "constants:artin_m<=50", detail::pass_word(artin).c_str());
        r.report += detail::line("%-34s %s", "constants:zeta_contains_pi", detail::pass_word(zc).c_str());
        r.report += detail::line("%-34s %s", "constants:T_2=8^48", detail::pass_word(t2).c_str());
        r.stages.push_back(t.finish());
    }
    sub(Experiment::census_linear, [](ExperimentConfig& c) { c.n = 2; c.H = 10; c.epsilons = {make_rational(1, 10), Rational(1)}; },
        [](RunResult& s) { run_census_experiment(s, false); });
    sub(Experiment::census_poly, [](ExperimentConfig& c) { c.degrees = {2}; c.H = 4; c.epsilons = {make_rational(1, 2), Rational(1)}; },
        [](RunResult& s) { run_census_experiment(s, true); });
    sub(Experiment::davenport, [](ExperimentConfig& c) { c.n = 2; c.H = 50; }, [](RunResult& s) { run_davenport(s); });
    sub(Experiment::davenport, [](ExperimentConfig& c) { c.n = 3; c.H = 10; }, [](RunResult& s) { run_davenport(s); });
    sub(Experiment::newton_cert, [](ExperimentConfig& c) { c.system = "degrees: 2\nX1^2 - X0^2\n"; c.point = "11/10"; c.zeta = "1"; },
        [](RunResult& s) { run_newton_cert(s); });
    sub(Experiment::precision_census, [](ExperimentConfig& c) { c.system = "degrees: 2\nX1^2 - X0^2\n"; c.zeta = "1"; c.m_max = 60; },
        [](RunResult& s) { run_precision_census(s); });
}

inline RunResult run(const ExperimentConfig& cfg) {
    cfg.validate();
    RunResult r;
    r.config = cfg;
    switch (cfg.experiment) {
        case Experiment::constants: run_constants(r); break;
        case Experiment::census_linear: run_census_experiment(r, false); break;
        case Experiment::census_poly: run_census_experiment(r, true); break;
        case Experiment::tail_report: run_census_experiment(r, !cfg.degrees.empty()); break;
        case Experiment::davenport: run_davenport(r); break;
        case Experiment::newton_cert: run_newton_cert(r); break;
        case Experiment::precision_census: run_precision_census(r); break;
        case Experiment::check_all: run_check_all(r); break;
    }
    return r;
}

}  // namespace ratcond::cli
