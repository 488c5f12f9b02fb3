#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ratcond/cli/run.hpp"

using namespace ratcond;
using namespace ratcond::cli;

namespace {

// Exit codes: 0 every declared assertion passed, 1 an assertion failed, 2 invalid configuration,
// 3 resource cap exceeded, 4 other runtime error.
struct Flags {
    std::string n, degrees, H, eps, precision_bits, out, jobs, cap, config, log_base, system, system_file, point, zeta, steps, m_max;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

long parse_long(const std::string& s, const char* flag) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(std::string(flag) + ": expected an integer, got '" + s + "'");
    }
}

double parse_double(const std::string& s, const char* flag) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(std::string(flag) + ": expected a number, got '" + s + "'");
    }
}

// Flags override the config file, which overrides the defaults.
ExperimentConfig build_config(Experiment e, const Flags& f, const std::vector<std::string>& given) {
    ExperimentConfig c;
    c.experiment = e;
    if (!f.config.empty()) c = load_config_file(f.config, c);
    if (c.experiment != e) throw ConfigError("config file names experiment '" + to_string(c.experiment) + "'");
    auto has = [&](const char* name) { return std::find(given.begin(), given.end(), name) != given.end(); };
    if (has("--n")) c.n = static_cast<unsigned>(parse_long(f.n, "--n"));
    if (has("--degrees")) c.degrees = parse_degree_list(f.degrees);
    if (has("--H")) c.H = parse_rational(f.H);
    if (has("--eps")) c.epsilons = parse_rational_list(f.eps);
    if (has("--precision-bits")) c.precision_bits = parse_long(f.precision_bits, "--precision-bits");
    if (has("--out")) c.out_dir = f.out;
    if (has("--jobs")) c.jobs = static_cast<unsigned>(parse_long(f.jobs, "--jobs"));
    if (has("--cap")) c.cap = parse_double(f.cap, "--cap");
    if (has("--log-base")) c.log_base = parse_double(f.log_base, "--log-base");
    if (has("--system")) c.system = f.system;
    if (has("--system-file")) c.system = read_file(f.system_file);
    if (has("--point")) c.point = f.point;
    if (has("--zeta")) c.zeta = f.zeta;
    if (has("--steps")) c.steps = static_cast<int>(parse_long(f.steps, "--steps"));
    if (has("--m-max")) c.m_max = parse_long(f.m_max, "--m-max");
    // "\n" escapes let a one-line --system carry the degree header and the polynomials.
    for (std::size_t p; (p = c.system.find("\\n")) != std::string::npos;) c.system.replace(p, 2, "\n");
    c.out_dir = resolve_out_dir(c.out_dir);
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice censuses, condition-number tails and certified Newton checks"};
    app.require_subcommand(1);
    Flags f;
    std::vector<std::pair<CLI::App*, Experiment>> subs;
    const std::vector<std::pair<Experiment, std::string>> help{
        {Experiment::constants, "Print the bound constants (T_n, B, C, L, L') as enclosures"},
        {Experiment::census_linear, "Exhaustive census of integer n x n matrices in the Frobenius ball"},
        {Experiment::census_poly, "Exhaustive census of Gaussian-integer binary forms in the Delta ball"},
        {Experiment::tail_report, "Census plus the empirical-tail vs bound table"},
        {Experiment::davenport, "Lattice points in balls of dimension --n vs the projection bound, H = 1..--H"},
        {Experiment::newton_cert, "Certify an approximate zero and check quadratic convergence"},
        {Experiment::precision_census, "Count Gauss-rational approximate zeros by denominator"},
        {Experiment::check_all, "Run small instances of every declared check"}};
    for (const auto& [e, text] : help) {
        CLI::App* s = app.add_subcommand(to_string(e), text);
        s->add_option("--n", f.n, "Matrix size (census) or dimension (davenport)");
        s->add_option("--degrees", f.degrees, "Comma list of degrees");
        s->add_option("--H", f.H, "Height bound (rational)");
        s->add_option("--eps", f.eps, "Comma list of epsilons (rational or decimal)");
        s->add_option("--precision-bits", f.precision_bits, "Interval precision in bits");
        s->add_option("--out", f.out, std::string("Output directory (default $") + kOutDirEnv + ")");
        s->add_option("--jobs", f.jobs, "Worker threads for censuses");
        s->add_option("--cap", f.cap, "Maximum predicted enumeration size");
        s->add_option("--config", f.config, "JSON config file; unknown keys are rejected");
        s->add_option("--log-base", f.log_base, "Logarithm base of the precision threshold");
        s->add_option("--system", f.system, "Homogeneous system text, e.g. 'degrees: 2\\nX1^2 - X0^2'");
        s->add_option("--system-file", f.system_file, "File holding the system text");
        s->add_option("--point", f.point, "Affine start point a:b:... (Gauss rationals)");
        s->add_option("--zeta", f.zeta, "Exact affine zero a:b:...");
        s->add_option("--steps", f.steps, "Newton iterates to check");
        s->add_option("--m-max", f.m_max, "Largest denominator in the precision census");
        subs.emplace_back(s, e);
    }
    CLI11_PARSE(app, argc, argv);

    for (const auto& [s, e] : subs) {
        if (!s->parsed()) continue;
        std::vector<std::string> given;
        for (const CLI::Option* o : s->get_options())
            if (o->count() > 0) given.push_back(o->get_name());
        try {
            ExperimentConfig cfg = build_config(e, f, given);
            RunResult r = run(cfg);
            std::cout << r.report;
            for (const auto& p : write_outputs(r, cfg.out_dir)) std::cout << "wrote " << p << "\n";
            if (cfg.out_dir.empty())
                for (const auto& [name, text] : r.files)
                    if (e == Experiment::census_linear || e == Experiment::census_poly) std::cout << "--- " << name << "\n" << text;
            std::cout << (r.pass() ? "all assertions passed" : "ASSERTION FAILED") << "\n";
            return r.pass() ? 0 : 1;
        } catch (const ConfigError& ex) {
            std::cerr << "invalid configuration: " << ex.what() << "\n";
            return 2;
        } catch (const census::ResourceCapExceeded& ex) {
            std::cerr << "resource cap exceeded: " << ex.what() << "\n";
            return 3;
        } catch (const std::invalid_argument& ex) {
            std::cerr << "invalid input: " << ex.what() << "\n";
            return 2;
        } catch (const std::exception& ex) {
            std::cerr << "error: " << ex.what() << "\n";
            return 4;
        }
    }
    return 2;
}
