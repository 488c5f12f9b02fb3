#pragma once

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "ratcond/exact/integer.hpp"

namespace ratcond::cli {

using nlohmann::json;

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kOutDirEnv = "RATCOND_OUT_DIR";

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Experiment { constants, census_linear, census_poly, tail_report, davenport, newton_cert, precision_census, check_all };

inline const std::vector<std::pair<Experiment, std::string>>& experiment_names() {
    static const std::vector<std::pair<Experiment, std::string>> names{
        {Experiment::constants, "constants"},       {Experiment::census_linear, "census-linear"},
        {Experiment::census_poly, "census-poly"},   {Experiment::tail_report, "tail-report"},
        {Experiment::davenport, "davenport"},       {Experiment::newton_cert, "newton-cert"},
        {Experiment::precision_census, "precision-census"}, {Experiment::check_all, "check-all"}};
    return names;
}

inline std::string to_string(Experiment e) {
    for (const auto& [k, s] : experiment_names())
        if (k == e) return s;
    return "?";
}

inline Experiment parse_experiment(const std::string& s) {
    for (const auto& [k, name] : experiment_names())
        if (name == s) return k;
    throw ConfigError("unknown experiment '" + s + "'");
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        try {
            out.push_back(parse_rational(item));
        } catch (const std::exception& e) {
            throw ConfigError("bad number '" + item + "': " + e.what());
        }
    }
    return out;
}

inline std::vector<unsigned> parse_degree_list(const std::string& text) {
    std::vector<unsigned> out;
    for (const auto& q : parse_rational_list(text)) {
        if (q.get_den() != 1 || q < 1 || q > 64) throw ConfigError("degrees must be integers in [1, 64]");
        out.push_back(static_cast<unsigned>(q.get_num().get_ui()));
    }
    return out;
}

inline std::string join(const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].get_str();
    return s;
}

struct ExperimentConfig {
    Experiment experiment = Experiment::check_all;
    unsigned n = 2;
    std::vector<unsigned> degrees;
    Rational H = 10;
    std::vector<Rational> epsilons;
    std::vector<Rational> headline_w = {2, 4, 8};
    long precision_bits = 128;
    long max_precision = 512;
    std::string out_dir;       // empty: no files written
    unsigned jobs = 1;
    double cap = 1e8;
    double log_base = 2;
    std::string system;        // homogeneous system text (newton-cert, precision-census)
    std::string point;         // affine start point
    std::string zeta;          // exact affine zero
    int steps = 5;
    long m_max = 200;

    bool eps_required() const {
        return experiment == Experiment::constants || experiment == Experiment::census_linear ||
               experiment == Experiment::census_poly || experiment == Experiment::tail_report;
    }

    void validate() const {
        if (eps_required()) {
            if (epsilons.empty()) throw ConfigError("--eps: the epsilon list is empty");
            for (std::size_t j = 0; j < epsilons.size(); ++j) {
                if (epsilons[j] <= 0) throw ConfigError("--eps: epsilons must be positive");
                if (j && epsilons[j] <= epsilons[j - 1]) throw ConfigError("--eps: epsilons must be strictly increasing");
            }
        }
        if (H < 1) throw ConfigError("--H must be >= 1");
        if (precision_bits < 32 || precision_bits > 4096) throw ConfigError("--precision-bits must be in [32, 4096]");
        if (max_precision < 64 || max_precision > 8192) throw ConfigError("max_precision must be in [64, 8192]");
        if (jobs < 1 || jobs > 256) throw ConfigError("--jobs must be in [1, 256]");
        if (!(cap > 0)) throw ConfigError("--cap must be positive");
        if (!(log_base > 1)) throw ConfigError("--log-base must exceed 1");
        if (steps < 0 || steps > 8) throw ConfigError("steps must be in [0, 8]");
        if (m_max < 1 || m_max > 100000) throw ConfigError("m_max must be in [1, 100000]");
        for (const auto& w : headline_w)
            if (w <= 0) throw ConfigError("headline_w must be positive");
        switch (experiment) {
            case Experiment::constants:
                if (degrees.empty() && n < 2) throw ConfigError("constants: --n must be >= 2");
                break;
            case Experiment::census_linear:
                if (n != 2 && n != 3) throw ConfigError("census-linear: --n must be 2 or 3");
                break;
            case Experiment::census_poly:
                if (degrees.size() != 1 || degrees[0] > 3) throw ConfigError("census-poly: --degrees must be a single degree in 1..3");
                break;
            case Experiment::tail_report:
                if (degrees.empty() ? (n != 2 && n != 3) : (degrees.size() != 1 || degrees[0] > 3))
                    throw ConfigError("tail-report: linear n in {2,3} or a single degree in 1..3");
                break;
            case Experiment::davenport:
                if (n < 1 || n > 6) throw ConfigError("davenport: --n (dimension) must be in 1..6");
                if (H.get_den() != 1 || H > 1000) throw ConfigError("davenport: --H must be an integer <= 1000");
                break;
            case Experiment::newton_cert:
                if (system.empty() || point.empty()) throw ConfigError("newton-cert: --system and --point are required");
                break;
            case Experiment::precision_census:
                if (system.empty() || zeta.empty()) throw ConfigError("precision-census: --system and --zeta are required");
                break;
            case Experiment::check_all:
                break;
        }
    }

    json to_json() const {
        json j;
        j["experiment"] = to_string(experiment);
        j["n"] = n;
        j["degrees"] = degrees;
        j["H"] = H.get_str();
        j["eps"] = join(epsilons);
        j["headline_w"] = join(headline_w);
        j["precision_bits"] = precision_bits;
        j["max_precision"] = max_precision;
        j["out"] = out_dir;
        j["jobs"] = jobs;
        j["cap"] = cap;
        j["log_base"] = log_base;
        j["system"] = system;
        j["point"] = point;
        j["zeta"] = zeta;
        j["steps"] = steps;
        j["m_max"] = m_max;
        return j;
    }
};

namespace detail {

inline std::string scalar_text(const json& v, const std::string& key) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_float()) return v.dump();  // shortest round-trip text: 0.1 stays 1/10
    throw ConfigError("config key '" + key + "': expected a number or string");
}

inline std::string list_text(const json& v, const std::string& key) {
    if (!v.is_array()) return scalar_text(v, key);
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + scalar_text(v[k], key);
    return s;
}

}  // namespace detail

// Applies a JSON object on top of `cfg`. Unknown keys are rejected.
inline void apply_json(ExperimentConfig& cfg, const json& j) {
    if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
    static const std::set<std::string> known{"experiment", "n", "degrees", "H", "eps", "headline_w", "precision_bits",
                                             "max_precision", "out", "jobs", "cap", "log_base", "system", "point",
                                             "zeta", "steps", "m_max"};
    for (const auto& [key, v] : j.items())
        if (!known.count(key)) throw ConfigError("config: unknown key '" + key + "'");
    auto integer = [&](const char* key, long lo, long hi) {
        const json& v = j.at(key);
        if (!v.is_number_integer()) throw ConfigError(std::string("config key '") + key + "': expected an integer");
        long x = v.get<long>();
        if (x < lo || x > hi) throw ConfigError(std::string("config key '") + key + "': out of range");
        return x;
    };
    auto real = [&](const char* key) {
        const json& v = j.at(key);
        if (!v.is_number()) throw ConfigError(std::string("config key '") + key + "': expected a number");
        return v.get<double>();
    };
    auto text = [&](const char* key) {
        const json& v = j.at(key);
        if (!v.is_string()) throw ConfigError(std::string("config key '") + key + "': expected a string");
        return v.get<std::string>();
    };
    if (j.contains("experiment")) cfg.experiment = parse_experiment(text("experiment"));
    if (j.contains("n")) cfg.n = static_cast<unsigned>(integer("n", 1, 64));
    if (j.contains("degrees")) cfg.degrees = parse_degree_list(detail::list_text(j.at("degrees"), "degrees"));
    if (j.contains("H")) cfg.H = parse_rational(detail::scalar_text(j.at("H"), "H"));
    if (j.contains("eps")) cfg.epsilons = parse_rational_list(detail::list_text(j.at("eps"), "eps"));
    if (j.contains("headline_w")) cfg.headline_w = parse_rational_list(detail::list_text(j.at("headline_w"), "headline_w"));
    if (j.contains("precision_bits")) cfg.precision_bits = integer("precision_bits", 1, 1 << 20);
    if (j.contains("max_precision")) cfg.max_precision = integer("max_precision", 1, 1 << 20);
    if (j.contains("out")) cfg.out_dir = text("out");
    if (j.contains("jobs")) cfg.jobs = static_cast<unsigned>(integer("jobs", 1, 1 << 20));
    if (j.contains("cap")) cfg.cap = real("cap");
    if (j.contains("log_base")) cfg.log_base = real("log_base");
    if (j.contains("system")) cfg.system = text("system");
    if (j.contains("point")) cfg.point = text("point");
    if (j.contains("zeta")) cfg.zeta = text("zeta");
    if (j.contains("steps")) cfg.steps = static_cast<int>(integer("steps", -1000, 1000));
    if (j.contains("m_max")) cfg.m_max = integer("m_max", -1000000, 1000000000);
}

inline ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
    apply_json(base, j);
    return base;
}

// Output directory: --out, else the environment variable, else none.
inline std::string resolve_out_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv(kOutDirEnv)) return env;
    return {};
}

}  // namespace ratcond::cli
