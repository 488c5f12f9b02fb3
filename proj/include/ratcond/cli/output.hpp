#pragma once

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "ratcond/cli/config.hpp"
#include "ratcond/exact/interval.hpp"

namespace ratcond::cli {

inline std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline std::string fmt_upper(const Interval& x) { return x.is_finite() ? x.upper_str(12) : "inf"; }
inline std::string fmt_interval(const Interval& x, int digits = 12) { return x.str(digits); }

// Comma-separated table with a mandatory header; fields never contain commas.
class Csv {
public:
    explicit Csv(std::vector<std::string> header) : width_(header.size()) { line(header); }

    void row(const std::vector<std::string>& fields) {
        if (fields.size() != width_) throw std::logic_error("csv: row width does not match the header");
        line(fields);
    }
    const std::string& str() const { return text_; }

private:
    std::size_t width_;
    std::string text_;

    void line(const std::vector<std::string>& fields) {
        for (std::size_t k = 0; k < fields.size(); ++k) {
            if (fields[k].find_first_of(",\n\r\"") != std::string::npos) throw std::logic_error("csv: field needs quoting");
            text_ += (k ? "," : "") + fields[k];
        }
        text_ += '\n';
    }
};

struct Stage {
    std::string name;
    json counts = json::object();
    double seconds = 0;
};

class StageTimer {
public:
    explicit StageTimer(std::string name) { stage_.name = std::move(name); }
    Stage& stage() { return stage_; }
    Stage finish() {
        stage_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
        return std::move(stage_);
    }

private:
    Stage stage_;
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

struct Assertion {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RunResult {
    ExperimentConfig config;
    std::vector<Stage> stages;
    std::vector<Assertion> assertions;
    json results = json::object();        // nested per-experiment values
    json uncertainty = json::object();    // bands from enclosures that straddled a threshold
    json provenance = json::object();     // column -> exact-arith operation that produced it
    std::vector<std::pair<std::string, std::string>> files;  // name, CSV text
    std::string report;

    bool pass() const {
        for (const auto& a : assertions)
            if (!a.pass) return false;
        return true;
    }
    void check(std::string name, bool ok, std::string detail = {}) { assertions.push_back({std::move(name), ok, std::move(detail)}); }

    json manifest() const {
        json m;
        m["version"] = kVersion;
        m["config"] = config.to_json();
        json st = json::array();
        for (const auto& s : stages) st.push_back({{"name", s.name}, {"counts", s.counts}, {"seconds", s.seconds}});
        m["stages"] = st;
        json as = json::array();
        for (const auto& a : assertions) as.push_back({{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
        m["assertions"] = as;
        m["pass"] = pass();
        m["results"] = results;
        m["uncertainty"] = uncertainty;
        m["provenance"] = provenance;
        json fs = json::array();
        for (const auto& f : files) fs.push_back(f.first);
        m["files"] = fs;
        return m;
    }
};

// Writes every CSV plus manifest.json under `dir` (created if missing). Returns the paths written.
inline std::vector<std::string> write_outputs(const RunResult& r, const std::string& dir) {
    std::vector<std::string> paths;
    if (dir.empty()) return paths;
    std::filesystem::create_directories(dir);
    auto put = [&](const std::string& name, const std::string& text) {
        std::filesystem::path p = std::filesystem::path(dir) / name;
        std::ofstream out(p, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + p.string() + "'");
        out << text;
        paths.push_back(p.string());
    };
    for (const auto& [name, text] : r.files) put(name, text);
    put(to_string(r.config.experiment) + "_manifest.json", r.manifest().dump(2) + "\n");
    return paths;
}

}  // namespace ratcond::cli
