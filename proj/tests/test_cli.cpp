#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ratcond/cli/run.hpp"

using namespace ratcond;
using namespace ratcond::cli;

namespace {

ExperimentConfig config(Experiment e) {
    ExperimentConfig c;
    c.experiment = e;
    return c;
}

struct Proc {
    int code = -1;
    std::string out;
};

// Runs the CLI binary with stderr folded into stdout.
Proc run_cli(const std::string& args, const std::string& env = {}) {
    std::string cmd = env + (env.empty() ? "" : " ") + std::string(RATCOND_CLI_PATH) + " " + args + " 2>&1";
    Proc p;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return p;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, f)) > 0) p.out.append(buf, k);
    int status = pclose(f);
    p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return p;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path fresh_dir(const std::string& name) {
    auto d = std::filesystem::temp_directory_path() / ("ratcond_test_" + name + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(d);
    return d;
}

}  // namespace

TEST(Config, Validation) {
    auto c = config(Experiment::census_linear);
    EXPECT_THROW(c.validate(), ConfigError);  // empty epsilon list
    c.epsilons = {make_rational(1, 2), make_rational(1, 4)};
    EXPECT_THROW(c.validate(), ConfigError);  // not increasing
    c.epsilons = {make_rational(1, 4), make_rational(1, 2)};
    EXPECT_NO_THROW(c.validate());
    c.n = 5;
    EXPECT_THROW(c.validate(), ConfigError);
    c.n = 2;
    c.H = make_rational(1, 2);
    EXPECT_THROW(c.validate(), ConfigError);
    auto p = config(Experiment::census_poly);
    p.epsilons = {Rational(1)};
    p.degrees = {4};
    EXPECT_THROW(p.validate(), ConfigError);
    auto d = config(Experiment::davenport);
    EXPECT_NO_THROW(d.validate());
}

TEST(Config, ListsAndExperimentNames) {
    auto v = parse_rational_list("0.05, 1/10,1");
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v[0], make_rational(1, 20));
    EXPECT_EQ(v[1], make_rational(1, 10));
    EXPECT_TRUE(parse_rational_list("").empty());
    EXPECT_EQ(parse_degree_list("2,3"), (std::vector<unsigned>{2, 3}));
    for (const auto& [e, name] : experiment_names()) EXPECT_EQ(parse_experiment(name), e);
    EXPECT_THROW(parse_experiment("bogus"), ConfigError);
}

TEST(Config, JsonKeys) {
    ExperimentConfig c = config(Experiment::census_linear);
    apply_json(c, json::parse(R"({"n": 3, "H": "5/2", "eps": [0.1, "1/2"], "jobs": 2})"));
    EXPECT_EQ(c.n, 3u);
    EXPECT_EQ(c.H, make_rational(5, 2));
    EXPECT_EQ(c.epsilons, (std::vector<Rational>{make_rational(1, 10), make_rational(1, 2)}));
    EXPECT_EQ(c.jobs, 2u);
    EXPECT_THROW(apply_json(c, json::parse(R"({"colour": 1})")), ConfigError);
    EXPECT_THROW(apply_json(c, json::parse(R"({"n": "two"})")), ConfigError);
    EXPECT_THROW(apply_json(c, json::parse("[1, 2]")), ConfigError);
    // the echoed config loads back to the same values
    ExperimentConfig d = config(Experiment::census_linear);
    apply_json(d, c.to_json());
    EXPECT_EQ(d.to_json(), c.to_json());
}

TEST(Csv, FormatRules) {
    Csv csv({"a", "b"});
    csv.row({"1", "2"});
    EXPECT_EQ(csv.str(), "a,b\n1,2\n");
    EXPECT_THROW(csv.row({"1"}), std::logic_error);
    EXPECT_THROW(csv.row({"x,y", "2"}), std::logic_error);
}

TEST(Run, CensusRowAndVacuousFlag) {
    auto c = config(Experiment::census_linear);
    c.H = 10;
    c.epsilons = {make_rational(1, 2), Rational(1)};
    RunResult r = run(c);
    EXPECT_TRUE(r.pass());
    ASSERT_FALSE(r.files.empty());
    const std::string& csv = r.files[0].second;
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "epsilon,N,Ncal,empirical_tail,bound,vacuous");
    EXPECT_NE(csv.find("\n1/2,43225,19904,"), std::string::npos);
    EXPECT_NE(csv.find("\n1,49689,22912,1,"), std::string::npos);
    EXPECT_EQ(csv.substr(csv.rfind(',') + 1), "1\n");
    EXPECT_EQ(csv.find('\r'), std::string::npos);
    // every bound column has a provenance entry
    EXPECT_TRUE(r.provenance.contains("bound"));
}

TEST(Run, Deterministic) {
    auto c = config(Experiment::census_poly);
    c.degrees = {2};
    c.H = 3;
    c.epsilons = {make_rational(3, 10), Rational(1)};
    RunResult a = run(c);
    c.jobs = 3;
    RunResult b = run(c);
    ASSERT_EQ(a.files.size(), b.files.size());
    for (std::size_t k = 0; k < a.files.size(); ++k) EXPECT_EQ(a.files[k], b.files[k]);
}

TEST(Run, ConstantsReport) {
    auto c = config(Experiment::constants);
    c.n = 2;
    c.epsilons = {make_rational(1, 20)};
    RunResult r = run(c);
    EXPECT_TRUE(r.pass());
    EXPECT_NE(r.report.find("8^48"), std::string::npos);
}

TEST(Run, InvalidConfigRejectedBeforeWork) {
    auto c = config(Experiment::tail_report);
    EXPECT_THROW(run(c), ConfigError);
}

TEST(Binary, ExitCodes) {
    EXPECT_EQ(run_cli("constants --n 2 --eps 0.05").code, 0);
    auto empty = run_cli("census-linear --n 2 --H 3 --eps ''");
    EXPECT_EQ(empty.code, 2) << empty.out;
    EXPECT_EQ(run_cli("census-linear --n 7 --eps 0.5").code, 2);
    EXPECT_EQ(run_cli("census-linear --n 3 --H 40 --eps 0.5 --cap 1000").code, 3);
    EXPECT_NE(run_cli("no-such-command").code, 0);
    auto nc = run_cli("newton-cert --system 'degrees: 2\\nX1^2 - X0^2' --point 11/10 --zeta 1");
    EXPECT_EQ(nc.code, 0) << nc.out;
    auto bad = run_cli("newton-cert --system 'degrees: 2\\nX1^2 - X0^2' --point 11/10 --zeta 2");
    EXPECT_EQ(bad.code, 2) << bad.out;
}

TEST(Binary, ConfigFileAndOutputs) {
    auto dir = fresh_dir("cfg");
    std::filesystem::create_directories(dir);
    {
        std::ofstream cfg(dir / "c.json");
        cfg << R"({"n": 2, "H": 6, "eps": ["1/10", 1]})";
    }
    auto out1 = dir / "run1", out2 = dir / "run2";
    auto a = run_cli("census-linear --config " + (dir / "c.json").string() + " --out " + out1.string());
    ASSERT_EQ(a.code, 0) << a.out;
    // output directory from the environment
    auto b = run_cli("census-linear --config " + (dir / "c.json").string(), std::string(kOutDirEnv) + "=" + out2.string());
    ASSERT_EQ(b.code, 0) << b.out;
    for (const char* name : {"census-linear.csv", "census-linear_ktail.csv", "census-linear_counting.csv"})
        EXPECT_EQ(slurp(out1 / name), slurp(out2 / name)) << name;
    auto manifest = json::parse(slurp(out1 / "census-linear_manifest.json"));
    EXPECT_EQ(manifest["version"], kVersion);
    EXPECT_EQ(manifest["pass"], true);
    EXPECT_EQ(manifest["config"]["n"], 2);
    {
        std::ofstream cfg(dir / "bad.json");
        cfg << R"({"n": 2, "H": 6, "eps": [1], "typo_key": 1})";
    }
    EXPECT_EQ(run_cli("census-linear --config " + (dir / "bad.json").string()).code, 2);
    std::filesystem::remove_all(dir);
}

TEST(Binary, CheckAll) {
    auto r = run_cli("check-all");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}
