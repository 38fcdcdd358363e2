#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using fslab::cli::parse_angle;
using fslab::cli::parse_mu;
using fslab::cli::parse_real;
using fslab::cli::UsageError;
using json = nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args, std::optional<std::string> threads = std::nullopt) {
    args.insert(args.begin(), "fslab");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = fslab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err, threads);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(CliParse, MuLiterals) {
    EXPECT_EQ(parse_mu("2"), std::complex<double>(2, 0));
    EXPECT_EQ(parse_mu("1/2"), std::complex<double>(0.5, 0));
    EXPECT_EQ(parse_mu("1+2i"), std::complex<double>(1, 2));
    EXPECT_EQ(parse_mu("1-2i"), std::complex<double>(1, -2));
    EXPECT_EQ(parse_mu("-0.5i"), std::complex<double>(0, -0.5));
    EXPECT_EQ(parse_mu("i"), std::complex<double>(0, 1));
    EXPECT_EQ(parse_mu("1e-3+1e2i"), std::complex<double>(1e-3, 1e2));
    EXPECT_THROW(parse_mu("1 + 2i"), UsageError);
    EXPECT_THROW(parse_mu(""), UsageError);
    EXPECT_THROW(parse_mu("abc"), UsageError);
    EXPECT_THROW(parse_real("1/0"), UsageError);
    EXPECT_NEAR(parse_angle("pi/2"), M_PI / 2, 1e-15);
    EXPECT_NEAR(parse_angle("3pi/2"), 3 * M_PI / 2, 1e-15);
    EXPECT_NEAR(parse_angle("-pi"), -M_PI, 1e-15);
    EXPECT_DOUBLE_EQ(parse_angle("0.25"), 0.25);
}

TEST(Cli, BoundExamples) {
    auto r = run_cli({"bound", "--mu", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["format"], 1);
    EXPECT_NEAR(j["value"].get<double>(), 5.0, 1e-14);
    EXPECT_EQ(j["case"], 4);
    EXPECT_EQ(j["breakpoints"].size(), 3u);
    EXPECT_TRUE(j.contains("tau"));
    EXPECT_TRUE(j.contains("sigma"));
    EXPECT_TRUE(j.contains("scaled_value"));

    r = run_cli({"bound", "--mu", "i", "--complex"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(json::parse(r.out)["value"].get<double>(), 5.0198, 1e-4);

    EXPECT_EQ(run_cli({"bound", "--mu", "1+i"}).code, 2);
    EXPECT_EQ(run_cli({"bound", "--mu", "1", "--alpha", "1"}).code, 2);
    EXPECT_EQ(run_cli({"bound", "--mu", "1", "--lambda", "0.2", "--delta", "0.5"}).code, 2);
    EXPECT_EQ(run_cli({"bound"}).code, 1);
    EXPECT_EQ(run_cli({"bound", "--mu", "x"}).code, 1);
    EXPECT_EQ(run_cli({}).code, 1);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
}

TEST(Cli, SweepCsv) {
    const auto r = run_cli({"sweep", "--mu-min", "0", "--mu-max", "2", "--steps", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line))
        rows.push_back(line);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0], "mu,case,value,scaled_value,complex_bound");
    EXPECT_EQ(rows[1].substr(0, 6), "0,1,3,");
    EXPECT_EQ(rows[5].substr(0, 6), "2,4,5,");
    EXPECT_EQ(r.out.find('\r'), std::string::npos);
    EXPECT_EQ(r.out.back(), '\n');

    const auto j = run_cli({"sweep", "--steps", "2", "--output", "json"});
    ASSERT_EQ(j.code, 0);
    EXPECT_EQ(json::parse(j.out)["rows"].size(), 3u);
    EXPECT_EQ(run_cli({"sweep", "--output", "xml"}).code, 1);
    EXPECT_EQ(run_cli({"sweep", "--mu-min", "i"}).code, 1);
}

TEST(Cli, FormatUsesSeventeenDigits) {
    EXPECT_EQ(fslab::cli::format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(fslab::cli::format_double(5.0), "5");
}

TEST(Cli, SharpExample) {
    const auto r = run_cli({"sharp", "--mu", "1/2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_NEAR(j["attained_value"].get<double>(), 11.0 / 9.0, 1e-14);
    EXPECT_LE(std::abs(j["residual"].get<double>()), 1e-8);
    EXPECT_EQ(j["case"], 2);
    EXPECT_EQ(run_cli({"sharp", "--mu", "1+i"}).code, 1);
}

TEST(Cli, ReduceExample) {
    const auto r = run_cli({"reduce", "--preset", "keogh-merkes", "--mu", "0.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["difference"].get<double>(), 0.0);
    EXPECT_NEAR(j["value"].get<double>(), 11.0 / 9.0, 1e-14);
    EXPECT_TRUE(j.contains("note"));

    for (const char* preset : {"darus-thomas", "al-abbadi-darus", "ad2"}) {
        const auto o = run_cli({"reduce", "--preset", preset, "--mu", "0.7", "--beta", "0.3"});
        ASSERT_EQ(o.code, 0) << preset << o.err;
        EXPECT_EQ(json::parse(o.out)["difference"].get<double>(), 0.0);
    }
    EXPECT_EQ(run_cli({"reduce", "--preset", "bogus", "--mu", "1"}).code, 1);
    EXPECT_EQ(run_cli({"reduce", "--preset", "keogh-merkes", "--mu", "1", "--alpha", "0.5"}).code, 2);
}

TEST(Cli, MemberTable) {
    const auto r = run_cli({"member", "--p-atoms", "1:0", "--q-atoms", "0.5:0,0.5:pi", "--order", "5", "--mu", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["order"], 5);
    EXPECT_EQ(j["coefficients"].size(), 5u);
    EXPECT_EQ(j["coefficients"][0]["k"], 1);
    EXPECT_EQ(j["q_atoms"].size(), 2u);

    EXPECT_EQ(run_cli({"member", "--p-atoms", "0.5:0", "--q-atoms", "1:0"}).code, 2);
    EXPECT_EQ(run_cli({"member", "--p-atoms", "1:x", "--q-atoms", "1:0"}).code, 1);
    EXPECT_EQ(run_cli({"member", "--p-atoms", "1:0", "--q-atoms", "1:0", "--mu", "i"}).code, 1);
}

TEST(Cli, VerifyExampleAndDeterminism) {
    const std::vector<std::string> args{"verify", "--mu", "1/2", "--samples", "2000", "--seed", "7"};
    const auto a = run_cli(args, "1");
    const auto b = run_cli(args, "3");
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto j = json::parse(a.out);
    EXPECT_TRUE(j["attained"].get<bool>());
    EXPECT_NEAR(j["best_value"].get<double>(), 11.0 / 9.0, 1e-9);

    const auto complex_mu = run_cli({"verify", "--mu", "i", "--samples", "2000"});
    ASSERT_EQ(complex_mu.code, 0) << complex_mu.err;
    EXPECT_GT(json::parse(complex_mu.out)["margin"].get<double>(), 0.0);

    const auto bad_env = run_cli(args, "zero");
    EXPECT_EQ(bad_env.code, 0);
    EXPECT_NE(bad_env.err.find("FSLAB_THREADS"), std::string::npos);
    EXPECT_EQ(bad_env.out, a.out);
}

TEST(Cli, VerifyDefaultMuSet) {
    const auto r = run_cli({"verify", "--samples", "500"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["reports"].size(), 7u);
    EXPECT_EQ(j["violations"], 0);
}

TEST(Cli, VerifyReportsViolationWithExitThree) {
    const auto r = run_cli({"verify", "--alpha", "0.9", "--mu", "1.5"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("violation"), std::string::npos);
    const auto j = json::parse(r.out);
    EXPECT_TRUE(j["violation"].get<bool>());
    EXPECT_GT(j["best_value"].get<double>(), j["bound"].get<double>());
}
