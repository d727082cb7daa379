#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace sumsq::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args, Environment env = {})
{
    std::ostringstream out, err;
    Run r;
    r.code = run(args, out, err, env);
    r.out = out.str();
    r.err = err.str();
    return r;
}

fs::path temp_file(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / "sumsq_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::string& text)
{
    std::ofstream(p, std::ios::binary) << text;
}

// Report minus its first line, which echoes the command.
std::string body(const std::string& report) { return report.substr(report.find('\n') + 1); }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST(Cli, ParseRange)
{
    EXPECT_EQ(parse_range("5"), std::make_pair(std::int64_t(5), std::int64_t(5)));
    EXPECT_EQ(parse_range("1..10"), std::make_pair(std::int64_t(1), std::int64_t(10)));
    EXPECT_EQ(parse_range("-44..-3"), std::make_pair(std::int64_t(-44), std::int64_t(-3)));
    EXPECT_FALSE(parse_range("10..1"));
    EXPECT_FALSE(parse_range("a..b"));
    EXPECT_FALSE(parse_range(""));
}

TEST(Cli, ComputeValues)
{
    const auto r = cli({"compute", "H", "3", "4", "12"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(contains(r.out, "1/3"));
    EXPECT_TRUE(contains(r.out, "1/2"));
    EXPECT_TRUE(contains(r.out, "4/3"));

    const auto csv = cli({"compute", "r3", "0..4", "--format", "csv"});
    EXPECT_EQ(csv.code, kExitOk);
    EXPECT_EQ(csv.out, "input,value\r\n0,1\r\n1,6\r\n2,12\r\n3,8\r\n4,6\r\n");
}

TEST(Cli, NegativeArguments)
{
    const auto r = cli({"compute", "h", "-3", "-4", "-44", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[2]["input"], -44);
    EXPECT_EQ(j[2]["value"], 3);

    EXPECT_EQ(cli({"compute", "h", "-44..-40"}).code, kExitUsage); // -43, -41 are not discriminants
    EXPECT_EQ(cli({"forms", "-44"}).code, kExitOk);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(cli({}).code, kExitUsage);
    EXPECT_EQ(cli({"verify", "bogus"}).code, kExitUsage);
    EXPECT_EQ(cli({"forms", "-5"}).code, kExitUsage);
    EXPECT_EQ(cli({"compute", "r3", "-1"}).code, kExitUsage);
    EXPECT_EQ(cli({"compute", "bogus", "1"}).code, kExitUsage);
    EXPECT_EQ(cli({"verify", "gauss-r3", "--format", "xml"}).code, kExitUsage);
    EXPECT_EQ(cli({"verify", "kronecker", "--samples", "30"}).code, kExitUsage);
    EXPECT_EQ(cli({"verify", "kronecker", "--precision", "5"}).code, kExitUsage);
    EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

TEST(Cli, FormsListing)
{
    const auto r = cli({"forms", "-44"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_TRUE(contains(r.out, "h(-44) = 3"));
    EXPECT_TRUE(contains(r.out, "H(44) = 4"));
    const auto j = nlohmann::json::parse(cli({"forms", "-44", "--format", "json"}).out);
    ASSERT_EQ(j.size(), 4u);
    EXPECT_EQ(j[0]["a"], 1);
    EXPECT_EQ(j[0]["c"], 11);
}

TEST(Cli, Bijection)
{
    const auto r = cli({"bijection", "11"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_TRUE(contains(r.out, "(5,1,1) -> (2,2,6) [III]"));
    EXPECT_TRUE(contains(r.out, "(3,2,1) -> (3,2,4) [II]"));
    EXPECT_EQ(cli({"bijection", "0"}).code, kExitUsage);
}

TEST(Cli, VerifyPassesAndReports)
{
    const auto r = cli({"verify", "andrews516", "--order", "80"});
    ASSERT_EQ(r.code, kExitOk) << r.out;
    EXPECT_TRUE(contains(r.out, "PASS"));
    EXPECT_TRUE(contains(r.out, "engine: sumsq"));
    EXPECT_TRUE(contains(r.err, "elapsed:"));
    EXPECT_FALSE(contains(r.out, "elapsed:"));

    const auto sweep = cli({"verify", "gauss-r3", "--from", "1", "--to", "300", "--jobs", "3", "--format", "json"});
    ASSERT_EQ(sweep.code, kExitOk);
    EXPECT_TRUE(nlohmann::json::accept(sweep.out));
}

TEST(Cli, OutputIsDeterministic)
{
    const std::vector<std::string> args{"verify", "hurwitz-equivalence", "--to", "400", "--jobs", "4"};
    const auto a = cli(args);
    const auto b = cli({"verify", "hurwitz-equivalence", "--to", "400", "--jobs", "1"});
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(body(a.out), body(b.out));
    const auto n1 = cli({"verify", "partial-fraction", "--tolerance", "1e-9", "--jobs", "4"});
    const auto n2 = cli({"verify", "partial-fraction", "--tolerance", "1e-9", "--jobs", "2"});
    EXPECT_EQ(n1.code, kExitOk) << n1.out;
    EXPECT_EQ(body(n1.out), body(n2.out));
}

TEST(Cli, PrecisionFromEnvironmentAndFlag)
{
    Environment env;
    env.precision = "5";
    EXPECT_EQ(cli({"verify", "partial-fraction", "--samples", "2"}, env).code, kExitUsage);
    // The flag wins over the environment.
    EXPECT_EQ(cli({"verify", "partial-fraction", "--samples", "2", "--precision", "40"}, env).code, kExitOk);
    env.precision = "60";
    const auto r = cli({"verify", "partial-fraction", "--samples", "2"}, env);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(contains(r.out, "60")) << r.out;
    env.precision = "lots";
    EXPECT_EQ(cli({"verify", "partial-fraction", "--samples", "2"}, env).code, kExitUsage);
}

TEST(Cli, CacheRoundTrip)
{
    const auto path = temp_file("cache.csv");
    ASSERT_EQ(cli({"cache", "save", path.string(), "--to", "250"}).code, kExitOk);
    const std::string text = slurp(path);
    EXPECT_EQ(text.rfind("key,numerator,denominator\r\n", 0), 0u);
    EXPECT_TRUE(contains(text, "\r\n0,-1,12\r\n"));
    EXPECT_TRUE(contains(text, "\r\n3,1,3\r\n"));
    EXPECT_TRUE(contains(text, "\r\n-44,3,1\r\n"));
    EXPECT_EQ(cli({"cache", "load", path.string()}).code, kExitOk);

    // Row 0 is always recomputed; corrupt it while keeping the structure valid.
    std::string bad = text;
    const auto at = bad.find("\r\n") + 2;
    const auto end = bad.find("\r\n", at);
    const std::string row0 = bad.substr(at, end - at);
    const std::string key = row0.substr(0, row0.find(','));
    bad.replace(at, end - at, key + ",-7,1");
    spit(path, bad);
    const auto r = cli({"cache", "load", path.string()});
    EXPECT_EQ(r.code, kExitMismatch) << row0;

    spit(path, "key,numerator,denominator\r\n4,1,2\r\n3,1,3\r\n");
    EXPECT_EQ(cli({"cache", "load", path.string()}).code, kExitMismatch);
    spit(path, "key,numerator,denominator\r\n3,2,6\r\n");
    EXPECT_EQ(cli({"cache", "load", path.string()}).code, kExitMismatch);
    spit(path, "key,num\r\n");
    EXPECT_EQ(cli({"cache", "load", path.string()}).code, kExitMismatch);
}

TEST(Cli, CacheSaveWithoutBoundAndMissingFile)
{
    const auto path = temp_file("empty.csv");
    fs::remove(path);
    ASSERT_EQ(cli({"cache", "save", path.string()}).code, kExitOk);
    EXPECT_EQ(cli({"cache", "load", path.string()}).code, kExitOk);
    EXPECT_EQ(cli({"cache", "load", (fs::temp_directory_path() / "sumsq_no_such" / "x.csv").string()}).code, kExitIo);
    EXPECT_EQ(cli({"cache", "save", (fs::temp_directory_path() / "sumsq_no_such" / "x.csv").string()}).code, kExitIo);
}

TEST(Cli, BinaryExitCodes)
{
    const std::string tool = SUMSQ_TOOL_PATH;
    const auto status = [&](const std::string& args) {
        const std::string cmd = "\"" + tool + "\" " + args + " >/dev/null 2>&1";
        const int raw = std::system(cmd.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status("compute r3 1..5"), 0);
    EXPECT_EQ(status("verify bogus"), 2);
    EXPECT_EQ(status("cache load /nonexistent/dir/x.csv"), 3);
    const auto path = temp_file("bad_binary.csv");
    spit(path, "key,numerator,denominator\r\n3,5,3\r\n");
    EXPECT_EQ(status("cache load \"" + path.string() + "\""), 1);

    // A fresh process has an empty memo, so a save without --to is just the header.
    const auto empty = temp_file("header_only.csv");
    EXPECT_EQ(status("cache save \"" + empty.string() + "\""), 0);
    EXPECT_EQ(slurp(empty), "key,numerator,denominator\r\n");
    EXPECT_EQ(status("cache load \"" + empty.string() + "\""), 0);
}
