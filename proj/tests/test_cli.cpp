#include "properties.hpp"

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

auto run(std::vector<std::string> args) -> Result
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = hlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

auto data(const std::string& name) -> std::string
{
    return std::string(HLAB_DATA_DIR) + "/" + name;
}

} // namespace

TEST(Cli, MeasureFromFile)
{
    const auto r = run({"measure", "--n", "3", "--r", "2", "--p", "1/2", "--forb", data("K3.g6"), "--exact"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["value"], "7/8");
}

TEST(Cli, TauFromFile)
{
    const auto r = run({"tau", "--graph", data("C4.g6")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["t"], 2);
    EXPECT_EQ(r.json()["predicted_c_half"], "1/2");
}

TEST(Cli, SteinerBestOfSeeds)
{
    const auto r = run({"steiner", "--r", "2", "--m", "3", "--n", "7", "--algo", "greedy", "--restarts", "10000",
                        "--seed", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["report"]["d"], 7);
    EXPECT_EQ(r.json()["report"]["uncovered_fraction"], "0/1");
}

TEST(Cli, InstanceCommands)
{
    const auto lemma = run({"lemma", "--instance", data("lemma_instance.json")});
    ASSERT_EQ(lemma.code, 0) << lemma.err;
    EXPECT_EQ(lemma.json()["mu_m_B"], "7/8");
    const auto part = run({"partition", "--instance", data("lemma_instance.json")});
    ASSERT_EQ(part.code, 0) << part.err;
    EXPECT_TRUE(part.json()["table"]["identity_holds"].get<bool>());
    EXPECT_TRUE(part.json()["projection"]["all_hold"].get<bool>());
    EXPECT_TRUE(part.json()["tail_domination"]["dominates"].get<bool>());
    const auto verify = run({"verify-steiner", "--system", data("fano.json"), "--lambda", "0"});
    ASSERT_EQ(verify.code, 0) << verify.err;
    EXPECT_TRUE(verify.json()["valid"].get<bool>());
    EXPECT_TRUE(verify.json()["lambda_met"].get<bool>());
    EXPECT_TRUE(verify.json()["maximality"]["maximal"].get<bool>());
}

TEST(Cli, ExactCapFromEnvironmentAndFlag)
{
    ::setenv("HLAB_EXACT_CAP", "5", 1);
    const auto capped = run({"measure", "--n", "4", "--p", "1/2", "--forb", "K3"});
    EXPECT_EQ(capped.code, 1);
    EXPECT_TRUE(capped.out.empty());
    const auto flag = run({"measure", "--n", "4", "--p", "1/2", "--forb", "K3", "--exact-cap", "6"});
    EXPECT_EQ(flag.code, 0) << flag.err;
    ::unsetenv("HLAB_EXACT_CAP");
}

TEST(Cli, CsvRendering)
{
    const auto csv = hlab::cli::render_csv(nlohmann::json{{"b", "x,y"}, {"a", 1.5}, {"c", nullptr}});
    EXPECT_EQ(csv, "a,b,c\n1.5,\"x,y\",\n");
    const auto rows = hlab::cli::render_csv(nlohmann::json::array({{{"n", 2}}, {{"n", 3}, {"v", "1/2"}}}));
    EXPECT_EQ(rows, "n,v\n2,\n3,1/2\n");
}

TEST(Cli, Help)
{
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("measure"), std::string::npos);
}

TEST(Properties, Cli)
{
    props::Context ctx(props::kMasterSeed, 2);
    props::cli_properties(ctx);
    for (const auto& f : ctx.failures())
        ADD_FAILURE() << f;
    EXPECT_GT(ctx.checks(), 0U);
}
