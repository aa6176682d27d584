#include "oracles.hpp"
#include "properties.hpp"

#include "hlab/errors.hpp"
#include "hlab/steiner.hpp"

#include <gtest/gtest.h>

using namespace hlab;

namespace {

auto fano() -> SteinerSystem
{
    return {2, 3, 7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}};
}

} // namespace

TEST(Steiner, VerifyExamples)
{
    const auto f = verify_system(fano());
    EXPECT_TRUE(f.valid);
    EXPECT_EQ(f.d, 7U);
    EXPECT_EQ(f.uncovered_fraction, Rational(0));
    EXPECT_EQ(f.covered, 21U);

    const auto bad = verify_system({2, 3, 4, {{0, 1, 2}, {0, 1, 3}}});
    EXPECT_FALSE(bad.valid);
    EXPECT_EQ(bad.violations, (std::vector<Subset>{{0, 1}}));

    const auto empty = verify_system({2, 3, 5, {}});
    EXPECT_TRUE(empty.valid);
    EXPECT_EQ(empty.uncovered_fraction, Rational(1));

    const auto malformed = verify_system({2, 3, 5, {{0, 1, 7}}});
    EXPECT_FALSE(malformed.valid);
    EXPECT_FALSE(malformed.malformed.empty());
    EXPECT_TRUE(meets_lambda(f, Rational(0)));
    EXPECT_FALSE(meets_lambda(empty, Rational(1, 2)));
}

TEST(Steiner, PermuteExamples)
{
    const std::vector<int> id{0, 1, 2, 3, 4, 5, 6};
    EXPECT_EQ(permute_system(fano(), id), fano());
    const std::vector<int> rev{6, 5, 4, 3, 2, 1, 0};
    const auto r = verify_system(permute_system(fano(), rev));
    EXPECT_TRUE(r.valid);
    EXPECT_EQ(r.d, 7U);
    EXPECT_THROW(permute_system(fano(), std::vector<int>{0, 0, 1, 2, 3, 4, 5}), ParameterError);
}

TEST(Steiner, SmallCases)
{
    EXPECT_EQ(oracle::max_packing(2, 3, 4), 1);
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        EXPECT_EQ(greedy_system(2, 3, 4, seed).d(), 1U);
}

TEST(Steiner, BestOfSevenPoints)
{
    EXPECT_EQ(oracle::max_packing(2, 3, 7), 7);
    const auto best = best_greedy(2, 3, 7, 10000, 1, 1);
    EXPECT_EQ(best.system.d(), 7U);
    EXPECT_EQ(verify_system(best.system).uncovered_fraction, Rational(0));
    std::uint64_t total = 0;
    for (const auto& [d, count] : best.d_histogram)
        total += count;
    EXPECT_EQ(total, 10000U);
}

TEST(Steiner, NibbleWithoutRoundsIsGreedy)
{
    NibbleOptions none;
    none.rounds = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        EXPECT_EQ(nibble_system(3, 5, 11, seed, none), greedy_system(3, 5, 11, seed));
}

TEST(Steiner, NibbleLargeInstance)
{
    const auto sys = nibble_system(2, 4, 40, 8);
    const auto rep = verify_system(sys);
    EXPECT_TRUE(rep.valid);
    EXPECT_FALSE(check_maximal(sys).addable.has_value());
}

TEST(Steiner, JsonRoundTrip)
{
    EXPECT_EQ(system_from_json(system_to_json(fano())), fano());
    EXPECT_THROW(system_from_json(nlohmann::json{{"r", 2}}), ParseError);
}

TEST(Steiner, ParameterChecks)
{
    EXPECT_THROW(greedy_system(3, 2, 5, 1), ParameterError);
    EXPECT_THROW(greedy_system(2, 3, 2, 1), ParameterError);
}

TEST(Properties, Steiner)
{
    props::Context ctx(props::kMasterSeed, 2);
    props::steiner_properties(ctx);
    for (const auto& f : ctx.failures())
        ADD_FAILURE() << f;
    EXPECT_GT(ctx.checks(), 0U);
}
