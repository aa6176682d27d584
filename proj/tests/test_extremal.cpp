#include "oracles.hpp"
#include "properties.hpp"

#include "hlab/errors.hpp"
#include "hlab/extremal.hpp"
#include "hlab/named.hpp"

#include <gtest/gtest.h>

using namespace hlab;

TEST(Extremal, TauExamples)
{
    EXPECT_EQ(tau(cycle_graph(4)).t, 2);
    EXPECT_EQ(tau(path_graph(3)).t, 1);
    EXPECT_EQ(tau(complete_graph(4)).t, 3);
    EXPECT_EQ(predicted_c_half(cycle_graph(4)), Rational(1, 2));
    EXPECT_EQ(predicted_c_half(complete_graph(4)), Rational(1, 3));
    EXPECT_EQ(predicted_c_half(path_graph(3)), Rational(1));
    EXPECT_EQ(tau(complete_graph(1)).t, 0);
    EXPECT_THROW(predicted_c_half(complete_graph(1)), DegenerateSubsetError);
    EXPECT_THROW(tau(RUniformGraph(0, 2)), DegenerateSubsetError);
    EXPECT_THROW(tau(RUniformGraph::complete(4, 3)), ParameterError);
}

TEST(Extremal, TauMatchesNaive)
{
    for (const char* name : {"K2", "K3", "K5", "C4", "C5", "C6", "P3", "P4", "P5", "E3"}) {
        const auto g = named_graph(name);
        EXPECT_EQ(tau(g).t, oracle::tau(oracle::adjacency(g))) << name;
    }
}

TEST(Extremal, WitnessExamples)
{
    const auto k3 = complete_graph(3);
    const std::vector<Subset> k22{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    EXPECT_TRUE(witness_check(4, k3, k22, {}).ok);
    const auto tri = witness_check(4, k3, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}, {});
    EXPECT_FALSE(tri.ok);
    EXPECT_EQ(*tri.counterexample, (std::vector<Subset>{{0, 1}, {0, 2}, {1, 2}}));
    const auto completes = witness_check(3, k3, {{0, 1}}, {{0, 2}, {1, 2}});
    EXPECT_FALSE(completes.ok);
    EXPECT_EQ(*completes.counterexample, (std::vector<Subset>{{0, 1}}));
    EXPECT_THROW(witness_check(3, k3, {{0, 1}}, {{0, 1}}), ParameterError);
}

TEST(Extremal, ExstarTriangle)
{
    const auto k3 = complete_graph(3);
    const std::uint64_t expected[] = {2, 4, 6};
    for (int n = 3; n <= 5; ++n) {
        const auto res = exstar(n, k3);
        EXPECT_EQ(res.value, expected[n - 3]);
        EXPECT_EQ(static_cast<int>(res.value), oracle::exstar(n, oracle::adjacency(k3)));
        EXPECT_TRUE(witness_check(n, k3, res.e, res.e0).ok);
    }
    EXPECT_THROW(exstar(7, k3), FeasibilityError);
}

TEST(Extremal, ExstarNonComplete)
{
    for (const char* name : {"P3", "C4"}) {
        const auto f = named_graph(name);
        for (int n = 3; n <= 5; ++n)
            EXPECT_EQ(static_cast<int>(exstar(n, f).value), oracle::exstar(n, oracle::adjacency(f))) << name << n;
    }
}

TEST(Properties, Extremal)
{
    props::Context ctx(props::kMasterSeed, 2);
    props::extremal_properties(ctx);
    for (const auto& f : ctx.failures())
        ADD_FAILURE() << f;
    EXPECT_GT(ctx.checks(), 0U);
}
