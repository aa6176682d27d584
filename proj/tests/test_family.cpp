#include "properties.hpp"

#include "hlab/errors.hpp"
#include "hlab/family.hpp"
#include "hlab/named.hpp"
#include "hlab/predicate.hpp"

#include <gtest/gtest.h>

using namespace hlab;

namespace {

auto fam(std::vector<RUniformGraph> members) -> ForbiddenFamily
{
    return normalize_family(std::move(members));
}

} // namespace

TEST(Family, ContainsExamples)
{
    EXPECT_TRUE(contains_induced(complete_graph(4), fam({complete_graph(3)})));
    EXPECT_FALSE(contains_induced(cycle_graph(4), fam({complete_graph(3)})));
    EXPECT_TRUE(contains_induced(cycle_graph(5), fam({path_graph(3)})));
}

TEST(Family, CountExamples)
{
    EXPECT_EQ(count_induced(complete_graph(4), fam({complete_graph(3)})), 4U);
    EXPECT_EQ(count_induced(cycle_graph(4), fam({path_graph(3)})), 4U);
    EXPECT_EQ(count_induced(cycle_graph(5), fam({path_graph(3)})), 5U);
}

TEST(Family, Normalization)
{
    const std::vector<int> sigma{2, 0, 1};
    const auto k3 = complete_graph(3);
    const auto a = fam({k3, permute(k3, sigma)});
    EXPECT_EQ(a.size(), 1U);
    EXPECT_EQ(a.min_order(), 3);
    const auto b = fam({cycle_graph(4), k3});
    EXPECT_EQ(b.size(), 2U);
    EXPECT_EQ(b.min_order(), 3);
    EXPECT_EQ(fam({cycle_graph(4)}).min_order(), 4);
    EXPECT_THROW(fam({}), ConstructionError);
    EXPECT_THROW(fam({k3, RUniformGraph::complete(4, 3)}), ConstructionError);
}

TEST(Family, UniformityMismatch)
{
    EXPECT_THROW(contains_induced(RUniformGraph::complete(4, 3), fam({complete_graph(3)})), ParameterError);
}

TEST(Family, GroundRestrictedMatcher)
{
    // C5 with ground {0,1,3}: 0-1 edge, 3 isolated from both -> no induced P3.
    const auto c5 = cycle_graph(5);
    const FamilyMatcher on(fam({path_graph(3)}), 5, {0, 1, 3});
    EXPECT_FALSE(on.contains(c5.words()));
    const FamilyMatcher on2(fam({path_graph(3)}), 5, {0, 1, 2});
    EXPECT_TRUE(on2.contains(c5.words()));
    EXPECT_EQ(on2.count(c5.words()), 1U);
}

TEST(Family, JsonRoundTrip)
{
    const auto f = fam({cycle_graph(4), complete_graph(3)});
    const auto back = family_from_json(family_to_json(f));
    EXPECT_EQ(back.codes(), f.codes());
    const auto pred = EdgePredicate::intersection(
        {EdgePredicate::forb(f), EdgePredicate::complement(EdgePredicate::max_edges(2))});
    EXPECT_EQ(predicate_to_json(predicate_from_json(predicate_to_json(pred))), predicate_to_json(pred));
    EXPECT_THROW(predicate_from_json(nlohmann::json{{"kind", "bogus"}}), ParseError);
}

TEST(Properties, Family)
{
    props::Context ctx(props::kMasterSeed, 2);
    props::family_properties(ctx);
    for (const auto& f : ctx.failures())
        ADD_FAILURE() << f;
    EXPECT_GT(ctx.checks(), 0U);
}
