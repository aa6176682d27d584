#include "properties.hpp"

#include "hlab/binomial.hpp"
#include "hlab/codec.hpp"
#include "hlab/errors.hpp"
#include "hlab/hypergraph.hpp"
#include "hlab/named.hpp"
#include "hlab/rational.hpp"
#include "hlab/rng.hpp"
#include "hlab/subset.hpp"

#include <gtest/gtest.h>

#include <array>
#include <set>

using namespace hlab;

TEST(Binomial, SmallAndLarge)
{
    EXPECT_EQ(binom(4, 2), 6U);
    EXPECT_EQ(binom(21, 5), 20349U);
    EXPECT_EQ(binom(3, 5), 0U);
    EXPECT_EQ(binom(3, -1), 0U);
    EXPECT_EQ(binom(200, 3), 1313400U);
    EXPECT_EQ(binom(67, 33), 14226520737620288370ULL);
    EXPECT_THROW(binom(68, 34), OverflowError);
    std::uint64_t out = 0;
    EXPECT_FALSE(try_binom(300, 150, out));
}

TEST(Subset, RankExamples)
{
    EXPECT_EQ(rank_subset(Subset{0, 1}, 2), 0U);
    EXPECT_EQ(rank_subset(Subset{2, 3}, 2), 5U);
    EXPECT_EQ(rank_subset(Subset{0, 1, 2}, 3), 0U);
    EXPECT_EQ(unrank_subset(0, 2), (Subset{0, 1}));
    EXPECT_EQ(unrank_subset(5, 2), (Subset{2, 3}));
    EXPECT_EQ(unrank_subset(4, 2), (Subset{1, 3}));
}

TEST(Subset, RejectsMalformed)
{
    EXPECT_THROW(rank_subset(Subset{1, 1}, 2), MalformedSubsetError);
    EXPECT_THROW(rank_subset(Subset{2, 1}, 2), MalformedSubsetError);
    EXPECT_THROW(rank_subset(Subset{-1, 1}, 2), MalformedSubsetError);
    EXPECT_THROW(rank_subset(Subset{0, 1, 2}, 2), MalformedSubsetError);
}

TEST(Subset, ColexOrderOfPairs)
{
    const std::vector<Subset> expected{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
    EXPECT_EQ(all_subsets_of(std::vector<int>{0, 1, 2, 3}, 2), expected);
}

TEST(Hypergraph, InducedExamples)
{
    const auto c4 = cycle_graph(4);
    const auto p = induced_subgraph(c4, std::vector<int>{0, 1, 2});
    EXPECT_EQ(p.edges(), (std::vector<Subset>{{0, 1}, {1, 2}}));
    EXPECT_EQ(induced_subgraph(c4, std::vector<int>{0, 1, 2, 3}), c4);
    const auto k43 = RUniformGraph::complete(4, 3);
    const auto single = induced_subgraph(k43, std::vector<int>{0, 2, 3});
    EXPECT_EQ(single.edge_count(), 1U);
    EXPECT_EQ(single.order(), 3);
    EXPECT_THROW(induced_subgraph(c4, std::vector<int>{2}), DegenerateSubsetError);
    EXPECT_THROW(induced_subgraph(c4, std::vector<int>{2, 1}), MalformedSubsetError);
}

TEST(Hypergraph, CanonicalExamples)
{
    auto p3_plus = RUniformGraph(4, 2);
    p3_plus.set_edge(Subset{0, 1});
    p3_plus.set_edge(Subset{1, 2});
    std::set<std::vector<std::uint64_t>> codes;
    std::vector<int> sigma{0, 1, 2, 3};
    do
        codes.insert(canonical_code(permute(p3_plus, sigma)).words);
    while (std::next_permutation(sigma.begin(), sigma.end()));
    EXPECT_EQ(codes.size(), 1U);
    EXPECT_NE(canonical_code(complete_graph(3)), canonical_code(path_graph(3)));

    std::set<CanonicalCode> classes;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        const std::array<std::uint64_t, 1> words{mask};
        classes.insert(canonical_code(RUniformGraph::from_mask(4, 2, words)));
    }
    EXPECT_EQ(classes.size(), 11U);
    EXPECT_THROW(canonical_code(RUniformGraph(11, 2)), SizeLimitError);
}

TEST(Hypergraph, RandomGraphExtremes)
{
    Rng rng(1);
    EXPECT_EQ(random_graph(7, 3, Rational(0), rng).edge_count(), 0U);
    EXPECT_EQ(random_graph(7, 3, Rational(1), rng), RUniformGraph::complete(7, 3));
    EXPECT_THROW(random_graph(4, 2, Rational(3, 2), rng), ParameterError);
}

TEST(Hypergraph, RandomGraphReproducible)
{
    Rng a(99);
    Rng b(99);
    EXPECT_EQ(random_graph(12, 3, Rational(2, 7), a), random_graph(12, 3, Rational(2, 7), b));
}

TEST(Codec, Graph6Examples)
{
    EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
    EXPECT_EQ(to_graph6(RUniformGraph(1, 2)), "@");
    EXPECT_EQ(to_graph6(cycle_graph(4)), "Cl");
    EXPECT_EQ(from_graph6("Cl"), cycle_graph(4));
    EXPECT_EQ(from_graph6("@\n"), RUniformGraph(1, 2));
}

TEST(Codec, Graph6Errors)
{
    try {
        from_graph6("C~~");
        FAIL() << "trailing byte accepted";
    } catch (const ParseError& e) {
        EXPECT_TRUE(e.offset().has_value());
    }
    EXPECT_THROW(from_graph6("C!"), ParseError);
    EXPECT_THROW(from_graph6("Bx"), ParseError); // nonzero padding bits
    EXPECT_THROW(from_graph6(""), ParseError);
    EXPECT_THROW(to_graph6(RUniformGraph(4, 3)), ParameterError);
}

TEST(Codec, JsonAndLists)
{
    const auto k3 = complete_graph(3);
    EXPECT_EQ(parse_graph(R"({"n":3,"r":2,"edges":[[0,1],[1,2],[0,2]]})"), k3);
    EXPECT_EQ(parse_graph("Bw"), k3);
    const auto list = parse_graph_list("Bw\nCl\n");
    ASSERT_EQ(list.size(), 2U);
    EXPECT_EQ(list[1], cycle_graph(4));
    EXPECT_THROW(parse_graph(R"({"n":3,"r":2,"edges":[[0,3]]})"), Error);
}

TEST(Rational, ParseAndRender)
{
    EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
    EXPECT_EQ(to_string(parse_rational("3")), "3/1");
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("0.5"), ParseError);
    EXPECT_EQ(round15(0.1 + 0.2), 0.3);
}

TEST(Rng, KnownOutputsAndSubstreams)
{
    // SplitMix64 reference output for seed 0.
    std::uint64_t state = 0;
    EXPECT_EQ(splitmix64(state), 0xe220a8397b1dcdafULL);
    Rng a(5);
    const auto s1 = a.substream(1);
    Rng jumped(5);
    jumped.jump();
    Rng s1c = s1;
    EXPECT_EQ(s1c.next(), jumped.next());
    Rng b(5);
    for (int i = 0; i < 1000; ++i)
        EXPECT_LT(b.below(7), 7U);
}

TEST(Properties, Core)
{
    props::Context ctx(props::kMasterSeed, 2);
    props::core_properties(ctx);
    for (const auto& f : ctx.failures())
        ADD_FAILURE() << f;
    EXPECT_GT(ctx.checks(), 0U);
}
