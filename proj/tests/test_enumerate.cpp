#include "laptab/enumerate.hpp"
#include "laptab/error.hpp"
#include "laptab/families.hpp"
#include "laptab/rng.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

using namespace laptab;

TEST(Prufer, Examples)
{
    EXPECT_EQ(prufer_decode(2, std::vector<int>{}), path(2));
    const auto s = prufer_decode(4, std::vector<int>{1, 1});
    EXPECT_EQ(degrees(s), (std::vector<double>{1, 3, 1, 1}));
    EXPECT_THROW(prufer_decode(4, std::vector<int>{4, 0}), Error);
    EXPECT_THROW(prufer_decode(4, std::vector<int>{1}), Error);
}

// Every sequence decodes to a distinct labeled tree; a label's degree is its
// multiplicity plus one.
TEST(Prufer, BijectionProperty)
{
    const int n = 5;
    std::set<WeightedGraph::EdgeMap> seen;
    const auto stream = InstanceStream::all_trees(n);
    for (std::uint64_t i = 0; i < stream.size(); ++i) {
        const auto inst = stream.instance(i);
        EXPECT_TRUE(is_tree(inst.graph));
        seen.insert(inst.graph.edges());
    }
    EXPECT_EQ(seen.size(), 125U);
    const std::vector<int> seq{3, 3, 0};
    const auto d = degrees(prufer_decode(n, seq));
    EXPECT_EQ(d, (std::vector<double>{2, 1, 1, 3, 1}));
}

TEST(AllTrees, Counts)
{
    EXPECT_EQ(InstanceStream::all_trees(2).size(), 1U);
    EXPECT_EQ(InstanceStream::all_trees(3).size(), 3U);
    const auto four = InstanceStream::all_trees(4);
    ASSERT_EQ(four.size(), 16U);
    int stars = 0;
    for (std::uint64_t i = 0; i < four.size(); ++i) {
        const auto d = degrees(four.instance(i).graph);
        for (double x : d)
            stars += x == 3.0 ? 1 : 0;
    }
    EXPECT_EQ(stars, 4);
    EXPECT_EQ(four.instance(5).id, "tree:4:5");
}

TEST(AllGraphs, Counts)
{
    EXPECT_EQ(InstanceStream::all_graphs(2).size(), 2U);
    EXPECT_EQ(InstanceStream::all_graphs(3).size(), 8U);
    EXPECT_EQ(InstanceStream::all_graphs(4).size(), 64U);
    EXPECT_EQ(graph_from_mask(4, 0b111111), complete(4));
    EXPECT_EQ(graph_from_mask(3, 0b001).weight(0, 1), 1.0);
    EXPECT_EQ(graph_from_mask(3, 0b100).weight(1, 2), 1.0);
}

TEST(RandomWeighted, EmptyAndDeterministic)
{
    EXPECT_EQ(InstanceStream::random_weighted(5, 0, Distribution::Uniform01, 1).size(), 0U);
    auto a = InstanceStream::random_weighted(3, 8, 20, Distribution::UniformSym, 7);
    auto b = InstanceStream::random_weighted(3, 8, 20, Distribution::UniformSym, 7);
    Instance x, y;
    int count = 0;
    while (a.next(x)) {
        ASSERT_TRUE(b.next(y));
        EXPECT_EQ(x.graph, y.graph);
        EXPECT_EQ(x.id, y.id);
        EXPECT_EQ(x.graph, a.instance(static_cast<std::uint64_t>(count)).graph);
        EXPECT_GE(x.graph.order(), 3);
        EXPECT_LE(x.graph.order(), 8);
        ++count;
    }
    EXPECT_EQ(count, 20);
    EXPECT_FALSE(b.next(y));
}

// Weights captured from an independent SplitMix64 reimplementation.
TEST(RandomWeighted, GoldenInstance)
{
    const std::vector<double> golden{0.7906546757343162, 0.052227385260500414, 0.272771964268555,
                                     0.3254441016182231, 0.5033058435712605, 0.410369822413008,
                                     0.18560205858302714, 0.9227907429861937, 0.5385418845058485,
                                     0.300617316746738};
    const auto inst = InstanceStream::random_weighted(5, 1, Distribution::Uniform01, 42).instance(0);
    EXPECT_EQ(inst.id, "random:uniform01:5:0");
    std::size_t idx = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            EXPECT_EQ(inst.graph.weight(i, j), golden[idx++]);
    EXPECT_EQ(SplitMix64(0).next(), 16294208416658607535ULL);
}

TEST(RandomWeighted, DistributionShapes)
{
    for (std::uint64_t i = 0; i < 50; ++i) {
        const auto tree = random_weighted_graph(7, Distribution::SparseTree, 3, i);
        EXPECT_TRUE(is_tree(tree));
        EXPECT_FALSE(tree.has_negative_weight());
        const auto st = random_weighted_graph(6, Distribution::StarSym, 3, i);
        for (const auto& [pair, w] : st.edges()) {
            EXPECT_EQ(pair.first, 0);
            EXPECT_GE(w, -1.0);
            EXPECT_LT(w, 1.0);
        }
    }
    EXPECT_EQ(parse_distribution("sparsetree"), Distribution::SparseTree);
    EXPECT_FALSE(parse_distribution("gaussian").has_value());
}

TEST(Streams, ListAndConcat)
{
    const auto list = InstanceStream::from_graphs({path(3), star(4)}, "fam");
    EXPECT_EQ(list.instance(1).id, "fam:1");
    const auto both = InstanceStream::concat({list, InstanceStream::all_trees(3)});
    ASSERT_EQ(both.size(), 5U);
    EXPECT_EQ(both.instance(1).graph, star(4));
    EXPECT_EQ(both.instance(2).id, "tree:3:0");
}
