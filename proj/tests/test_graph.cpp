#include "kcrit/canonical.hpp"
#include "kcrit/graph.hpp"
#include "kcrit/graph_ops.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kcrit;

namespace {

auto star(int leaves) -> Graph
{
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

auto expect_valid(const Graph & g) -> void
{
    auto bad = g.invariant_violation();
    EXPECT_FALSE(bad.has_value()) << *bad;
}

}

TEST(DeleteEdge, CompleteGraphLosesOneEdge)
{
    auto g = delete_edge(Graph::complete(4), 0, 1);
    EXPECT_EQ(g.edge_count(), 5);
    EXPECT_EQ(g.size(), 4);
    expect_valid(g);
}

TEST(DeleteEdge, PathMiddleEdgeDisconnects)
{
    auto g = delete_edge(Graph::path(3), 0, 1);
    g = Graph::path(4);
    g = delete_edge(g, 1, 2);
    EXPECT_EQ(components(g).size(), 2U);
    auto p3 = delete_edge(Graph::path(3), 1, 2);
    EXPECT_EQ(components(p3).size(), 2U);
}

TEST(DeleteEdge, CycleBecomesPath)
{
    auto g = delete_edge(Graph::cycle(5), 2, 3);
    EXPECT_TRUE(is_connected(g));
    EXPECT_TRUE(is_isomorphic(g, Graph::path(5)));
}

TEST(DeleteEdge, MissingEdgeIsAnError)
{
    EXPECT_THROW(delete_edge(Graph::cycle(5), 0, 2), PreconditionError);
}

TEST(SplitVertex, CompleteGraphSplit)
{
    auto g = split_vertex(Graph::complete(4), VertexSplit{3, {0}, {1, 2}});
    EXPECT_EQ(g.size(), 5);
    EXPECT_EQ(g.edge_count(), 6);
    EXPECT_EQ(sorted_degrees(g), (std::vector<int>{1, 2, 3, 3, 3}));
    EXPECT_FALSE(g.adjacent(3, 4));
    expect_valid(g);
}

TEST(SplitVertex, StarCentreSplitsIntoTwoPaths)
{
    auto g = split_vertex(star(4), VertexSplit{0, {1, 2}, {3, 4}});
    EXPECT_EQ(g.size(), 6);
    EXPECT_EQ(g.edge_count(), 4);
    EXPECT_EQ(components(g).size(), 2U);
}

TEST(SplitVertex, RejectsBadPartitions)
{
    EXPECT_THROW(split_vertex(Graph::complete(4), VertexSplit{3, {}, {0, 1, 2}}), PreconditionError);
    EXPECT_THROW(split_vertex(Graph::complete(4), VertexSplit{3, {0}, {1}}), PreconditionError);
    EXPECT_THROW(split_vertex(Graph::complete(4), VertexSplit{3, {0, 1}, {1, 2}}), PreconditionError);
}

TEST(IdentifyVertices, TwoTrianglesMakeABowtie)
{
    auto g = disjoint_union(Graph::complete(3), Graph::complete(3));
    auto h = identify_vertices(g, 0, 3);
    EXPECT_EQ(h.size(), 5);
    EXPECT_EQ(h.edge_count(), 6);
    expect_valid(h);
}

TEST(IdentifyVertices, PathEndpointsCollapse)
{
    auto h = identify_vertices(Graph::path(3), 0, 2);
    EXPECT_EQ(h.size(), 2);
    EXPECT_EQ(h.edge_count(), 1);
}

TEST(IdentifyVertices, OppositeCycleVertices)
{
    auto h = identify_vertices(Graph::cycle(4), 0, 2);
    EXPECT_EQ(h.size(), 3);
    EXPECT_EQ(h.edge_count(), 2);
}

TEST(IdentifyVertices, AdjacentIsAnError)
{
    EXPECT_THROW(identify_vertices(Graph::cycle(4), 0, 1), PreconditionError);
}

TEST(IdentifyVertices, LabelsMerge)
{
    Graph g = Graph::path(3);
    g.set_label(0, "a");
    g.set_label(2, "c");
    auto h = identify_vertices(g, 0, 2);
    EXPECT_EQ(h.label(0), "a*c");
    EXPECT_EQ(h.label(1), "1");
}

TEST(CompleteGraph, Recognised)
{
    EXPECT_TRUE(is_complete_graph(Graph::complete(5), 5));
    EXPECT_FALSE(is_complete_graph(delete_edge(Graph::complete(5), 0, 1), 5));
    EXPECT_FALSE(is_complete_graph(Graph::complete(4), 5));
}

TEST(GraphProperties, MutationsKeepInvariantsAndSplitInvertsIdentify)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_graph<Graph>(7, 0.45, rng);
        expect_valid(g);
        for (int z = 0; z < g.size(); ++z) {
            auto nb = g.neighbours(z).to_vector();
            if (nb.size() < 2)
                continue;
            std::uniform_int_distribution<std::size_t> cut(1, nb.size() - 1);
            std::shuffle(nb.begin(), nb.end(), rng);
            auto c = cut(rng);
            VertexSplit s{z, {nb.begin(), nb.begin() + static_cast<long>(c)}, {nb.begin() + static_cast<long>(c), nb.end()}};
            auto split = split_vertex(g, s);
            expect_valid(split);
            EXPECT_EQ(split.edge_count(), g.edge_count());
            auto back = identify_vertices(split, z, g.size());
            expect_valid(back);
            EXPECT_TRUE(oracle::isomorphic(back, g));
            break;
        }
        for (auto [u, v] : g.edges()) {
            expect_valid(delete_edge(g, u, v));
            break;
        }
    }
}
