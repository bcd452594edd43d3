#include "kcrit/coloring.hpp"
#include "kcrit/io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kcrit;

namespace {

auto set_of(std::initializer_list<int> vs) -> Graph::Set
{
    Graph::Set s;
    for (int v : vs)
        s.set(v);
    return s;
}

auto zero_based(std::vector<int> c) -> std::vector<int>
{
    for (auto & x : c)
        --x;
    return c;
}

}

TEST(Colorable, SmallCases)
{
    EXPECT_FALSE(colorable(Graph::complete(5), 4).colorable);
    auto c5 = colorable(Graph::cycle(5), 3);
    ASSERT_TRUE(c5.colorable);
    EXPECT_TRUE(is_proper_coloring(Graph::cycle(5), zero_based(c5.witness)));
    EXPECT_EQ(c5.colors_used, 3);
    EXPECT_FALSE(colorable(Graph::cycle(5), 2).colorable);
    EXPECT_FALSE(colorable(fixture::ore_k4k4(), 3).colorable);
    EXPECT_GT(colorable(fixture::ore_k4k4(), 3).nodes, 0U);
}

TEST(Colorable, WitnessIsOneBased)
{
    auto cert = colorable(Graph::path(4), 2);
    ASSERT_TRUE(cert.colorable);
    for (int c : cert.witness) {
        EXPECT_GE(c, 1);
        EXPECT_LE(c, 2);
    }
    EXPECT_EQ(cert.witness[0], 1);
}

TEST(Colorable, LimitsAreEnforced)
{
    Limits small;
    small.coloring_max_n_small_c = 5;
    EXPECT_THROW(colorable(Graph::cycle(6), 3, small), LimitError);
    EXPECT_THROW(colorable(Graph::cycle(6), 0), PreconditionError);
}

TEST(ChromaticNumber, Examples)
{
    EXPECT_EQ(chromatic_number(Graph::complete(6)), 6);
    EXPECT_EQ(chromatic_number(fixture::moser_spindle()), 4);
    EXPECT_EQ(chromatic_number(Graph(5)), 1);
    EXPECT_EQ(chromatic_number(Graph(0)), 0);
}

TEST(Critical, Examples)
{
    auto k4 = check_critical(Graph::complete(4), 4);
    EXPECT_TRUE(k4.is_k_chromatic);
    EXPECT_TRUE(k4.is_critical);
    EXPECT_EQ(k4.per_edge.size(), 6U);
    for (const auto & [e, col] : k4.per_edge) {
        auto h = delete_edge(Graph::complete(4), e.first, e.second);
        EXPECT_TRUE(is_proper_coloring(h, zero_based(col)));
    }

    auto pendant = Graph::complete(4);
    pendant = disjoint_union(pendant, Graph(1));
    pendant.add_edge(0, 4);
    auto p = check_critical(pendant, 4);
    EXPECT_TRUE(p.is_k_chromatic);
    EXPECT_FALSE(p.is_critical);
    EXPECT_EQ(p.failing_edge, (Edge{0, 4}));

    EXPECT_TRUE(is_k_critical(fixture::ore_k4k4(), 4));
    EXPECT_TRUE(is_k_critical(Graph::cycle(7), 3));
    EXPECT_FALSE(is_k_critical(fixture::moser_spindle(), 3));
    EXPECT_TRUE(is_k_critical(fixture::moser_spindle(), 4));
}

TEST(Critical, IsolatedVertexBreaksCriticality)
{
    auto g = disjoint_union(Graph::complete(4), Graph(1));
    auto r = check_critical(g, 4);
    EXPECT_TRUE(r.is_k_chromatic);
    EXPECT_FALSE(r.is_critical);
    EXPECT_EQ(r.isolated_vertex, 4);
}

TEST(Forcing, Examples)
{
    auto g = fixture::ore_k4k4();
    auto a_side = induced_subgraph(g, set_of({0, 1, 2, 3}));
    EXPECT_EQ(forcing(a_side, 3, 0, 1), ForcingRelation::always_equal);
    auto b_side = induced_subgraph(g, set_of({0, 1, 4, 5, 6}));
    EXPECT_EQ(forcing(b_side, 3, 0, 1), ForcingRelation::always_distinct);
    EXPECT_EQ(forcing(Graph::complete(2), 3, 0, 1), ForcingRelation::always_distinct);
    EXPECT_EQ(forcing(Graph(2), 3, 0, 1), ForcingRelation::free);
    EXPECT_EQ(forcing(Graph::complete(4), 3, 0, 1), ForcingRelation::uncolorable);
}

TEST(Forcing, SymmetricAndRelabelInvariant)
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        auto g = oracle::random_graph<Graph>(n, 0.5, rng);
        int a = static_cast<int>(rng() % static_cast<unsigned>(n));
        int b = (a + 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1))) % n;
        auto r = forcing(g, 3, a, b);
        EXPECT_EQ(r, forcing(g, 3, b, a));
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(r, forcing(permute(g, perm), 3, perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]));
    }
}

TEST(TwoCut, OreCompositionSides)
{
    auto sides = classify_two_cut(fixture::ore_k4k4(), 4, 0, 1);
    EXPECT_EQ(sides.quasi_vertex.to_vector(), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(sides.quasi_edge.to_vector(), (std::vector<int>{0, 1, 4, 5, 6}));
    EXPECT_TRUE(is_quasi_vertex(fixture::ore_k4k4(), 4, sides.quasi_vertex, 0, 1));
    EXPECT_TRUE(is_quasi_edge(fixture::ore_k4k4(), 4, sides.quasi_edge, 0, 1));
}

TEST(TwoCut, RejectsNonCriticalAndNonCuts)
{
    EXPECT_THROW(classify_two_cut(Graph::cycle(4), 4, 0, 2), PreconditionError);
    EXPECT_THROW(classify_two_cut(fixture::ore_k4k4(), 4, 2, 3), PreconditionError);
    EXPECT_THROW(classify_two_cut(Graph::complete(5), 5, 0, 1), PreconditionError);
}

TEST(Clusters, Examples)
{
    EXPECT_EQ(clusters(Graph::complete(4), 4), (std::vector<std::vector<int>>{{0, 1, 2, 3}}));
    auto c = clusters(fixture::ore_k4k4(), 4);
    std::vector<int> seen;
    for (const auto & cl : c)
        seen.insert(seen.end(), cl.begin(), cl.end());
    std::sort(seen.begin(), seen.end());
    std::vector<int> degree3;
    for (int v = 0; v < 7; ++v)
        if (fixture::ore_k4k4().degree(v) == 3)
            degree3.push_back(v);
    EXPECT_EQ(seen, degree3);
    EXPECT_TRUE(clusters(Graph::complete(6), 4).empty());
}

TEST(StandardSets, Examples)
{
    auto s = find_standard_sets(fixture::ore_k4k4(), 4);
    // {1, 4} also cuts off a K_4 minus an edge.
    ASSERT_EQ(s.size(), 2U);
    EXPECT_EQ(s[0].set.to_vector(), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(s[0].x, 0);
    EXPECT_EQ(s[0].y, 1);
    EXPECT_EQ(s[1].set.to_vector(), (std::vector<int>{1, 4, 5, 6}));
    EXPECT_TRUE(find_standard_sets(Graph::complete(4), 4).empty());
    EXPECT_TRUE(find_standard_sets(Graph::complete(6), 4).empty());
}

TEST(ColoringProperties, AgreesWithAssignmentOracle)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        int c = 1 + static_cast<int>(rng() % 4);
        double p = 0.2 + (rng() % 70) / 100.0;
        auto g = oracle::random_graph<Graph>(n, p, rng);
        auto cert = colorable(g, c);
        ASSERT_EQ(cert.colorable, oracle::colourable(g, c)) << write_graph6(g) << " c=" << c;
        if (cert.colorable) {
            EXPECT_TRUE(is_proper_coloring(g, zero_based(cert.witness)));
            EXPECT_EQ(cert.colors_used, distinct_colours(cert.witness));
            EXPECT_LE(cert.colors_used, c);
        }
    }
}

TEST(ColoringProperties, CriticalGraphsHaveLargeMinimumDegree)
{
    std::mt19937_64 rng(37);
    int found = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        auto g = oracle::random_graph<Graph>(n, 0.6, rng);
        for (int k = 3; k <= 5; ++k)
            if (is_k_critical(g, k)) {
                ++found;
                EXPECT_GE(g.min_degree(), k - 1);
            }
    }
    EXPECT_GT(found, 0);
}
