#include "kcrit/bounds.hpp"
#include "kcrit/constructions.hpp"
#include "kcrit/search.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace kcrit;

namespace {

auto forcing_subgraph(int k) -> Graph
{
    auto h = hkt<Graph>(k, 2);
    h.remove_edge(0, k - 1);
    h.remove_edge(0, k);
    return h;
}

auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}

TEST(GallaiChain, Examples)
{
    EXPECT_TRUE(is_complete_graph(gallai_chain<Graph>(4, 1), 4));
    auto two = gallai_chain<Graph>(4, 2);
    EXPECT_EQ(two.size(), 7);
    EXPECT_EQ(two.edge_count(), 11);
    EXPECT_EQ(two.edge_count(), ore_bound(4, 7));
    auto three = gallai_chain<Graph>(5, 3);
    EXPECT_EQ(three.size(), 13);
    EXPECT_EQ(three.edge_count(), 28);
    EXPECT_EQ(rho_full(three, 5), 10);
    EXPECT_THROW(gallai_chain<Graph>(4, 0), PreconditionError);
}

TEST(GallaiChain, CountsCriticalityAndRecognition)
{
    for (int k = 4; k <= 6; ++k)
        for (int j = 1; j <= 4; ++j) {
            auto g = gallai_chain<Graph>(k, j);
            EXPECT_EQ(g.size(), k + (j - 1) * (k - 1));
            EXPECT_EQ(g.edge_count(), k * (k - 1) / 2 + (j - 1) * (k + 1) * (k - 2) / 2);
            EXPECT_TRUE(recognize(g, k).is_ore);
            if (g.size() <= 16) {
                EXPECT_TRUE(is_k_critical(g, k));
            }
        }
}

TEST(Hkt, Examples)
{
    auto h62 = hkt<Graph>(6, 2);
    EXPECT_EQ(h62.size(), 11);
    EXPECT_EQ(h62.edge_count(), 30);
    EXPECT_EQ(rho_full(h62, 6), 8);
    EXPECT_EQ(rho_full(h62, 6), y_k(6));
    EXPECT_EQ(h62.label(0), "u1");
    EXPECT_EQ(h62.label(5), "v1");
    EXPECT_EQ(h62.label(10), "w");

    auto h51 = hkt<Graph>(5, 1);
    EXPECT_EQ(h51.size(), 9);
    EXPECT_EQ(h51.edge_count(), 19);
    EXPECT_TRUE(recognize(h51, 5).is_ore);

    auto h72 = hkt<Graph>(7, 2);
    EXPECT_EQ(connectivity_number(h72), 3);
    EXPECT_TRUE(is_k_critical(h72, 7));
    EXPECT_EQ(rho_full(h72, 7), 16);
}

TEST(Hkt, RejectsBadT)
{
    EXPECT_THROW(hkt<Graph>(6, 0), PreconditionError);
    EXPECT_THROW(hkt<Graph>(6, 3), PreconditionError);
    EXPECT_THROW(hkt<Graph>(5, 3), PreconditionError);
    EXPECT_THROW(hkt<Graph>(3, 1), PreconditionError);
}

TEST(Hkt, CountsAndConnectivity)
{
    for (int k = 4; k <= 8; ++k)
        for (int t = 1; 2 * t < k; ++t) {
            auto g = hkt<Graph>(k, t);
            EXPECT_EQ(g.size(), 2 * k - 1);
            EXPECT_EQ(g.edge_count(), k * (k - 1) - 2 * t + t * t);
            EXPECT_EQ(connectivity_number(g), t + 1) << "k=" << k << " t=" << t;
            if (k <= 7) {
                EXPECT_TRUE(is_k_critical(g, k)) << "k=" << k << " t=" << t;
            }
        }
}

TEST(Hkt, ForcingSubgraphTiesU1ToW)
{
    for (int k : {6, 7}) {
        auto h = forcing_subgraph(k);
        EXPECT_EQ(forcing(h, k - 1, 0, 2 * k - 2), ForcingRelation::always_equal) << "k=" << k;
    }
}

TEST(Toft, ExtendsTheSixSeed)
{
    auto g = hkt<Graph>(6, 2);
    auto out = toft_extend(g, 6, 0, 5, 10, default_toft_parts(6));
    EXPECT_EQ(out.size(), 16);
    EXPECT_EQ(out.edge_count(), 44);
    EXPECT_EQ(rho_full(out, 6), 8);
    EXPECT_TRUE(is_k_critical(out, 6));
    EXPECT_EQ(connectivity_number(out), 3);
    EXPECT_FALSE(out.adjacent(0, 5));
    EXPECT_EQ(out.label(11), "x1_1");

    auto twice = toft_extend(out, 6, 0, 6, 10, default_toft_parts(6));
    EXPECT_EQ(twice.size(), 21);
    EXPECT_EQ(rho_full(twice, 6), 8);
}

TEST(Toft, RejectsEmptyPartsAndBadPrecondition)
{
    auto g = hkt<Graph>(6, 2);
    EXPECT_THROW(toft_extend(g, 6, 0, 5, 10, {0, 2, 3}), PreconditionError);
    EXPECT_THROW(toft_extend(g, 6, 0, 5, 10, {1, 1, 1}), PreconditionError);
    EXPECT_THROW(toft_extend(g, 6, 0, 10, 5, default_toft_parts(6)), PreconditionError);
    try {
        // w = u2 is adjacent to u1, so no colouring can give them one colour
        toft_extend(g, 6, 0, 5, 1, default_toft_parts(6));
        FAIL() << "expected a precondition error";
    } catch (const PreconditionError & e) {
        EXPECT_NE(std::string(e.what()).find("counterexample colouring"), std::string::npos);
    }
    // u3 is not forced to share a colour with u1 and v1
    EXPECT_THROW(toft_extend(g, 6, 0, 5, 7, default_toft_parts(6)), PreconditionError);
}

TEST(Toft, EveryPartitionPreservesPotential)
{
    auto g = hkt<Graph>(6, 2);
    const auto base = rho_full(g, 6);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 4; ++b) {
            auto out = toft_extend(g, 6, 0, 5, 10, {a, b, 5 - a - b});
            EXPECT_EQ(out.size() - g.size(), 5);
            EXPECT_EQ(out.edge_count() - g.edge_count(), 7 * 4 / 2);
            EXPECT_EQ(rho_full(out, 6), base);
            EXPECT_TRUE(is_k_critical(out, 6));
        }
}

TEST(GkFamily, SixSeedAndIterates)
{
    auto zero = gk_family<Graph>(6, 0);
    ASSERT_EQ(zero.members.size(), 1U);
    EXPECT_TRUE(zero.members[0].graph.same_edges(hkt<Graph>(6, 2)));

    auto fam = gk_family<Graph>(6, 2);
    ASSERT_EQ(fam.members.size(), 3U);
    EXPECT_EQ(fam.members[1].e, (Edge{0, 5}));
    EXPECT_EQ(fam.members[2].e, (Edge{0, 6}));
    const auto & last = fam.members.back().graph;
    EXPECT_EQ(last.size(), 21);
    EXPECT_EQ(rho_full(last, 6), 8);
    EXPECT_FALSE(recognize(last, 6).is_ore);
    for (const auto & m : fam.members) {
        EXPECT_EQ(connectivity_number(m.graph), 3);
        EXPECT_TRUE(is_k_critical(m.graph, 6));
    }
}

TEST(GkFamily, SmallSeeds)
{
    auto four = gk_family<Graph>(4, 1);
    const auto & g = four.members.back().graph;
    EXPECT_EQ(g.size(), 11);
    EXPECT_EQ(g.edge_count(), 18);
    EXPECT_EQ(rho_full(g, 4), 2);
    for (int k : {4, 5}) {
        auto fam = gk_family<Graph>(k, 2);
        for (const auto & m : fam.members) {
            EXPECT_EQ(rho_full(m.graph, k), y_k(k));
            EXPECT_EQ(connectivity_number(m.graph), 3);
            EXPECT_TRUE(is_k_critical(m.graph, k));
            EXPECT_FALSE(recognize(m.graph, k).is_ore);
        }
    }
    EXPECT_THROW(gk_family<Graph>(FamilySeed{4, "3 0\n", 0, 0, {}, {}}, 1), PreconditionError);
}

TEST(GkFamily, SeedsMatchDataFilesAndSearch)
{
    for (int k : {4, 5}) {
        auto seed = family_seed(k);
        auto file = read_file(std::string(KCRIT_SOURCE_DIR) + "/data/seed_k" + std::to_string(k) + ".el");
        ASSERT_FALSE(file.empty());
        auto from_file = parse_edge_list<Graph>(file);
        auto g = parse_edge_list<Graph>(seed.edge_list);
        EXPECT_TRUE(from_file.same_edges(g));
        EXPECT_TRUE(is_k_critical(g, k));
        EXPECT_EQ(connectivity_number(g), 3);
        EXPECT_EQ(rho_full(g, k), y_k(k));

        auto h = g;
        for (auto [a, b] : seed.removed)
            h.remove_edge(a, b);
        EXPECT_EQ(forcing(h, k - 1, seed.u, seed.w), ForcingRelation::always_equal);

        const int m = static_cast<int>((static_cast<long long>(k + 1) * (k - 2) * g.size() - y_k(k)) / (2 * (k - 1)));
        auto found = find_figure_graphs<Graph>({k, g.size(), m, true, y_k(k)});
        ASSERT_EQ(found.graphs.size(), 1U);
        EXPECT_TRUE(is_isomorphic(found.graphs[0], g));
    }
}

TEST(TwoClique, CriticalWithKSquaredMinusThreeEdges)
{
    for (int k = 4; k <= 7; ++k) {
        auto g = two_clique<Graph>(k);
        EXPECT_EQ(g.size(), 2 * k);
        EXPECT_EQ(g.edge_count(), k * k - 3);
        EXPECT_TRUE(is_k_critical(g, k)) << "k=" << k;
        EXPECT_EQ(connectivity_number(g), 3);
        EXPECT_FALSE(recognize(g, k).is_ore);
        EXPECT_LE(rho_full(g, k), y_k(k));
    }
    // the 3-connected seeds for k = 4 and 5 are the two-clique graphs
    EXPECT_TRUE(is_isomorphic(two_clique<Graph>(4), parse_edge_list<Graph>(family_seed(4).edge_list)));
    EXPECT_TRUE(is_isomorphic(two_clique<Graph>(5), parse_edge_list<Graph>(family_seed(5).edge_list)));
    EXPECT_THROW(two_clique<Graph>(5, {0, 2, 2}), PreconditionError);
}
