#include "kcrit/potential.hpp"
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

}

TEST(Rho, ClosedForms)
{
    EXPECT_EQ(rho(Graph::complete(4), 4, Graph::complete(4).all_vertices()), 4);
    EXPECT_EQ(rho(Graph::cycle(6), 5, set_of({3})), 18);
    EXPECT_EQ(rho_full(Graph::complete(2), 5), 28);
    EXPECT_EQ(rho_full(fixture::ore_k4k4(), 4), 4);
    EXPECT_EQ(rho(Graph::complete(3), 4, Graph::Set{}), 0);
    for (int k = 4; k <= 9; ++k) {
        EXPECT_EQ(rho_complete(k, k), k * (k - 3));
        EXPECT_EQ(rho_complete(k, 1), (k + 1) * (k - 2));
        EXPECT_EQ(rho_complete(k, 2), 2 * (k * k - 2 * k - 1));
    }
}

TEST(Rho, RejectsSmallK)
{
    EXPECT_THROW(rho_full(Graph::complete(3), 3), PreconditionError);
    EXPECT_THROW(min_potential(Graph::complete(3), 2), PreconditionError);
}

TEST(MinPotential, CompleteGraph)
{
    auto r = min_potential(Graph::complete(4), 4);
    EXPECT_EQ(r.p_k, 4);
    ASSERT_EQ(r.p_k_minimizers.size(), 1U);
    EXPECT_EQ(r.p_k_minimizers[0], (std::vector<int>{0, 1, 2, 3}));
    // pairs give 14, triples 12
    EXPECT_EQ(r.p_tilde, 12);
}

TEST(MinPotential, OreGraphProperSubsets)
{
    auto g = fixture::ore_k4k4();
    auto r = min_potential(g, 4, PotentialRange::proper_nontrivial);
    ASSERT_TRUE(r.p_tilde.has_value());
    EXPECT_GE(*r.p_tilde, 10);
    EXPECT_EQ(r.rho_full, 4);
    for (const auto & w : r.p_tilde_minimizers) {
        Graph::Set s;
        for (int v : w)
            s.set(v);
        EXPECT_EQ(rho(g, 4, s), *r.p_tilde);
        EXPECT_GE(w.size(), 2U);
        EXPECT_LE(w.size(), 6U);
    }
}

TEST(MinPotential, EmptyRangeIsAnError)
{
    EXPECT_THROW(min_potential(Graph(1), 4, PotentialRange::proper_nontrivial), PreconditionError);
    EXPECT_THROW(min_potential(Graph(0), 4), PreconditionError);
}

TEST(MinPotential, LimitIsEnforced)
{
    Limits small;
    small.potential_max_n = 6;
    EXPECT_THROW(min_potential(Graph::cycle(7), 4, PotentialRange::all_nonempty, small), LimitError);
}

TEST(Submodularity, Examples)
{
    auto k4 = Graph::complete(4);
    EXPECT_TRUE(submodular_identity_holds(k4, 4, set_of({0, 1, 2}), set_of({1, 2, 3})));
    EXPECT_EQ(rho(k4, 4, set_of({1, 2})) + rho(k4, 4, k4.all_vertices()), 18);
    auto c6 = Graph::cycle(6);
    EXPECT_TRUE(submodular_identity_holds(c6, 5, set_of({0, 1}), set_of({3, 4})));
    EXPECT_EQ(rho(c6, 5, set_of({0, 1, 3, 4})), rho(c6, 5, set_of({0, 1})) + rho(c6, 5, set_of({3, 4})));
}

TEST(PotentialProperties, RandomGraphs)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        int k = 4 + static_cast<int>(rng() % 4);
        auto g = oracle::random_graph<Graph>(n, 0.5, rng);
        Graph::Set x, y;
        for (int v = 0; v < n; ++v) {
            if (rng() & 1U)
                x.set(v);
            if (rng() & 1U)
                y.set(v);
        }
        EXPECT_TRUE(submodular_identity_holds(g, k, x, y));
        for (const auto & s : {x, y, x & y, x | y}) {
            auto r = rho(g, k, s);
            EXPECT_EQ(r % 2, 0);
            auto size = s.count();
            EXPECT_GE(r, rho_complete(k, size));
            if (size >= 1 && size <= k - 1) {
                EXPECT_GE(r, (k + 1) * (k - 2));
            }
            if (size >= 2 && size <= k - 1) {
                EXPECT_GE(r, 2 * (k - 2) * (k - 1));
            }
        }
    }
}

TEST(PotentialProperties, AgreesWithDirectEnumeration)
{
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        int k = 4 + static_cast<int>(rng() % 3);
        double p = 0.3 + (rng() % 60) / 100.0;
        auto g = oracle::random_graph<Graph>(n, p, rng);
        auto expected = oracle::potential_minima(g, k);
        auto r = min_potential(g, k, n >= 3 ? PotentialRange::proper_nontrivial : PotentialRange::all_nonempty);
        EXPECT_EQ(r.p_k, expected.all);
        EXPECT_LE(r.p_k, r.rho_full);
        EXPECT_LE(r.p_k, (k + 1) * (k - 2));
        if (n >= 3) {
            ASSERT_TRUE(r.p_tilde.has_value());
            EXPECT_EQ(*r.p_tilde, expected.tilde);
        }
        for (const auto & w : r.p_k_minimizers) {
            Graph::Set s;
            for (int v : w)
                s.set(v);
            EXPECT_EQ(rho(g, k, s), r.p_k);
        }
    }
}

TEST(PotentialProperties, ThreadCountDoesNotChangeTheReport)
{
    std::mt19937_64 rng(23);
    auto g = oracle::random_graph<Graph>(13, 0.5, rng);
    set_threads(1);
    auto one = min_potential(g, 5, PotentialRange::proper_nontrivial);
    set_threads(4);
    auto four = min_potential(g, 5, PotentialRange::proper_nontrivial);
    set_threads(0);
    EXPECT_EQ(one.p_k, four.p_k);
    EXPECT_EQ(one.p_tilde, four.p_tilde);
    EXPECT_EQ(one.p_k_minimizers, four.p_k_minimizers);
    EXPECT_EQ(one.p_tilde_minimizers, four.p_tilde_minimizers);
}
