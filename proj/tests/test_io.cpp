#include "kcrit/io.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kcrit;

TEST(EdgeList, ParsesWithComments)
{
    auto g = parse_edge_list("# a triangle\n3 3\n0 1\n1 2 # closing\n\n2 0\n");
    EXPECT_EQ(g.size(), 3);
    EXPECT_EQ(g.edge_count(), 3);
}

TEST(EdgeList, WriterRoundTrips)
{
    auto g = Graph::cycle(6);
    EXPECT_EQ(write_edge_list(g), "6 6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n");
    EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
}

TEST(EdgeList, ErrorsNameTheLine)
{
    auto message_of = [](const std::string & text) {
        try {
            parse_edge_list(text);
        }
        catch (const InputError & e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message_of("3 2\n0 1\n1 x\n").find("line 3"), std::string::npos);
    EXPECT_NE(message_of("3 2\n0 1\n1 3\n").find("line 3"), std::string::npos);
    EXPECT_NE(message_of("3 2\n0 1\n1 0\n").find("duplicate"), std::string::npos);
    EXPECT_NE(message_of("3 2\n0 0\n1 2\n").find("self-loop"), std::string::npos);
    EXPECT_NE(message_of("3 3\n0 1\n1 2\n").find("line 1"), std::string::npos);
    EXPECT_NE(message_of("5\n").find("line 1"), std::string::npos);
    EXPECT_EQ(message_of(""), "line 1: missing \"n m\" header");
}

TEST(Graph6, KnownEncodings)
{
    EXPECT_EQ(write_graph6(Graph::complete(4)), "C~");
    EXPECT_EQ(write_graph6(Graph(0)), "?");
    EXPECT_EQ(write_graph6(Graph(1)), "@");
    // Petersen graph, as printed by nauty's geng/showg.
    auto petersen = parse_graph6("IheA@GUAo");
    EXPECT_EQ(petersen.size(), 10);
    EXPECT_EQ(petersen.edge_count(), 15);
    for (int v = 0; v < 10; ++v)
        EXPECT_EQ(petersen.degree(v), 3);
}

TEST(Graph6, LongSizeField)
{
    BasicGraph<2> g(100);
    g.add_edge(0, 99);
    g.add_edge(50, 51);
    auto text = write_graph6(g);
    EXPECT_EQ(text[0], '~');
    EXPECT_EQ(parse_graph6<BasicGraph<2>>(text), g);
}

TEST(Graph6, RejectsMalformed)
{
    EXPECT_THROW(parse_graph6("C"), InputError);      // body missing
    EXPECT_THROW(parse_graph6("C~~"), InputError);    // body too long
    EXPECT_THROW(parse_graph6("B!"), InputError);     // byte out of range
    EXPECT_THROW(parse_graph6("Bx"), InputError);     // nonzero padding (n=3 has 3 bits)
}

TEST(Graph6, RoundTripIsBitExact)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = static_cast<int>(rng() % 40);
        auto g = oracle::random_graph<Graph>(n, 0.3, rng);
        auto text = write_graph6(g);
        auto back = parse_graph6(text);
        EXPECT_EQ(back, g);
        EXPECT_EQ(write_graph6(back), text);
    }
}

TEST(Format, AutoDetection)
{
    EXPECT_EQ(detect_format("C~\n"), GraphFormat::graph6);
    EXPECT_EQ(detect_format(">>graph6<<C~\n"), GraphFormat::graph6);
    EXPECT_EQ(detect_format("# comment\n4 6\n"), GraphFormat::edge_list);
    EXPECT_EQ(detect_format("  4 0\n"), GraphFormat::edge_list);
    EXPECT_EQ(parse_graph("C~").edge_count(), 6);
    EXPECT_EQ(parse_graph(">>graph6<<C~", GraphFormat::graph6).edge_count(), 6);
}
