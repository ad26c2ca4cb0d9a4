#include <gtest/gtest.h>

#include "cospec/graph.hpp"

using namespace cospec;

TEST(Graph, RejectsEmptyAndSelfLoops) {
    EXPECT_THROW(Graph(0), std::invalid_argument);
    Graph g(3);
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
}

TEST(Graph, AdjacencyIsSymmetric) {
    Graph g(70);
    g.add_edge(3, 65);
    g.add_edge(64, 0);
    EXPECT_TRUE(g.adjacent(65, 3));
    EXPECT_TRUE(g.adjacent(0, 64));
    EXPECT_FALSE(g.adjacent(3, 3));
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.neighbors(0), (std::vector<std::size_t>{64}));
}

TEST(Graph, Complete) {
    EXPECT_EQ(make_complete(1).edge_count(), 0u);
    EXPECT_EQ(make_complete(2).edge_count(), 1u);
    EXPECT_EQ(make_complete(4).edge_count(), 6u);
}

TEST(Graph, CompleteSplit) {
    auto g = make_complete_split(2, 2);
    EXPECT_EQ(g.order(), 4u);
    EXPECT_EQ(g.edge_count(), 5u);
    EXPECT_EQ(make_complete_split(1, 1).edge_count(), 1u);
    auto big = make_complete_split(3, 36);
    EXPECT_EQ(big.order(), 39u);
    EXPECT_EQ(big.edge_count(), 738u);
    EXPECT_THROW(make_complete_split(0, 2), std::invalid_argument);
}

TEST(Graph, Pineapple) {
    auto g = make_pineapple({4, 1, 1});
    EXPECT_EQ(g.order(), 5u);
    EXPECT_EQ(g.edge_count(), 7u);
    EXPECT_EQ(make_pineapple({3, 1, 1}).edge_count(), 4u);
    auto big = make_pineapple({11, 1, 56});
    EXPECT_EQ(big.order(), 67u);
    EXPECT_EQ(big.edge_count(), 111u);
    EXPECT_THROW(make_pineapple({3, 2, 1}), std::invalid_argument);
    EXPECT_THROW(make_pineapple({5, 1, 0}), std::invalid_argument);
    EXPECT_THROW(make_pineapple({5, 0, 2}), std::invalid_argument);
}

TEST(Graph, PineappleDegrees) {
    auto g = make_pineapple({6, 2, 3});
    for (std::size_t v = 0; v < 2; ++v) EXPECT_EQ(g.degree(v), 5u + 3u);
    for (std::size_t v = 2; v < 6; ++v) EXPECT_EQ(g.degree(v), 5u);
    for (std::size_t v = 6; v < 9; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(MixedExtension, Validation) {
    EXPECT_THROW(MixedExtension({3}), std::invalid_argument);
    EXPECT_THROW(MixedExtension({3, 0, 2}), std::invalid_argument);
    MixedExtension m{1, 2, -4, 2, 1};
    EXPECT_EQ(m.base_len(), 5u);
    EXPECT_EQ(m.order(), 10);
    EXPECT_EQ(m.to_string(), "(1,2,-4,2,1)");
}

TEST(MixedExtension, Realization) {
    auto g = make_mixed_extension(MixedExtension{1, 2, -4, 2, 1});
    EXPECT_EQ(g.order(), 10u);
    // 1 + 2*4 + 4*2 + 2*1 joins, plus cliques K2, K2.
    EXPECT_EQ(g.edge_count(), 2u + 8u + 8u + 2u + 1u + 1u);
    auto cocliques = make_mixed_extension(MixedExtension{-3, -4});
    EXPECT_EQ(cocliques.edge_count(), 12u);
}

TEST(MixedExtension, PineappleIsItsOwnType) {
    for (PineappleParams pk : {PineappleParams{4, 1, 1}, PineappleParams{8, 3, 5}, PineappleParams{6, 4, 2}}) {
        auto me = make_mixed_extension(pineapple_type(pk));
        auto g = make_pineapple(pk);
        EXPECT_EQ(me.order(), g.order());
        EXPECT_EQ(me.edge_count(), g.edge_count());
        EXPECT_EQ(me.degree_sequence(), g.degree_sequence());
    }
}

TEST(MixedExtension, IsomorphismByNormalForm) {
    EXPECT_TRUE(mixed_ext_isomorphic(MixedExtension{2, -3, 6}, MixedExtension{6, -3, 2}));
    // A singleton part is both a clique and a coclique.
    EXPECT_TRUE(mixed_ext_isomorphic(MixedExtension{-1, 2, 3}, MixedExtension{1, 2, 3}));
    EXPECT_FALSE(mixed_ext_isomorphic(MixedExtension{2, -3, 6}, MixedExtension{-2, -3, 6}));
}

TEST(Graph, DisjointUnion) {
    auto g = disjoint_union({make_complete(3), make_complete_split(2, 2)}, 4);
    EXPECT_EQ(g.order(), 11u);
    EXPECT_EQ(g.edge_count(), 8u);
    EXPECT_TRUE(g.adjacent(3, 4));
    EXPECT_FALSE(g.adjacent(2, 3));
    for (std::size_t v = 7; v < 11; ++v) EXPECT_EQ(g.degree(v), 0u);
}
