#include <gtest/gtest.h>

#include <random>

#include "cospec/graph_io.hpp"
#include "cospec/spectra.hpp"

using namespace cospec;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t n, unsigned density) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng() % 100 < density) g.add_edge(u, v);
    return g;
}

} // namespace

TEST(CharPoly, SmallGraphs) {
    EXPECT_EQ(char_poly(make_complete(1)), IntPoly({0, 1}));
    EXPECT_EQ(char_poly(make_complete(2)), IntPoly({-1, 0, 1}));
    // (x-2)(x+1)^2
    EXPECT_EQ(char_poly(make_complete(3)), IntPoly({-2, -3, 0, 1}));
    EXPECT_EQ(char_poly(make_complete_split(2, 2)), IntPoly({0, -4, -5, 0, 1}));
    // Path P4.
    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    EXPECT_EQ(char_poly(p4), IntPoly({1, 0, -3, 0, 1}));
}

TEST(CharPoly, CompleteGraphClosedForm) {
    for (std::size_t n = 1; n <= 30; ++n) {
        auto expected = IntPoly::linear(static_cast<long>(n) - 1) * IntPoly({1, 1}).pow(static_cast<unsigned>(n - 1));
        EXPECT_EQ(char_poly(make_complete(n)), expected) << n;
    }
}

TEST(CharPoly, TwoRoutesAgreeOnRandomGraphs) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 1 + rng() % 18;
        auto g = random_graph(rng, n, static_cast<unsigned>(rng() % 100));
        auto a = char_poly(g);
        EXPECT_EQ(a, char_poly(IntMatrix::adjacency(g))) << to_graph6(g);
        EXPECT_EQ(a, char_poly_interpolated(g)) << to_graph6(g);
        EXPECT_EQ(a.coeff(n - 1), 0);
        if (n >= 2) {
            EXPECT_EQ(a.coeff(n - 2), -static_cast<long>(g.edge_count()));
        }
    }
}

TEST(CharPoly, NonSymmetricMatrix) {
    IntMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 3;
    m(1, 1) = 4;
    // x^2 - 5x - 2
    EXPECT_EQ(char_poly(m), IntPoly({-2, -5, 1}));
    EXPECT_THROW(char_poly(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(Determinant, Bareiss) {
    IntMatrix m(3, 3);
    long vals[9] = {2, -1, 0, -1, 2, -1, 0, -1, 2};
    for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = vals[i];
    EXPECT_EQ(determinant(m), 4);
    EXPECT_EQ(determinant(IntMatrix::adjacency(make_complete(5))), 4);
    EXPECT_EQ(determinant(IntMatrix::adjacency(make_complete_split(2, 2))), 0);
}

TEST(Rank, OverRationals) {
    EXPECT_EQ(rank_over_rationals(IntMatrix::adjacency(make_complete(5))), 5u);
    EXPECT_EQ(rank_over_rationals(IntMatrix::adjacency(make_complete_split(4, 1))), 2u);
    EXPECT_EQ(rank_over_rationals(IntMatrix(3, 4)), 0u);
}

TEST(Rank, PineappleIdentities) {
    for (Int p = 3; p <= 9; ++p)
        for (Int k = 1; k <= p - 2; ++k)
            for (Int q = 1; q <= 6; ++q) {
                auto g = make_pineapple({p, k, q});
                auto a = IntMatrix::adjacency(g);
                EXPECT_EQ(rank_over_rationals(a), static_cast<std::size_t>(p + 1));
                EXPECT_EQ(rank_over_rationals(IntMatrix::identity(g.order()) + a), static_cast<std::size_t>(q + 2));
            }
}

TEST(Cospectral, SaltireAndStar) {
    // K_{1,4} and C4 ∪ K1 are the smallest cospectral pair.
    Graph c4(5);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    EXPECT_TRUE(is_cospectral(make_complete_split(4, 1), c4));
    EXPECT_FALSE(is_cospectral(make_complete(5), c4));
    EXPECT_FALSE(is_cospectral(make_complete(4), c4));
}

TEST(Quotient, PineappleThreeParts) {
    PineappleParams pk{8, 3, 5};
    auto g = make_pineapple(pk);
    std::vector<std::vector<std::size_t>> parts{{0, 1, 2}, {3, 4, 5, 6, 7}, {8, 9, 10, 11, 12}};
    auto q = quotient_matrix(g, parts);
    long expected[3][3] = {{2, 5, 5}, {3, 4, 0}, {3, 0, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(q.entries(i, j), expected[i][j]);
    EXPECT_TRUE(poly_divides(char_poly(q), char_poly(g)));
}

TEST(Quotient, RejectsBadPartitions) {
    auto g = make_pineapple({5, 2, 2});
    EXPECT_THROW(quotient_matrix(g, {{0, 1, 2}, {3, 4}, {5, 6}}), NonEquitablePartition);
    EXPECT_THROW(quotient_matrix(g, {{0, 1}, {2, 3, 4}}), std::invalid_argument);
    EXPECT_THROW(quotient_matrix(g, {{0, 1}, {1, 2, 3, 4}, {5, 6}}), std::invalid_argument);
    EXPECT_THROW(quotient_matrix(g, {{0, 1}, {}, {2, 3, 4, 5, 6}}), std::invalid_argument);
}
