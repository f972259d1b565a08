#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "lambdadet/aztec_graph.hpp"
#include "lambdadet/condense.hpp"
#include "lambdadet/reproduce.hpp"

using namespace lambdadet;

namespace {

// Every perfect matching, as a list of edge indices, by plain search over
// the edge list (no memo).
void enumerate_matchings(const std::vector<std::pair<Domino, BigRat>>& edges, std::set<Cell> free,
                         std::vector<int>& chosen, std::vector<std::vector<int>>& out) {
    if (free.empty()) {
        out.push_back(chosen);
        return;
    }
    const Cell v = *free.begin();
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const Domino& d = edges[static_cast<std::size_t>(e)].first;
        if (!(d.first == v || d.second == v)) continue;
        const Cell u = d.first == v ? d.second : d.first;
        if (!free.count(u)) continue;
        auto rest = free;
        rest.erase(v);
        rest.erase(u);
        chosen.push_back(e);
        enumerate_matchings(edges, std::move(rest), chosen, out);
        chosen.pop_back();
    }
}

std::vector<std::vector<int>> all_matchings(const AztecGraph& g) {
    const auto edges = g.edges();
    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    enumerate_matchings(edges, std::set<Cell>(g.vertices().begin(), g.vertices().end()), chosen, out);
    return out;
}

BigRat brute_weight(const AztecGraph& g) {
    const auto edges = g.edges();
    BigRat total;
    for (const auto& m : all_matchings(g)) {
        BigRat w(1);
        for (int e : m) w *= edges[static_cast<std::size_t>(e)].second;
        total += w;
    }
    return total;
}

} // namespace

TEST(Graph, Structure) {
    for (int n = 0; n <= 5; ++n) {
        const AztecGraph g(n);
        EXPECT_EQ(g.vertices().size(), static_cast<std::size_t>(2 * n * (n + 1)));
        for (const auto& [d, w] : g.edges()) {
            EXPECT_EQ(std::abs(d.first.row - d.second.row) + std::abs(d.first.col - d.second.col), 1);
            EXPECT_EQ(w, BigRat(1));
        }
    }
    EXPECT_EQ(AztecGraph(1).edge_count(), 4u);
    EXPECT_THROW(AztecGraph(-1), InvalidGraph);
}

TEST(Graph, CornersAreExtremeEdges) {
    const AztecGraph g(3);
    for (const Domino& d : {g.nw_corner(), g.ne_corner(), g.sw_corner(), g.se_corner()}) {
        EXPECT_TRUE(g.has_edge(d.first, d.second));
    }
    EXPECT_EQ(g.nw_corner(), Domino({1, 3}, {1, 4}));
    EXPECT_EQ(g.se_corner(), Domino({6, 3}, {6, 4}));
}

TEST(Graph, WeightErrors) {
    AztecGraph g(2);
    EXPECT_THROW(g.set_weight({1, 2}, {1, 3}, BigRat(-1)), InvalidGraph);
    EXPECT_THROW(g.set_weight({1, 1}, {1, 2}, BigRat(1)), InvalidGraph);
    EXPECT_THROW(g.weight({1, 2}, {2, 3}), InvalidGraph);
}

TEST(MatchingSum, SpecExamples) {
    EXPECT_EQ(matching_weight_sum(AztecGraph(0)), BigRat(1));
    EXPECT_EQ(matching_weight_sum(AztecGraph(1)), BigRat(2));
    EXPECT_EQ(matching_weight_sum(AztecGraph(2)), BigRat(8));
    EXPECT_EQ(all_matchings(AztecGraph(2)).size(), 8u);
}

TEST(MatchingSum, CornerWeightZeroRemovesItsMatchings) {
    AztecGraph g(2);
    const Domino corner = g.nw_corner();
    const auto edges = g.edges();
    int corner_index = -1;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if (edges[static_cast<std::size_t>(e)].first == corner) corner_index = e;
    ASSERT_GE(corner_index, 0);
    int without = 0;
    for (const auto& m : all_matchings(g)) without += std::find(m.begin(), m.end(), corner_index) == m.end();

    g.set_weight(corner.first, corner.second, BigRat(0));
    EXPECT_EQ(matching_weight_sum(g), BigRat(without));
    EXPECT_EQ(matching_weight_sum(g), brute_weight(g));
}

TEST(MatchingSum, PowersOfTwo) {
    for (int n = 0; n <= 5; ++n) {
        EXPECT_EQ(matching_weight_sum(AztecGraph(n)), BigRat(pow2(static_cast<unsigned long>(n * (n + 1) / 2))));
    }
    EXPECT_THROW(matching_weight_sum(AztecGraph(6)), OrderExceeded);
}

TEST(MatchingSum, AgreesWithPlainEnumeration) {
    std::mt19937_64 rng(20040516);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            AztecGraph g(n);
            randomize_weights(g, rng);
            EXPECT_EQ(matching_weight_sum(g), brute_weight(g));
        }
    }
}

TEST(MatchingSum, EqualsTilingCount) {
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(matching_weight_sum(AztecGraph(n)), BigRat(count_tilings(aztec_region(n))));
    }
}

TEST(Kuo, SpecExamples) {
    const KuoSides two = kuo_sides(AztecGraph(2));
    EXPECT_EQ(two.lhs, BigRat(8));  // 8 * 1
    EXPECT_EQ(two.rhs, BigRat(8));  // 1*1*2*2 + 1*1*2*2
    const KuoDecomposition d3 = kuo_decompose(AztecGraph(3));
    EXPECT_EQ(matching_weight_sum(d3.g_nw), BigRat(8));
    EXPECT_EQ(matching_weight_sum(d3.g_c), BigRat(2));
    EXPECT_TRUE(kuo_identity_check(AztecGraph(3)));
    EXPECT_THROW(kuo_sides(AztecGraph(1)), OrderExceeded);
    EXPECT_THROW(kuo_sides(AztecGraph(6)), OrderExceeded);
}

TEST(Kuo, SubgraphsInheritWeights) {
    std::mt19937_64 rng(3);
    AztecGraph g(3);
    randomize_weights(g, rng);
    const KuoDecomposition d = kuo_decompose(g);
    const std::pair<const AztecGraph*, std::pair<int, int>> subs[] = {
        {&d.g_nw, {0, 1}}, {&d.g_ne, {1, 2}}, {&d.g_sw, {1, 0}}, {&d.g_se, {2, 1}}, {&d.g_c, {2, 2}}};
    for (const auto& [sub, off] : subs) {
        for (const auto& [e, w] : sub->edges()) {
            const Cell a{e.first.row + off.first, e.first.col + off.second};
            const Cell b{e.second.row + off.first, e.second.col + off.second};
            EXPECT_EQ(w, g.weight(a, b));
        }
    }
}

TEST(Kuo, RandomWeights) {
    std::mt19937_64 rng(20040516);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            AztecGraph g(n);
            randomize_weights(g, rng);
            EXPECT_TRUE(kuo_identity_check(g)) << graph_to_json(g).dump();
        }
    }
}

// With unit corner weights, W(G) = (W(G_NW) W(G_SE) + W(G_NE) W(G_SW)) / W(G_C),
// the recursive formula at lambda = 1. On all-ones graphs the values must
// match the (+1)-pyramid of the all-ones matrix.
TEST(Kuo, SimplifiedRecurrenceMatchesAllOnesPyramid) {
    const auto layers = condensation_trace(all_ones_matrix(6), 1);
    for (int n = 2; n <= 5; ++n) {
        const KuoDecomposition d = kuo_decompose(AztecGraph(n));
        const BigRat w = (matching_weight_sum(d.g_nw) * matching_weight_sum(d.g_se) +
                          matching_weight_sum(d.g_ne) * matching_weight_sum(d.g_sw)) /
                         matching_weight_sum(d.g_c);
        EXPECT_EQ(w, matching_weight_sum(AztecGraph(n)));
        EXPECT_EQ(w, layers[static_cast<std::size_t>(n)](1, 1));
    }
}

TEST(Kuo, SimplifiedRecurrenceRandomInterior) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        AztecGraph g(3);
        randomize_weights(g, rng);
        for (const Domino& c : {g.nw_corner(), g.ne_corner(), g.sw_corner(), g.se_corner()})
            g.set_weight(c.first, c.second, BigRat(1));
        const KuoDecomposition d = kuo_decompose(g);
        const BigRat wc = matching_weight_sum(d.g_c);
        if (wc.is_zero()) continue;
        EXPECT_EQ(matching_weight_sum(g), (matching_weight_sum(d.g_nw) * matching_weight_sum(d.g_se) +
                                           matching_weight_sum(d.g_ne) * matching_weight_sum(d.g_sw)) /
                                              wc);
    }
}

TEST(Json, GraphRoundTrip) {
    std::mt19937_64 rng(1);
    AztecGraph g(2);
    randomize_weights(g, rng);
    const AztecGraph back = graph_from_json(graph_to_json(g), 2);
    EXPECT_EQ(back.edges(), g.edges());
}

TEST(Json, MissingEdgesGetZeroWeight) {
    const auto doc = nlohmann::json::parse(R"([[[1,1],[1,2],"1/2"], [[2,1],[2,2],3]])");
    const AztecGraph g = graph_from_json(doc, 1);
    EXPECT_EQ(g.weight({1, 1}, {1, 2}), BigRat(1, 2));
    EXPECT_EQ(g.weight({2, 1}, {2, 2}), BigRat(3));
    EXPECT_EQ(g.weight({1, 1}, {2, 1}), BigRat(0));
    EXPECT_EQ(matching_weight_sum(g), BigRat(3, 2));
}

TEST(Json, GraphErrors) {
    EXPECT_THROW(graph_from_json(nlohmann::json::parse("{}"), 1), ParseError);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"([[[1,1],[1,2]]])"), 1), ParseError);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"([[[1,1],[2,2],"1"]])"), 1), InvalidGraph);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"([[[1,1],[1,2],"-1"]])"), 1), InvalidGraph);
}
