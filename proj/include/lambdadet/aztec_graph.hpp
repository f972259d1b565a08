#ifndef LAMBDADET_AZTEC_GRAPH_HPP
#define LAMBDADET_AZTEC_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "lambdadet/bigrat.hpp"
#include "lambdadet/error.hpp"
#include "lambdadet/tilings.hpp"

namespace lambdadet {

/// Edge-weighted Aztec diamond graph of order n. Vertices are the cells of
/// aztec_region(n), edges join side-adjacent cells.
///
/// Compass directions follow the usual drawing of this graph, turned 45
/// degrees against the cell picture: the north-west corner edge is the
/// domino slot in the top row of cells, north-east the one in the right
/// column, south-west the left column and south-east the bottom row.
class AztecGraph {
public:
    explicit AztecGraph(int order) : order_(order) {
        if (order < 0) throw InvalidGraph("negative Aztec order");
        const CellRegion cells = aztec_region(order);
        for (const auto& c : cells.cells()) {
            for (const Cell nb : {Cell{c.row, c.col + 1}, Cell{c.row + 1, c.col}}) {
                if (cells.contains(nb)) weights_.emplace(key(c, nb), BigRat(1));
            }
        }
        vertices_.assign(cells.cells().begin(), cells.cells().end());
    }

    int order() const noexcept { return order_; }
    const std::vector<Cell>& vertices() const noexcept { return vertices_; }
    std::size_t edge_count() const noexcept { return weights_.size(); }

    bool has_edge(Cell a, Cell b) const { return weights_.count(key(a, b)) != 0; }

    const BigRat& weight(Cell a, Cell b) const {
        auto it = weights_.find(key(a, b));
        if (it == weights_.end()) throw InvalidGraph("no edge " + describe(a, b));
        return it->second;
    }

    void set_weight(Cell a, Cell b, const BigRat& w) {
        auto it = weights_.find(key(a, b));
        if (it == weights_.end()) throw InvalidGraph("no edge " + describe(a, b));
        if (w.sign() < 0) throw InvalidGraph("negative weight on " + describe(a, b));
        it->second = w;
    }

    /// (first, second, weight) for every edge, in a fixed order.
    std::vector<std::pair<Domino, BigRat>> edges() const {
        std::vector<std::pair<Domino, BigRat>> out;
        for (const auto& [k, w] : weights_) out.emplace_back(Domino(k.first, k.second), w);
        return out;
    }

    /// Order-m Aztec graph whose cell (r, c) is this graph's (r + dr, c + dc),
    /// keeping the weights of the edges it inherits.
    AztecGraph subgraph(int m, int dr, int dc) const {
        AztecGraph sub(m);
        for (auto& [k, w] : sub.weights_) {
            w = weight({k.first.row + dr, k.first.col + dc}, {k.second.row + dr, k.second.col + dc});
        }
        return sub;
    }

    Domino nw_corner() const { return {Cell{1, order_}, Cell{1, order_ + 1}}; }
    Domino ne_corner() const { return {Cell{order_, 2 * order_}, Cell{order_ + 1, 2 * order_}}; }
    Domino sw_corner() const { return {Cell{order_, 1}, Cell{order_ + 1, 1}}; }
    Domino se_corner() const { return {Cell{2 * order_, order_}, Cell{2 * order_, order_ + 1}}; }

private:
    using Key = std::pair<Cell, Cell>;

    static Key key(Cell a, Cell b) { return a < b ? Key{a, b} : Key{b, a}; }
    static std::string describe(Cell a, Cell b) {
        return "(" + std::to_string(a.row) + "," + std::to_string(a.col) + ")-(" + std::to_string(b.row) + "," +
               std::to_string(b.col) + ")";
    }

    int order_;
    std::vector<Cell> vertices_;
    std::map<Key, BigRat> weights_;
};

inline constexpr int kMaxMatchingOrder = 5;

/// Sum over perfect matchings of the product of edge weights. The search
/// always matches the first unmatched vertex and memoizes on the set of
/// vertices still unmatched.
inline BigRat matching_weight_sum(const AztecGraph& g) {
    if (g.order() > kMaxMatchingOrder) {
        throw OrderExceeded("matching sums are limited to order " + std::to_string(kMaxMatchingOrder));
    }
    const auto& verts = g.vertices();
    const int count = static_cast<int>(verts.size());
    if (count == 0) return BigRat(1);

    std::map<Cell, int> index;
    for (int v = 0; v < count; ++v) index[verts[static_cast<std::size_t>(v)]] = v;
    std::vector<std::vector<std::pair<int, BigRat>>> adjacency(static_cast<std::size_t>(count));
    for (const auto& [edge, w] : g.edges()) {
        if (w.is_zero()) continue;
        const int a = index.at(edge.first);
        const int b = index.at(edge.second);
        adjacency[static_cast<std::size_t>(a)].emplace_back(b, w);
        adjacency[static_cast<std::size_t>(b)].emplace_back(a, w);
    }

    std::unordered_map<std::uint64_t, BigRat> memo;
    auto solve = [&](auto&& self, std::uint64_t unmatched) -> BigRat {
        if (unmatched == 0) return BigRat(1);
        if (auto it = memo.find(unmatched); it != memo.end()) return it->second;
        const int v = std::countr_zero(unmatched);
        const std::uint64_t rest = unmatched & ~(std::uint64_t{1} << v);
        BigRat total;
        for (const auto& [u, w] : adjacency[static_cast<std::size_t>(v)]) {
            if ((rest >> u) & 1u) total += w * self(self, rest & ~(std::uint64_t{1} << u));
        }
        memo.emplace(unmatched, total);
        return total;
    };
    const std::uint64_t all = count == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
    return solve(solve, all);
}

/// The five subgraphs and four corner weights of graphical condensation.
struct KuoDecomposition {
    AztecGraph g_nw, g_ne, g_sw, g_se, g_c;
    BigRat w_nw, w_ne, w_sw, w_se;
};

/// Order n-1 subgraphs sit one step in from each side of the cell picture
/// (top, right, left, bottom for NW, NE, SW, SE); the centre one has order n-2.
inline KuoDecomposition kuo_decompose(const AztecGraph& g) {
    const int n = g.order();
    if (n < 2) throw OrderExceeded("condensation needs order at least 2");
    auto w = [&](const Domino& d) { return g.weight(d.first, d.second); };
    return KuoDecomposition{
        g.subgraph(n - 1, 0, 1), g.subgraph(n - 1, 1, 2), g.subgraph(n - 1, 1, 0), g.subgraph(n - 1, 2, 1),
        g.subgraph(n - 2, 2, 2), w(g.nw_corner()), w(g.ne_corner()), w(g.sw_corner()), w(g.se_corner()),
    };
}

struct KuoSides {
    BigRat lhs;  // W(G) W(G_C)
    BigRat rhs;  // w_NE w_SW W(G_NW) W(G_SE) + w_NW w_SE W(G_NE) W(G_SW)
};

inline KuoSides kuo_sides(const AztecGraph& g) {
    if (g.order() < 2 || g.order() > kMaxMatchingOrder) {
        throw OrderExceeded("Kuo check supports orders 2.." + std::to_string(kMaxMatchingOrder));
    }
    const KuoDecomposition d = kuo_decompose(g);
    KuoSides s;
    s.lhs = matching_weight_sum(g) * matching_weight_sum(d.g_c);
    s.rhs = d.w_ne * d.w_sw * matching_weight_sum(d.g_nw) * matching_weight_sum(d.g_se) +
            d.w_nw * d.w_se * matching_weight_sum(d.g_ne) * matching_weight_sum(d.g_sw);
    return s;
}

inline bool kuo_identity_check(const AztecGraph& g) {
    const KuoSides s = kuo_sides(g);
    return s.lhs == s.rhs;
}

// ---------------------------------------------------------------------------
// JSON: lists of [[r1, c1], [r2, c2], "weight"].

inline nlohmann::json graph_to_json(const AztecGraph& g) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [edge, w] : g.edges()) {
        out.push_back({{edge.first.row, edge.first.col}, {edge.second.row, edge.second.col}, w.to_string()});
    }
    return out;
}

/// Weights for an order-n graph. Edges absent from the list get weight 0.
inline AztecGraph graph_from_json(const nlohmann::json& doc, int order) {
    if (!doc.is_array()) throw ParseError("graph must be a JSON array of weighted edges");
    AztecGraph g(order);
    for (const auto& [edge, w] : g.edges()) g.set_weight(edge.first, edge.second, BigRat(0));
    auto cell = [](const nlohmann::json& v) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
            throw ParseError("edge endpoint must be a [row, col] pair");
        }
        return Cell{v[0].get<int>(), v[1].get<int>()};
    };
    for (const auto& e : doc) {
        if (!e.is_array() || e.size() != 3) throw ParseError("weighted edge must be [[r1,c1],[r2,c2],\"w\"]");
        const BigRat w = e[2].is_string() ? BigRat::parse(e[2].get<std::string>())
                         : e[2].is_number_integer() ? BigRat(static_cast<long>(e[2].get<long long>()))
                                                    : throw ParseError("edge weight must be a rational string");
        g.set_weight(cell(e[0]), cell(e[1]), w);
    }
    return g;
}

} // namespace lambdadet

#endif // LAMBDADET_AZTEC_GRAPH_HPP
