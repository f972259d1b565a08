#ifndef LAMBDADET_TILINGS_HPP
#define LAMBDADET_TILINGS_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numbers>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "lambdadet/bigrat.hpp"
#include "lambdadet/error.hpp"

namespace lambdadet {

struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A pair of adjacent cells, stored with first < second.
struct Domino {
    Cell first;
    Cell second;

    Domino(Cell a, Cell b) : first(std::min(a, b)), second(std::max(a, b)) {}
    friend bool operator==(const Domino&, const Domino&) = default;
};

/// Finite set of unit cells on the integer grid.
class CellRegion {
public:
    CellRegion() = default;
    explicit CellRegion(std::set<Cell> cells) : cells_(std::move(cells)) {}

    const std::set<Cell>& cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }
    bool contains(const Cell& c) const { return cells_.count(c) != 0; }
    void insert(const Cell& c) { cells_.insert(c); }

    CellRegion translated(int dr, int dc) const {
        std::set<Cell> out;
        for (const auto& c : cells_) out.insert({c.row + dr, c.col + dc});
        return CellRegion(std::move(out));
    }
    /// Quarter turn: (r, c) -> (c, -r).
    CellRegion rotated() const {
        std::set<Cell> out;
        for (const auto& c : cells_) out.insert({c.col, -c.row});
        return CellRegion(std::move(out));
    }
    /// Mirror in a vertical line: (r, c) -> (r, -c).
    CellRegion reflected() const {
        std::set<Cell> out;
        for (const auto& c : cells_) out.insert({c.row, -c.col});
        return CellRegion(std::move(out));
    }

    friend bool operator==(const CellRegion&, const CellRegion&) = default;

private:
    std::set<Cell> cells_;
};

enum class RegionKind { square, aztec };

inline CellRegion square_region(int m) {
    std::set<Cell> cells;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) cells.insert({i, j});
    return CellRegion(std::move(cells));
}

/// Aztec diamond of order n in matrix coordinates: the positions (i, j) of
/// the 2n-by-2n box with |2i-2n-1| + |2j-2n-1| <= 2n.
inline CellRegion aztec_region(int n) {
    std::set<Cell> cells;
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = 1; j <= 2 * n; ++j)
            if (std::abs(2 * i - 2 * n - 1) + std::abs(2 * j - 2 * n - 1) <= 2 * n) cells.insert({i, j});
    return CellRegion(std::move(cells));
}

inline CellRegion build_region(RegionKind kind, int param) {
    if (param < 1) throw SizeMismatch("region parameter must be at least 1");
    return kind == RegionKind::square ? square_region(param) : aztec_region(param);
}

inline CellRegion remove_cells(const CellRegion& region, const std::vector<Cell>& cells) {
    std::set<Cell> out = region.cells();
    for (const auto& c : cells) {
        if (out.erase(c) == 0) {
            throw CellNotInRegion("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                  ") is not in the region");
        }
    }
    return CellRegion(std::move(out));
}

inline constexpr int kMaxTilingWidth = 24;

/// Number of domino tilings, by a cell-by-cell sweep in row-major order.
/// The state is a bitmask over the next `width` cells of the sweep marking
/// those already covered by a vertical domino from the row above.
inline BigInt count_tilings(const CellRegion& region) {
    if (region.empty()) return 1;
    if (region.size() % 2 != 0) return 0;
    int min_row = region.cells().begin()->row, max_row = region.cells().rbegin()->row;
    int min_col = region.cells().begin()->col, max_col = min_col;
    for (const auto& c : region.cells()) {
        min_col = std::min(min_col, c.col);
        max_col = std::max(max_col, c.col);
    }
    const int width = max_col - min_col + 1;
    if (width > kMaxTilingWidth) {
        throw WidthExceeded("region width " + std::to_string(width) + " exceeds " + std::to_string(kMaxTilingWidth));
    }
    const std::uint32_t below_bit = 1u << (width - 1);

    std::unordered_map<std::uint32_t, BigInt> states{{0u, BigInt(1)}}, next;
    for (int r = min_row; r <= max_row; ++r) {
        for (int c = min_col; c <= max_col; ++c) {
            const bool here = region.contains({r, c});
            const bool right_free = c < max_col && region.contains({r, c + 1});
            const bool below_free = region.contains({r + 1, c});
            next.clear();
            for (const auto& [mask, ways] : states) {
                const bool covered = (mask & 1u) != 0;
                const std::uint32_t shifted = mask >> 1;
                if (!here) {
                    if (!covered) next[shifted] += ways;
                    continue;
                }
                if (covered) {
                    next[shifted] += ways;
                    continue;
                }
                if (right_free && (shifted & 1u) == 0) next[shifted | 1u] += ways;
                if (below_free) next[shifted | below_bit] += ways;
            }
            std::swap(states, next);
        }
    }
    auto it = states.find(0u);
    return it == states.end() ? BigInt(0) : it->second;
}

struct TfkResult {
    double product = 0.0;
    BigInt nearest;
};

/// Double product over j, k = 1..n of 4cos^2(pi j/(2n+1)) + 4cos^2(pi k/(2n+1)),
/// the tiling count of the 2n-by-2n square, in double precision.
inline TfkResult tfk_count(int n) {
    if (n < 1) throw SizeMismatch("tfk_count needs n >= 1");
    const double denom = 2.0 * n + 1.0;
    double product = 1.0;
    for (int j = 1; j <= n; ++j) {
        const double cj = std::cos(std::numbers::pi * j / denom);
        for (int k = 1; k <= n; ++k) {
            const double ck = std::cos(std::numbers::pi * k / denom);
            product *= 4.0 * cj * cj + 4.0 * ck * ck;
        }
    }
    TfkResult r;
    r.product = product;
    mpz_set_d(r.nearest.get_mpz_t(), std::round(product));
    return r;
}

// ---------------------------------------------------------------------------
// The 2n-by-2n square inside the Aztec diamond of order 2n-1.
//
// The Aztec diamond of order 2n-1 lives in a (4n-2)-box; the square occupies
// rows and columns n..3n-1. The remaining cells form four staircase bands,
// each tiled in exactly one way (horizontal dominoes above and below the
// square, vertical ones left and right of it), n(n-1)/2 tiles per band.

inline CellRegion embedded_square(int n) {
    return square_region(2 * n).translated(n - 1, n - 1);
}

inline std::vector<Domino> square_corner_tiles(int n) {
    const int box = 4 * n - 2;
    std::vector<Domino> tiles;
    for (int r = 1; r <= n - 1; ++r) {
        for (int c = 2 * n - r; c < 2 * n - 1 + r; c += 2) {
            tiles.emplace_back(Cell{r, c}, Cell{r, c + 1});                              // above
            tiles.emplace_back(Cell{box + 1 - r, c}, Cell{box + 1 - r, c + 1});          // below
            tiles.emplace_back(Cell{c, r}, Cell{c + 1, r});                              // left
            tiles.emplace_back(Cell{c, box + 1 - r}, Cell{c + 1, box + 1 - r});          // right
        }
    }
    return tiles;
}

/// The four forced corner dominoes of the order-3 Aztec diamond drawn with
/// the 4-by-4 square in its middle.
inline std::vector<Domino> order3_forced_corner_tiles() { return square_corner_tiles(2); }

/// Region counted by the lambda = 1 value of the connected k-by-k submatrix
/// at (i, j) of the 2n-by-2n diamond matrix, for k >= 2: the Aztec diamond
/// of order k-1 sitting at that submatrix's place inside the order 2n-1
/// diamond, cut down to the square. A corner tile split by the sub-diamond's
/// boundary leaves an untileable cell, recorded in `blocked`.
struct TrimmedRegion {
    CellRegion region;
    bool blocked = false;

    BigInt tiling_count() const { return blocked ? BigInt(0) : count_tilings(region); }
};

inline TrimmedRegion trimmed_region(int n, int k, int i, int j) {
    const int size = 2 * n;
    if (k < 2 || k > size || i < 1 || j < 1 || i > size - k + 1 || j > size - k + 1) {
        throw SizeMismatch("no connected " + std::to_string(k) + "-square submatrix at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
    }
    const int s = size - k;
    const CellRegion sub = aztec_region(k - 1).translated(i + j - 2, s + j - i);
    const CellRegion square = embedded_square(n);

    TrimmedRegion out;
    for (const auto& c : sub.cells()) {
        if (square.contains(c)) out.region.insert(c);
    }
    for (const auto& tile : square_corner_tiles(n)) {
        if (sub.contains(tile.first) != sub.contains(tile.second)) out.blocked = true;
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON: regions as lists of [row, col].

inline nlohmann::json region_to_json(const CellRegion& region) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : region.cells()) out.push_back({c.row, c.col});
    return out;
}

inline CellRegion region_from_json(const nlohmann::json& doc) {
    if (!doc.is_array()) throw ParseError("region must be a JSON array of [row, col] pairs");
    CellRegion region;
    for (const auto& pair : doc) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
            throw ParseError("region cell must be a [row, col] pair of integers");
        }
        region.insert({pair[0].get<int>(), pair[1].get<int>()});
    }
    return region;
}

} // namespace lambdadet

#endif // LAMBDADET_TILINGS_HPP
