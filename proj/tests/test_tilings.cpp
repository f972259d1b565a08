#include <random>
#include <set>

#include <gtest/gtest.h>

#include "lambdadet/condense.hpp"
#include "lambdadet/tilings.hpp"

using namespace lambdadet;

namespace {

// Naive recursive tiler: cover the smallest free cell with a domino going
// right or down.
long long brute_tilings(std::set<Cell> free) {
    if (free.empty()) return 1;
    const Cell c = *free.begin();
    free.erase(free.begin());
    long long total = 0;
    for (const Cell nb : {Cell{c.row, c.col + 1}, Cell{c.row + 1, c.col}}) {
        if (free.count(nb)) {
            auto rest = free;
            rest.erase(nb);
            total += brute_tilings(std::move(rest));
        }
    }
    return total;
}

CellRegion random_blob(std::mt19937_64& rng, int box, double keep) {
    std::bernoulli_distribution in(keep);
    CellRegion r;
    for (int i = 1; i <= box; ++i)
        for (int j = 1; j <= box; ++j)
            if (in(rng)) r.insert({i, j});
    return r;
}

} // namespace

TEST(BuildRegion, SpecExamples) {
    EXPECT_EQ(build_region(RegionKind::square, 2).size(), 4u);
    EXPECT_EQ(build_region(RegionKind::aztec, 1), square_region(2));
    const CellRegion az4 = build_region(RegionKind::aztec, 4);
    EXPECT_EQ(az4.size(), 40u);
    const PolyMatrix d = diamond_matrix(4, Parity::even);
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) EXPECT_EQ(az4.contains({i, j}), d(i, j) == LaurentPoly(1));
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(aztec_region(n).size(), static_cast<std::size_t>(2 * n * (n + 1)));
    EXPECT_THROW(build_region(RegionKind::square, 0), SizeMismatch);
}

TEST(RemoveCells, SpecExamples) {
    const CellRegion staircase =
        remove_cells(square_region(4), {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {1, 4}, {2, 4}});
    EXPECT_EQ(staircase.size(), 10u);
    EXPECT_EQ(count_tilings(staircase), 6);
    EXPECT_EQ(remove_cells(square_region(3), {}), square_region(3));
    const CellRegion three = remove_cells(square_region(2), {{1, 1}});
    EXPECT_EQ(three.size(), 3u);
    EXPECT_EQ(count_tilings(three), 0);
    EXPECT_THROW(remove_cells(square_region(2), {{3, 3}}), CellNotInRegion);
}

TEST(CountTilings, SpecExamples) {
    EXPECT_EQ(count_tilings(square_region(2)), 2);
    EXPECT_EQ(count_tilings(square_region(4)), 36);
    EXPECT_EQ(count_tilings(square_region(8)), 12988816);
    EXPECT_EQ(count_tilings(aztec_region(3)), 64);
    EXPECT_EQ(count_tilings(CellRegion()), 1);
}

TEST(CountTilings, AztecPowersOfTwo) {
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(count_tilings(aztec_region(n)), pow2(static_cast<unsigned long>(n * (n + 1) / 2)));
    }
}

TEST(CountTilings, RectanglesKnownValues) {
    CellRegion r;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 10; ++j) r.insert({i, j});
    EXPECT_EQ(count_tilings(r), 89);  // Fibonacci
    EXPECT_EQ(count_tilings(square_region(6)), 6728);
    EXPECT_EQ(count_tilings(square_region(3)), 0);
}

TEST(CountTilings, MatchesBruteForceOnRandomRegions) {
    std::mt19937_64 rng(20040516);
    for (int trial = 0; trial < 200; ++trial) {
        const CellRegion r = random_blob(rng, 6, 0.8);
        EXPECT_EQ(count_tilings(r), BigInt(static_cast<long>(brute_tilings(r.cells())))) << trial;
    }
}

TEST(CountTilings, SymmetryInvariance) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const CellRegion r = random_blob(rng, 7, 0.85);
        const BigInt base = count_tilings(r);
        EXPECT_EQ(count_tilings(r.translated(-5, 11)), base);
        EXPECT_EQ(count_tilings(r.rotated()), base);
        EXPECT_EQ(count_tilings(r.rotated().rotated().rotated()), base);
        EXPECT_EQ(count_tilings(r.reflected()), base);
    }
}

TEST(CountTilings, Holes) {
    // 4x4 with the two centre-row middle cells removed.
    const CellRegion r = remove_cells(square_region(4), {{2, 2}, {2, 3}});
    EXPECT_EQ(count_tilings(r), BigInt(static_cast<long>(brute_tilings(r.cells()))));
}

TEST(CountTilings, WidthLimit) {
    CellRegion wide;
    wide.insert({1, 1});
    wide.insert({1, kMaxTilingWidth + 1});
    EXPECT_THROW(count_tilings(wide), WidthExceeded);
    CellRegion ok;
    for (int j = 1; j <= kMaxTilingWidth; ++j) ok.insert({1, j});
    EXPECT_EQ(count_tilings(ok), 1);
}

TEST(Tfk, SpecExamples) {
    const TfkResult one = tfk_count(1);
    EXPECT_NEAR(one.product, 2.0, 1e-12);
    EXPECT_EQ(one.nearest, 2);
    EXPECT_EQ(tfk_count(2).nearest, 36);
    EXPECT_EQ(tfk_count(4).nearest, 12988816);
    for (int n = 1; n <= 6; ++n) {
        const double exact = count_tilings(square_region(2 * n)).get_d();
        EXPECT_LT(std::abs(tfk_count(n).product - exact) / exact, 1e-9);
    }
    EXPECT_THROW(tfk_count(0), SizeMismatch);
}

TEST(ForcedCorners, OrderThreeFixture) {
    const auto tiles = order3_forced_corner_tiles();
    ASSERT_EQ(tiles.size(), 4u);
    std::vector<Cell> cells;
    for (const auto& d : tiles) {
        cells.push_back(d.first);
        cells.push_back(d.second);
    }
    const CellRegion rest = remove_cells(aztec_region(3), cells);
    EXPECT_EQ(rest.size(), 16u);
    EXPECT_EQ(rest, embedded_square(2));
    EXPECT_EQ(count_tilings(rest), count_tilings(square_region(4)));
}

TEST(ForcedCorners, GeneralEmbedding) {
    // The square of side 2n sits in the Aztec diamond of order 2n-1 with
    // n(n-1)/2 forced tiles in each corner.
    for (int n = 1; n <= 4; ++n) {
        const auto tiles = square_corner_tiles(n);
        EXPECT_EQ(tiles.size(), static_cast<std::size_t>(2 * n * (n - 1)));
        std::vector<Cell> cells;
        for (const auto& d : tiles) {
            cells.push_back(d.first);
            cells.push_back(d.second);
        }
        EXPECT_EQ(remove_cells(aztec_region(2 * n - 1), cells), embedded_square(n));
    }
}

TEST(TrimmedRegion, MatchesPyramidEntries) {
    for (int n = 1; n <= 4; ++n) {
        const auto layers = condensation_trace(diamond_matrix(n, Parity::even), 1, true);
        for (int k = 2; k <= 2 * n; ++k) {
            const auto& g = layers[static_cast<std::size_t>(k - 1)];
            for (int i = 1; i <= g.size(); ++i)
                for (int j = 1; j <= g.size(); ++j)
                    EXPECT_EQ(g(i, j), BigRat(trimmed_region(n, k, i, j).tiling_count()))
                        << "n=" << n << " k=" << k << " (" << i << "," << j << ")";
        }
    }
}

TEST(TrimmedRegion, FourByFourSixes) {
    // The layer-3 entries of the 4x4 pyramid are staircase regions of 10 cells.
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
            const TrimmedRegion t = trimmed_region(2, 3, i, j);
            EXPECT_FALSE(t.blocked);
            EXPECT_EQ(t.region.size(), 10u);
            EXPECT_EQ(t.tiling_count(), 6);
        }
    }
    EXPECT_EQ(trimmed_region(2, 4, 1, 1).region, embedded_square(2));
    EXPECT_THROW(trimmed_region(2, 1, 1, 1), SizeMismatch);
    EXPECT_THROW(trimmed_region(2, 3, 3, 1), SizeMismatch);
}

TEST(Json, RegionRoundTrip) {
    const CellRegion r = aztec_region(2);
    EXPECT_EQ(region_from_json(region_to_json(r)), r);
    EXPECT_THROW(region_from_json(nlohmann::json::parse("[[1]]")), ParseError);
    EXPECT_THROW(region_from_json(nlohmann::json::parse("{}")), ParseError);
}
