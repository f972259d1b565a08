#ifndef LAMBDADET_REPRODUCE_HPP
#define LAMBDADET_REPRODUCE_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lambdadet/asm.hpp"
#include "lambdadet/aztec_graph.hpp"
#include "lambdadet/condense.hpp"
#include "lambdadet/laurent_poly.hpp"
#include "lambdadet/tilings.hpp"

namespace lambdadet {

inline constexpr std::uint64_t kDefaultSeed = 20040516;

// ---------------------------------------------------------------------------
// Fixtures

/// M_c(t): every entry t except the centre t^4/c.
inline PolyMatrix mc_fixture(const BigRat& c) {
    PolyMatrix m(3, LaurentPoly::t());
    m(2, 2) = LaurentPoly::monomial(BigRat(1) / c, 0, 4);
    return m;
}

/// (c l + c l^2) + (2 l + 2 l^2) t^3 + ((1 + l^3)/c) t^6
inline LaurentPoly mc_expected(const BigRat& c) {
    const BigRat inv = BigRat(1) / c;
    return LaurentPoly::from_terms({
        {{1, 0}, c}, {{2, 0}, c},
        {{1, 3}, BigRat(2)}, {{2, 3}, BigRat(2)},
        {{0, 6}, inv}, {{3, 6}, inv},
    });
}

inline LaurentPoly one_plus_lambda_pow(unsigned e) { return pow(LaurentPoly(1) + LaurentPoly::lambda(), e); }

/// Nonzero monomials p/q * t^k with small p, q and k in [-2, 2].
inline PolyMatrix random_monomial_matrix(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 5), den(1, 4), texp(-2, 2), sign(0, 1);
    PolyMatrix m(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const long p = num(rng) * (sign(rng) ? 1 : -1);
            m(i, j) = LaurentPoly::monomial(BigRat(BigInt(p), BigInt(static_cast<long>(den(rng)))), 0, texp(rng));
        }
    }
    return m;
}

/// Non-negative weights p/q with p in [0, 9], q in [1, 7].
inline void randomize_weights(AztecGraph& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(0, 9), den(1, 7);
    for (const auto& [edge, w] : g.edges()) {
        g.set_weight(edge.first, edge.second,
                     BigRat(BigInt(static_cast<long>(num(rng))), BigInt(static_cast<long>(den(rng)))));
    }
}

// ---------------------------------------------------------------------------
// Criteria

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct Criterion {
    int id;
    std::string title;
    std::function<bool(std::ostringstream&)> check;  // writes a one-line detail
    double time_limit_seconds;                       // 0: no limit
};

inline std::vector<Criterion> acceptance_criteria(std::uint64_t seed = kDefaultSeed) {
    std::vector<Criterion> out;

    out.push_back({1, "all-ones closed form (1+l)^{n(n-1)/2}, n = 2..6", [](std::ostringstream& os) {
        bool ok = true;
        for (int n = 2; n <= 6; ++n) {
            const auto top = lambda_det_dp(all_ones_matrix(n)).top();
            ok = ok && top == one_plus_lambda_pow(static_cast<unsigned>(n * (n - 1) / 2));
        }
        ok = ok && lambda_det_dp(all_ones_matrix(2)).top() == LaurentPoly::parse("1 + l");
        ok = ok && lambda_det_dp(all_ones_matrix(3)).top() == one_plus_lambda_pow(3);
        ok = ok && lambda_det_dp(all_ones_matrix(4)).top() == one_plus_lambda_pow(6);
        os << "n=4 top = " << lambda_det_dp(all_ones_matrix(4)).top();
        return ok;
    }, 1.0});

    out.push_back({2, "8x8 diamond: 191 terms, limit 17 terms, value 12988816", [](std::ostringstream& os) {
        const auto top = lambda_det_dp(t_perturb(diamond_matrix(4, Parity::even))).top();
        const auto limit = poly_limit_at_t0(top);
        const BigRat value = poly_eval(limit, 1, 0);
        os << "terms " << poly_term_count(top) << ", limit terms " << poly_term_count(limit) << ", value " << value;
        return poly_term_count(top) == 191 && poly_term_count(limit) == 17 && value == BigRat(12988816);
    }, 30.0});

    out.push_back({3, "4x4 diamond pyramid at lambda = 1", [](std::ostringstream& os) {
        const auto layers = condensation_trace(diamond_matrix(2, Parity::even), 1);
        const auto two = RatMatrix::from_rows({{1, 2, 1}, {2, 2, 2}, {1, 2, 1}});
        const auto three = RatMatrix::from_rows({{6, 6}, {6, 6}});
        const auto four = RatMatrix::from_rows({{36}});
        os << "top " << layers.back()(1, 1);
        return layers.size() == 4 && layers[1] == two && layers[2] == three && layers[3] == four;
    }, 0.0});

    out.push_back({4, "trimmed-region tiling counts match pyramid entries", [](std::ostringstream& os) {
        const CellRegion trimmed =
            remove_cells(square_region(4), {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {1, 4}, {2, 4}});
        const BigInt six = count_tilings(trimmed);
        bool ok = six == 6;
        const auto small = condensation_trace(diamond_matrix(2, Parity::even), 1);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) ok = ok && small[2](i, j) == BigRat(six);

        const auto layers = condensation_trace(diamond_matrix(3, Parity::even), 1, true);
        ok = ok && layers[0] == to_rational(diamond_matrix(3, Parity::even));
        int checked = 0;
        for (int k = 2; k <= 6; ++k) {
            const auto& g = layers[static_cast<std::size_t>(k - 1)];
            for (int i = 1; i <= g.size(); ++i) {
                for (int j = 1; j <= g.size(); ++j) {
                    ok = ok && g(i, j) == BigRat(trimmed_region(3, k, i, j).tiling_count());
                    ++checked;
                }
            }
        }
        os << "staircase region " << six << ", " << checked << " entries of the 6x6 pyramid";
        return ok;
    }, 0.0});

    out.push_back({5, "square tilings = numeric (+1)-determinant = t -> 0 limit", [](std::ostringstream& os) {
        const BigInt expected[] = {2, 36, 6728, 12988816};
        bool ok = true;
        for (int n = 1; n <= 6; ++n) {
            const auto d = diamond_matrix(n, Parity::even);
            const BigInt tiles = count_tilings(square_region(2 * n));
            const BigRat numeric = lambda_det_numeric(d, 1, true).top();
            const BigRat limit = poly_eval(lambda_det_limit(d), 1, 0);
            ok = ok && numeric == BigRat(tiles) && limit == BigRat(tiles);
            if (n <= 4) ok = ok && tiles == expected[n - 1];
            os << (n > 1 ? ", " : "") << tiles;
        }
        return ok;
    }, 300.0});

    out.push_back({6, "Temperley-Fisher-Kasteleyn product", [](std::ostringstream& os) {
        bool ok = true;
        double worst = 0.0;
        for (int n = 1; n <= 6; ++n) {
            const TfkResult r = tfk_count(n);
            const BigInt exact = count_tilings(square_region(2 * n));
            if (n <= 4) ok = ok && r.nearest == exact;
            const double rel = std::abs(r.product - exact.get_d()) / exact.get_d();
            worst = std::max(worst, rel);
            ok = ok && rel < 1e-9;
        }
        os << "max relative error " << (worst < 1e-300 ? 0.0 : worst);
        return ok;
    }, 0.0});

    out.push_back({7, "Aztec counts 2^{n(n+1)/2} and expanded term counts", [](std::ostringstream& os) {
        bool ok = true;
        for (int n = 1; n <= 6; ++n) {
            ok = ok && count_tilings(aztec_region(n)) == pow2(static_cast<unsigned long>(n * (n + 1) / 2));
        }
        for (int m = 1; m <= 5; ++m) {
            ok = ok && expanded_term_count(m) == pow2(static_cast<unsigned long>(m * (m - 1) / 2));
        }
        os << "aztec(6) = " << count_tilings(aztec_region(6)) << ", expanded(5) = " << expanded_term_count(5);
        return ok;
    }, 0.0});

    out.push_back({8, "recursive formula = summation formula", [seed](std::ostringstream& os) {
        bool ok = true;
        int diamonds = 0;
        for (int size = 2; size <= 6; ++size) {
            const auto d = t_perturb(diamond_matrix(size / 2, size % 2 == 0 ? Parity::even : Parity::odd));
            ok = ok && lambda_det_dp(d).top() == lambda_det_sum(d);
            ++diamonds;
        }
        std::mt19937_64 rng(seed);
        for (int trial = 0; trial < 100; ++trial) {
            const auto m = random_monomial_matrix(3 + trial % 3, rng);
            ok = ok && lambda_det_dp(m).top() == lambda_det_sum(m);
        }
        os << diamonds << " perturbed diamonds, 100 random monomial matrices";
        return ok;
    }, 0.0});

    out.push_back({9, "M_c(t) regression, c = 1, 2, 3", [](std::ostringstream& os) {
        bool ok = true;
        for (int c = 1; c <= 3; ++c) {
            const LaurentPoly det = lambda_det_sum(mc_fixture(c));
            ok = ok && det == mc_expected(c);
            ok = ok && poly_limit_at_t0(det) == LaurentPoly::from_terms({{{1, 0}, BigRat(c)}, {{2, 0}, BigRat(c)}});
        }
        os << "c=2: " << lambda_det_sum(mc_fixture(2));
        return ok;
    }, 0.0});

    out.push_back({10, "no poles at t = 0 in perturbed diamond pyramids (2n <= 8)", [](std::ostringstream& os) {
        bool ok = true;
        int values = 0;
        for (int n = 1; n <= 4; ++n) {
            const auto pyr = lambda_det_dp(t_perturb(diamond_matrix(n, Parity::even)));
            for (const auto& g : pyr.layers()) {
                for (int i = 1; i <= g.size(); ++i) {
                    for (int j = 1; j <= g.size(); ++j) {
                        ok = ok && !g(i, j).is_zero() && g(i, j).min_t_exp() >= 0;
                        ++values;
                    }
                }
            }
        }
        os << values << " pyramid values";
        return ok;
    }, 0.0});

    out.push_back({11, "ASM diamond partial sums are non-negative", [](std::ostringstream& os) {
        std::uint64_t visited = 0, full_bad = 0, outside_bad = 0, window_bad = 0;
        std::string first_bad;
        for (int size = 2; size <= 7; ++size) {
            const RegionMask mask = diamond_mask_for_size(size);
            const RegionMask outside = mask.complement();
            for_each_asm(size, [&](const AltSignMatrix& b) {
                const long s = region_sum(b, mask);
                if (s < 0 && full_bad++ == 0) first_bad = "size " + std::to_string(size) + " sum " + std::to_string(s);
                outside_bad += region_sum(b, outside) < 0;
                ++visited;
            });
        }
        int windows = 0;
        for (int size = 2; size <= 8; ++size) {
            const RegionMask mask = diamond_mask_for_size(size);
            for (int k = 1; k <= std::min(size, 6); ++k) {
                const auto asms = enumerate_asms(k);
                for (int i = 1; i + k - 1 <= size; ++i) {
                    for (int j = 1; j + k - 1 <= size; ++j) {
                        const RegionMask w = mask.window(i, j, k);
                        for (const auto& b : asms) window_bad += region_sum(b, w) < 0;
                        ++windows;
                    }
                }
            }
        }
        os << visited << " ASMs, negative sums: diamond " << full_bad << ", complement " << outside_bad << "; "
           << windows << " windows, negative " << window_bad;
        if (full_bad) os << "; first: " << first_bad;
        return full_bad == 0 && outside_bad == 0 && window_bad == 0;
    }, 0.0});

    out.push_back({12, "odd diamond (+1)-determinant counts square tilings", [](std::ostringstream& os) {
        bool ok = true;
        for (int n = 1; n <= 4; ++n) {
            const BigRat v = lambda_det_numeric(diamond_matrix(n, Parity::odd), 1, true).top();
            ok = ok && v == BigRat(count_tilings(square_region(2 * n)));
            os << (n > 1 ? ", " : "") << v;
        }
        return ok;
    }, 0.0});

    out.push_back({13, "Kuo condensation identity, orders 2..5", [seed](std::ostringstream& os) {
        bool ok = true;
        std::mt19937_64 rng(seed);
        int checks = 0;
        for (int order = 2; order <= 5; ++order) {
            ok = ok && kuo_identity_check(AztecGraph(order));
            ++checks;
            for (int trial = 0; trial < 100; ++trial) {
                AztecGraph g(order);
                randomize_weights(g, rng);
                ok = ok && kuo_identity_check(g);
                ++checks;
            }
        }
        os << checks << " weighted graphs";
        return ok;
    }, 0.0});

    out.push_back({14, "lambda = -1: symbolic value 0, numeric recursion indeterminate", [](std::ostringstream& os) {
        const BigRat symbolic = poly_eval(lambda_det_dp(all_ones_matrix(4)).top(), -1, 1);
        bool indeterminate = false;
        try {
            lambda_det_numeric(all_ones_matrix(4), -1, false);
        } catch (const IndeterminateForm&) {
            indeterminate = true;
        }
        os << "symbolic " << symbolic << ", numeric " << (indeterminate ? "IndeterminateForm" : "no error");
        return symbolic.is_zero() && indeterminate;
    }, 0.0});

    return out;
}

inline CriterionResult run_criterion(const Criterion& c) {
    CriterionResult r{c.id, c.title, false, {}, 0.0};
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    try {
        r.passed = c.check(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
        r.passed = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_seconds > 0 && r.seconds > c.time_limit_seconds) {
        r.passed = false;
        detail << " (over the " << c.time_limit_seconds << " s limit)";
    }
    r.detail = detail.str();
    return r;
}

inline std::string format_result(const CriterionResult& r, bool with_time) {
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << "  " << (r.id < 10 ? "0" : "") << r.id << "  " << r.title << "  ["
       << r.detail << "]";
    if (with_time) {
        os.setf(std::ios::fixed);
        os.precision(3);
        os << "  " << r.seconds << " s";
    }
    return os.str();
}

} // namespace lambdadet

#endif // LAMBDADET_REPRODUCE_HPP
