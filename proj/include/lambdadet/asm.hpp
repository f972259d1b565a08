#ifndef LAMBDADET_ASM_HPP
#define LAMBDADET_ASM_HPP

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "lambdadet/bigrat.hpp"
#include "lambdadet/error.hpp"
#include "lambdadet/laurent_poly.hpp"
#include "lambdadet/matrix.hpp"

namespace lambdadet {

/// Largest ASM size enumerated without an explicit override. n = 7 has
/// 218348 matrices; n = 8 (10850216) must be requested.
inline constexpr int kDefaultAsmCap = 7;

/// Enumeration cap from LAMBDADET_CAP, or `fallback` when unset.
inline int cap_from_environment(int fallback = kDefaultAsmCap) {
    if (const char* env = std::getenv("LAMBDADET_CAP"); env && *env) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1 || v > 64) throw ParseError(std::string("bad LAMBDADET_CAP value '") + env + "'");
        return static_cast<int>(v);
    }
    return fallback;
}

/// True iff every row and column sums to 1 with nonzero entries alternating
/// in sign, starting and ending with +1, and all entries in {-1, 0, 1}.
inline bool is_alternating_sign(const Grid<int>& g) {
    const int n = g.size();
    if (n < 1) return false;
    for (int pass = 0; pass < 2; ++pass) {
        for (int a = 1; a <= n; ++a) {
            int partial = 0;
            for (int b = 1; b <= n; ++b) {
                const int v = pass == 0 ? g(a, b) : g(b, a);
                if (v < -1 || v > 1) return false;
                partial += v;
                if (partial < 0 || partial > 1) return false;
            }
            if (partial != 1) return false;
        }
    }
    return true;
}

class AltSignMatrix;

template <typename F>
void for_each_asm(int n, F&& visit, int cap = kDefaultAsmCap);

class AltSignMatrix {
public:
    /// Validates the alternating-sign conditions (InvalidMatrix otherwise).
    explicit AltSignMatrix(Grid<int> entries) : entries_(std::move(entries)) {
        if (!is_alternating_sign(entries_)) throw InvalidMatrix("not an alternating-sign matrix");
    }

    static AltSignMatrix from_rows(const std::vector<std::vector<int>>& rows) {
        return AltSignMatrix(Grid<int>::from_rows(rows));
    }

    static AltSignMatrix permutation(const std::vector<int>& sigma) {
        const int n = static_cast<int>(sigma.size());
        Grid<int> g(n, 0);
        for (int i = 1; i <= n; ++i) g(i, sigma[i - 1]) = 1;
        return AltSignMatrix(std::move(g));
    }

    int size() const noexcept { return entries_.size(); }
    int operator()(int i, int j) const { return entries_(i, j); }
    const Grid<int>& entries() const noexcept { return entries_; }

    friend bool operator==(const AltSignMatrix&, const AltSignMatrix&) = default;

private:
    struct Unchecked {};
    AltSignMatrix(Unchecked, Grid<int> entries) : entries_(std::move(entries)) {}

    template <typename F>
    friend void for_each_asm(int n, F&& visit, int cap);

    Grid<int> entries_;
};

namespace detail {

inline void check_cap(int n, int cap) {
    if (n < 1) throw InvalidMatrix("ASM size must be at least 1");
    if (n > cap) {
        throw CapExceeded("ASM size " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
    }
}

} // namespace detail

/// Visits every n-by-n ASM exactly once. Rows are built left to right on top
/// of the running column sums, each of which stays 0 or 1: a +1 may go into a
/// column with sum 0, a -1 into a column with sum 1, alternating along the row.
template <typename F>
void for_each_asm(int n, F&& visit, int cap) {
    detail::check_cap(n, cap);
    Grid<int> g(n, 0);
    std::vector<int> profile(static_cast<std::size_t>(n), 0);
    AltSignMatrix current(AltSignMatrix::Unchecked{}, Grid<int>(n, 0));

    // last: sign of the previous nonzero entry in this row (0 if none yet).
    std::function<void(int, int, int)> place = [&](int row, int col, int last) {
        if (col > n) {
            if (last != 1) return;
            if (row == n) {
                current.entries_ = g;
                visit(static_cast<const AltSignMatrix&>(current));
                return;
            }
            place(row + 1, 1, 0);
            return;
        }
        int& column_sum = profile[static_cast<std::size_t>(col - 1)];
        g(row, col) = 0;
        place(row, col + 1, last);
        if (column_sum == 0 && last != 1) {
            g(row, col) = 1;
            column_sum = 1;
            place(row, col + 1, 1);
            column_sum = 0;
        } else if (column_sum == 1 && last == 1) {
            g(row, col) = -1;
            column_sum = 0;
            place(row, col + 1, -1);
            column_sum = 1;
        }
        g(row, col) = 0;
    };
    place(1, 1, 0);
}

inline std::vector<AltSignMatrix> enumerate_asms(int n, int cap = kDefaultAsmCap) {
    std::vector<AltSignMatrix> out;
    for_each_asm(n, [&](const AltSignMatrix& b) { out.push_back(b); }, cap);
    return out;
}

inline std::uint64_t count_asms(int n, int cap = kDefaultAsmCap) {
    std::uint64_t count = 0;
    for_each_asm(n, [&](const AltSignMatrix&) { ++count; }, cap);
    return count;
}

struct AsmStats {
    long inversion = 0;  // I(B)
    long negatives = 0;  // N(B)
    long p_stat = 0;     // I(B) - N(B)

    friend bool operator==(const AsmStats&, const AsmStats&) = default;
};

/// I(B) = sum of b(i,j) b(r,s) over i < r, j > s, computed in O(n^2) from
/// a running table of north-east partial sums.
inline AsmStats asm_stats(const AltSignMatrix& b) {
    const int n = b.size();
    // above_right[r][s] = sum of b(i, j) over i < r, j > s.
    std::vector<std::vector<long>> above_right(static_cast<std::size_t>(n + 2),
                                               std::vector<long>(static_cast<std::size_t>(n + 2), 0));
    AsmStats st;
    for (int r = 1; r <= n; ++r) {
        long row_suffix = 0;
        for (int s = n; s >= 1; --s) {
            if (r > 1) above_right[r][s] = above_right[r - 1][s];
            st.inversion += static_cast<long>(b(r, s)) * above_right[r][s];
            if (b(r, s) < 0) ++st.negatives;
        }
        // Fold row r into the table for the rows below it.
        for (int s = n; s >= 1; --s) {
            above_right[r][s] += row_suffix;
            row_suffix += b(r, s);
        }
    }
    st.p_stat = st.inversion - st.negatives;
    return st;
}

/// Σ over all n-by-n ASMs of 2^{N(B)}: the monomial count of the summation
/// formula once every (1 + lambda)^N(B) is expanded without collecting.
inline BigInt expanded_term_count(int n, int cap = kDefaultAsmCap) {
    detail::check_cap(n, cap);
    std::vector<std::uint64_t> by_negatives(static_cast<std::size_t>(n * n + 1), 0);
    for_each_asm(n, [&](const AltSignMatrix& b) {
        int neg = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) neg += b(i, j) < 0;
        ++by_negatives[static_cast<std::size_t>(neg)];
    }, cap);
    BigInt total = 0;
    for (std::size_t k = 0; k < by_negatives.size(); ++k) {
        total += BigInt(static_cast<unsigned long>(by_negatives[k])) * pow2(k);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Region masks

class RegionMask {
public:
    explicit RegionMask(int size) : size_(size), member_(static_cast<std::size_t>(size) * size, 0) {}

    int size() const noexcept { return size_; }
    bool contains(int i, int j) const { return member_[index(i, j)] != 0; }
    void set(int i, int j, bool in = true) { member_[index(i, j)] = in ? 1 : 0; }

    RegionMask complement() const {
        RegionMask c(size_);
        for (std::size_t k = 0; k < member_.size(); ++k) c.member_[k] = member_[k] ? 0 : 1;
        return c;
    }

    /// The mask restricted to the connected k-by-k window at (i, j), as a
    /// k-by-k mask of its own.
    RegionMask window(int i, int j, int k) const {
        RegionMask w(k);
        for (int r = 1; r <= k; ++r)
            for (int c = 1; c <= k; ++c) w.set(r, c, contains(i + r - 1, j + c - 1));
        return w;
    }

    std::vector<std::pair<int, int>> members() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i <= size_; ++i)
            for (int j = 1; j <= size_; ++j)
                if (contains(i, j)) out.emplace_back(i, j);
        return out;
    }

    friend bool operator==(const RegionMask&, const RegionMask&) = default;

private:
    std::size_t index(int i, int j) const {
        if (i < 1 || j < 1 || i > size_ || j > size_) throw SizeMismatch("mask index out of range");
        return static_cast<std::size_t>(i - 1) * size_ + (j - 1);
    }

    int size_;
    std::vector<char> member_;
};

/// 2n-by-2n mask of |2i-2n-1| + |2j-2n-1| <= 2n.
inline RegionMask even_diamond_mask(int n) {
    RegionMask m(2 * n);
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = 1; j <= 2 * n; ++j)
            m.set(i, j, std::abs(2 * i - 2 * n - 1) + std::abs(2 * j - 2 * n - 1) <= 2 * n);
    return m;
}

/// (2n+1)-by-(2n+1) mask of |i-n-1| + |j-n-1| <= n.
inline RegionMask odd_diamond_mask(int n) {
    RegionMask m(2 * n + 1);
    for (int i = 1; i <= 2 * n + 1; ++i)
        for (int j = 1; j <= 2 * n + 1; ++j)
            m.set(i, j, std::abs(i - n - 1) + std::abs(j - n - 1) <= n);
    return m;
}

/// Diamond mask matching a matrix size: even sizes 2n use the even diamond,
/// odd sizes 2n+1 the odd one.
inline RegionMask diamond_mask_for_size(int size) {
    return size % 2 == 0 ? even_diamond_mask(size / 2) : odd_diamond_mask(size / 2);
}

inline long region_sum(const AltSignMatrix& b, const RegionMask& mask) {
    if (b.size() != mask.size()) {
        throw SizeMismatch("ASM of size " + std::to_string(b.size()) + " with mask of size " +
                           std::to_string(mask.size()));
    }
    long sum = 0;
    for (int i = 1; i <= b.size(); ++i)
        for (int j = 1; j <= b.size(); ++j)
            if (mask.contains(i, j)) sum += b(i, j);
    return sum;
}

// ---------------------------------------------------------------------------
// Summation formula

/// Σ_B λ^{P(B)} (1+λ)^{N(B)} Π m(i,j)^{b(i,j)} over all n-by-n ASMs. Entries
/// must be nonzero monomials c·t^k free of lambda, so that a -1 exponent
/// stays inside the Laurent ring.
inline LaurentPoly lambda_det_sum(const PolyMatrix& m, int cap = kDefaultAsmCap) {
    const int n = m.size();
    detail::check_cap(n, cap);
    Grid<BigRat> coeff(n), coeff_inv(n);
    Grid<int> t_exp(n, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const auto& e = m(i, j);
            if (!e.is_monomial() || e.terms()[0].exp.lambda_exp != 0) {
                throw NonMonomialEntry("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                       e.to_string() + " is not a nonzero monomial c*t^k");
            }
            coeff(i, j) = e.terms()[0].coeff;
            coeff_inv(i, j) = BigRat(1) / coeff(i, j);
            t_exp(i, j) = e.terms()[0].exp.t_exp;
        }
    }

    std::vector<std::vector<BigInt>> binomials;
    auto binomial_row = [&](long nn) -> const std::vector<BigInt>& {
        while (static_cast<long>(binomials.size()) <= nn) {
            const long k = static_cast<long>(binomials.size());
            std::vector<BigInt> row(static_cast<std::size_t>(k + 1), 1);
            for (long r = 1; r < k; ++r) row[r] = binomials[k - 1][r - 1] + binomials[k - 1][r];
            binomials.push_back(std::move(row));
        }
        return binomials[static_cast<std::size_t>(nn)];
    };

    std::map<ExponentPair, BigRat> acc;
    for_each_asm(n, [&](const AltSignMatrix& b) {
        const AsmStats st = asm_stats(b);
        if (st.p_stat < 0) throw InvalidExponent("ASM with negative P(B)");
        BigRat c(1);
        int te = 0;
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                const int v = b(i, j);
                if (v == 1) {
                    c *= coeff(i, j);
                    te += t_exp(i, j);
                } else if (v == -1) {
                    c *= coeff_inv(i, j);
                    te -= t_exp(i, j);
                }
            }
        }
        const auto& row = binomial_row(st.negatives);
        for (long r = 0; r <= st.negatives; ++r) {
            acc[{static_cast<int>(st.p_stat + r), te}] += c * BigRat(row[static_cast<std::size_t>(r)]);
        }
    }, cap);

    std::vector<LaurentPoly::Term> terms;
    for (auto& [exp, c] : acc) {
        if (!c.is_zero()) terms.push_back({exp, std::move(c)});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// JSON: ASMs as arrays of arrays of -1/0/1, masks as arrays of [i, j].

inline nlohmann::json asm_to_json(const AltSignMatrix& b) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : b.entries().rows()) rows.push_back(row);
    return rows;
}

inline AltSignMatrix asm_from_json(const nlohmann::json& doc) {
    if (!doc.is_array()) throw ParseError("ASM must be a JSON array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : doc) {
        if (!row.is_array()) throw ParseError("ASM row must be an array");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw ParseError("ASM entry must be -1, 0 or 1");
            r.push_back(v.get<int>());
        }
        rows.push_back(std::move(r));
    }
    return AltSignMatrix::from_rows(rows);
}

inline nlohmann::json mask_to_json(const RegionMask& mask) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [i, j] : mask.members()) out.push_back({i, j});
    return out;
}

inline RegionMask mask_from_json(const nlohmann::json& doc, int size) {
    if (!doc.is_array()) throw ParseError("mask must be a JSON array of [i, j] pairs");
    RegionMask mask(size);
    for (const auto& pair : doc) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
            throw ParseError("mask member must be an [i, j] pair");
        }
        mask.set(pair[0].get<int>(), pair[1].get<int>());
    }
    return mask;
}

} // namespace lambdadet

#endif // LAMBDADET_ASM_HPP
