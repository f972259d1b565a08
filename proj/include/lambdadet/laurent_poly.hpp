#ifndef LAMBDADET_LAURENT_POLY_HPP
#define LAMBDADET_LAURENT_POLY_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lambdadet/bigrat.hpp"
#include "lambdadet/error.hpp"

namespace lambdadet {

/// Exponents of a monomial l^lambda_exp * t^t_exp. The lambda exponent is
/// never negative; the t exponent is unrestricted. Ordered by (t, lambda).
struct ExponentPair {
    int lambda_exp = 0;
    int t_exp = 0;

    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
    friend std::strong_ordering operator<=>(const ExponentPair& a, const ExponentPair& b) {
        if (auto c = a.t_exp <=> b.t_exp; c != 0) return c;
        return a.lambda_exp <=> b.lambda_exp;
    }
};

/// Sparse Laurent polynomial in lambda (polynomially) and t (Laurent) with
/// rational coefficients. Terms are kept sorted by ExponentPair with no zero
/// coefficients, so structural equality is polynomial equality.
class LaurentPoly {
public:
    struct Term {
        ExponentPair exp;
        BigRat coeff;

        friend bool operator==(const Term&, const Term&) = default;
    };

    LaurentPoly() = default;
    LaurentPoly(const BigRat& constant) {  // NOLINT(google-explicit-constructor)
        if (!constant.is_zero()) terms_.push_back({{0, 0}, constant});
    }
    LaurentPoly(long constant) : LaurentPoly(BigRat(constant)) {}  // NOLINT
    LaurentPoly(int constant) : LaurentPoly(BigRat(constant)) {}   // NOLINT

    static LaurentPoly monomial(const BigRat& coeff, int lambda_exp, int t_exp) {
        check_lambda_exp(lambda_exp);
        LaurentPoly p;
        if (!coeff.is_zero()) p.terms_.push_back({{lambda_exp, t_exp}, coeff});
        return p;
    }
    static LaurentPoly lambda() { return monomial(1, 1, 0); }
    static LaurentPoly t() { return monomial(1, 0, 1); }

    /// Canonicalizes an arbitrary list of terms (merges duplicates, drops zeros).
    static LaurentPoly from_terms(std::vector<Term> terms) {
        for (const auto& term : terms) check_lambda_exp(term.exp.lambda_exp);
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.exp < b.exp; });
        LaurentPoly p;
        for (auto& term : terms) {
            if (!p.terms_.empty() && p.terms_.back().exp == term.exp) {
                p.terms_.back().coeff += term.coeff;
            } else {
                if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
                p.terms_.push_back(std::move(term));
            }
        }
        if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        return p;
    }

    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == ExponentPair{0, 0});
    }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    /// Constant value; only meaningful when is_constant().
    BigRat constant_value() const { return terms_.empty() ? BigRat(0) : terms_[0].coeff; }

    /// Coefficient of l^a t^b (zero when absent).
    BigRat coeff(int lambda_exp, int t_exp) const {
        const ExponentPair key{lambda_exp, t_exp};
        auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const Term& term, const ExponentPair& k) { return term.exp < k; });
        return (it != terms_.end() && it->exp == key) ? it->coeff : BigRat(0);
    }

    // Terms are sorted by t first, so the t-extremes are the first and last terms.
    int min_t_exp() const { return terms_.empty() ? 0 : terms_.front().exp.t_exp; }
    int max_t_exp() const { return terms_.empty() ? 0 : terms_.back().exp.t_exp; }
    int max_lambda_exp() const {
        int m = 0;
        for (const auto& term : terms_) m = std::max(m, term.exp.lambda_exp);
        return m;
    }

    /// Multiplies by t^shift.
    LaurentPoly shifted_t(int shift) const {
        LaurentPoly p = *this;
        for (auto& term : p.terms_) term.exp.t_exp += shift;
        return p;
    }

    LaurentPoly operator-() const {
        LaurentPoly p = *this;
        for (auto& term : p.terms_) term.coeff = -term.coeff;
        return p;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Canonical text form: terms ascending by (t, lambda), each as
    /// `coeff*l^a*t^b` with ^0 factors omitted, joined by " + ". Zero is "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i) out += " + ";
            const auto& term = terms_[i];
            out += term.coeff.to_string();
            if (term.exp.lambda_exp != 0) out += "*l^" + std::to_string(term.exp.lambda_exp);
            if (term.exp.t_exp != 0) out += "*t^" + std::to_string(term.exp.t_exp);
        }
        return out;
    }

    static LaurentPoly parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
    static void check_lambda_exp(int lambda_exp) {
        if (lambda_exp < 0) {
            throw InvalidExponent("negative lambda exponent " + std::to_string(lambda_exp));
        }
    }

    static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exp < b.terms_[j].exp)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].exp < a.terms_[i].exp) {
                r.terms_.push_back(subtract ? Term{b.terms_[j].exp, -b.terms_[j].coeff} : b.terms_[j]);
                ++j;
            } else {
                BigRat c = subtract ? a.terms_[i].coeff - b.terms_[j].coeff
                                    : a.terms_[i].coeff + b.terms_[j].coeff;
                if (!c.is_zero()) r.terms_.push_back({a.terms_[i].exp, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

namespace detail {

// Bounding box of a polynomial's exponents; used to pick dense kernels.
struct ExponentBox {
    int min_t = 0, max_t = 0, max_lambda = 0;

    std::int64_t cells() const {
        return static_cast<std::int64_t>(max_t - min_t + 1) * (max_lambda + 1);
    }
};

inline ExponentBox box_of(const LaurentPoly& p) {
    return {p.min_t_exp(), p.max_t_exp(), p.max_lambda_exp()};
}

// Dense kernels are used when the grid is at most this many cells and not
// much larger than the amount of work done sparsely.
inline constexpr std::int64_t kDenseCellLimit = std::int64_t{1} << 20;

} // namespace detail

inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    using Term = LaurentPoly::Term;
    const auto ba = detail::box_of(a);
    const auto bb = detail::box_of(b);
    const detail::ExponentBox box{ba.min_t + bb.min_t, ba.max_t + bb.max_t, ba.max_lambda + bb.max_lambda};
    const auto work = static_cast<std::int64_t>(a.term_count()) * static_cast<std::int64_t>(b.term_count());

    std::vector<Term> out;
    if (box.cells() <= detail::kDenseCellLimit && box.cells() <= 8 * work + 4096) {
        const int width = box.max_lambda + 1;
        std::vector<mpq_class> grid(static_cast<std::size_t>(box.cells()));
        mpq_class prod;
        for (const auto& x : a.terms()) {
            for (const auto& y : b.terms()) {
                const int t = x.exp.t_exp + y.exp.t_exp - box.min_t;
                const int l = x.exp.lambda_exp + y.exp.lambda_exp;
                mpq_mul(prod.get_mpq_t(), x.coeff.raw().get_mpq_t(), y.coeff.raw().get_mpq_t());
                auto& cell = grid[static_cast<std::size_t>(t) * width + l];
                mpq_add(cell.get_mpq_t(), cell.get_mpq_t(), prod.get_mpq_t());
            }
        }
        for (int t = 0; t <= box.max_t - box.min_t; ++t) {
            for (int l = 0; l < width; ++l) {
                auto& cell = grid[static_cast<std::size_t>(t) * width + l];
                if (sgn(cell) != 0) {
                    out.push_back({{l, t + box.min_t}, BigRat(cell)});
                }
            }
        }
        // Grid order is (t, lambda) ascending, already canonical.
        return LaurentPoly::from_terms(std::move(out));
    }

    std::map<ExponentPair, BigRat> acc;
    for (const auto& x : a.terms()) {
        for (const auto& y : b.terms()) {
            acc[{x.exp.lambda_exp + y.exp.lambda_exp, x.exp.t_exp + y.exp.t_exp}] += x.coeff * y.coeff;
        }
    }
    out.reserve(acc.size());
    for (auto& [exp, c] : acc) {
        if (!c.is_zero()) out.push_back({exp, std::move(c)});
    }
    return LaurentPoly::from_terms(std::move(out));
}

/// (1 + lambda)^n, or any polynomial power.
inline LaurentPoly pow(const LaurentPoly& base, unsigned exponent) {
    LaurentPoly result(1);
    LaurentPoly b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        exponent >>= 1u;
        if (exponent) b *= b;
    }
    return result;
}

namespace detail {

// Graded lexicographic key: total degree, then t, then lambda.
inline bool grlex_less(const ExponentPair& a, const ExponentPair& b) {
    const int da = a.t_exp + a.lambda_exp;
    const int db = b.t_exp + b.lambda_exp;
    if (da != db) return da < db;
    if (a.t_exp != b.t_exp) return a.t_exp < b.t_exp;
    return a.lambda_exp < b.lambda_exp;
}

struct GrlexLess {
    bool operator()(const ExponentPair& a, const ExponentPair& b) const { return grlex_less(a, b); }
};

[[noreturn]] inline void inexact(const LaurentPoly& num, const LaurentPoly& den) {
    auto clip = [](std::string s) { return s.size() > 200 ? s.substr(0, 200) + "..." : s; };
    throw InexactDivision("(" + clip(num.to_string()) + ") is not divisible by (" + clip(den.to_string()) + ")");
}

// Division of ordinary polynomials (all exponents >= 0, den has a t^0 term)
// reducing leading terms in graded lexicographic order.
inline LaurentPoly divide_polynomials(const LaurentPoly& num, const LaurentPoly& den) {
    using Term = LaurentPoly::Term;
    const Term* lead = &den.terms()[0];
    for (const auto& term : den.terms()) {
        if (grlex_less(lead->exp, term.exp)) lead = &term;
    }
    const ExponentPair le = lead->exp;
    mpq_class lead_inv;
    mpq_inv(lead_inv.get_mpq_t(), lead->coeff.raw().get_mpq_t());

    std::vector<Term> quotient;
    const auto nb = box_of(num);
    mpq_class qc, prod;

    if (nb.cells() <= kDenseCellLimit) {
        // Dense remainder over the numerator's box; the quotient times den
        // never leaves that box when the division is exact.
        const int width = nb.max_lambda + 1;
        const int height = nb.max_t + 1;
        std::vector<mpq_class> rem(static_cast<std::size_t>(height) * width);
        for (const auto& term : num.terms()) {
            rem[static_cast<std::size_t>(term.exp.t_exp) * width + term.exp.lambda_exp] = term.coeff.raw();
        }
        const int max_degree = nb.max_t + nb.max_lambda;
        for (int d = max_degree; d >= 0; --d) {
            for (int t = std::min(d, nb.max_t); t >= 0 && d - t <= nb.max_lambda; --t) {
                const int l = d - t;
                auto& cell = rem[static_cast<std::size_t>(t) * width + l];
                if (sgn(cell) == 0) continue;
                if (t < le.t_exp || l < le.lambda_exp) inexact(num, den);
                mpq_mul(qc.get_mpq_t(), cell.get_mpq_t(), lead_inv.get_mpq_t());
                const int qt = t - le.t_exp;
                const int ql = l - le.lambda_exp;
                for (const auto& dt : den.terms()) {
                    const int rt = qt + dt.exp.t_exp;
                    const int rl = ql + dt.exp.lambda_exp;
                    if (rt > nb.max_t || rl > nb.max_lambda) inexact(num, den);
                    mpq_mul(prod.get_mpq_t(), qc.get_mpq_t(), dt.coeff.raw().get_mpq_t());
                    auto& target = rem[static_cast<std::size_t>(rt) * width + rl];
                    mpq_sub(target.get_mpq_t(), target.get_mpq_t(), prod.get_mpq_t());
                }
                quotient.push_back({{ql, qt}, BigRat(qc)});
            }
        }
        return LaurentPoly::from_terms(std::move(quotient));
    }

    std::map<ExponentPair, mpq_class, GrlexLess> rem;
    for (const auto& term : num.terms()) rem.emplace(term.exp, term.coeff.raw());
    while (!rem.empty()) {
        auto it = std::prev(rem.end());
        const ExponentPair m = it->first;
        if (m.t_exp < le.t_exp || m.lambda_exp < le.lambda_exp) inexact(num, den);
        mpq_mul(qc.get_mpq_t(), it->second.get_mpq_t(), lead_inv.get_mpq_t());
        const ExponentPair q{m.lambda_exp - le.lambda_exp, m.t_exp - le.t_exp};
        for (const auto& dt : den.terms()) {
            const ExponentPair key{q.lambda_exp + dt.exp.lambda_exp, q.t_exp + dt.exp.t_exp};
            mpq_mul(prod.get_mpq_t(), qc.get_mpq_t(), dt.coeff.raw().get_mpq_t());
            auto [slot, inserted] = rem.try_emplace(key);
            mpq_sub(slot->second.get_mpq_t(), slot->second.get_mpq_t(), prod.get_mpq_t());
            if (sgn(slot->second) == 0) rem.erase(slot);
        }
        quotient.push_back({q, BigRat(qc)});
    }
    return LaurentPoly::from_terms(std::move(quotient));
}

} // namespace detail

/// Exact quotient num/den in the Laurent ring. Both operands are shifted to
/// minimal t-exponent 0 (units of the ring) and divided as polynomials;
/// a nonzero remainder means no Laurent quotient exists.
inline LaurentPoly poly_exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw DivisionByZero("division by the zero polynomial");
    if (num.is_zero()) return {};
    if (den.is_monomial()) {
        const auto& d = den.terms()[0];
        std::vector<LaurentPoly::Term> out;
        out.reserve(num.term_count());
        for (const auto& term : num.terms()) {
            if (term.exp.lambda_exp < d.exp.lambda_exp) detail::inexact(num, den);
            out.push_back({{term.exp.lambda_exp - d.exp.lambda_exp, term.exp.t_exp - d.exp.t_exp},
                           term.coeff / d.coeff});
        }
        return LaurentPoly::from_terms(std::move(out));
    }
    const int num_shift = num.min_t_exp();
    const int den_shift = den.min_t_exp();
    LaurentPoly q = detail::divide_polynomials(num.shifted_t(-num_shift), den.shifted_t(-den_shift));
    return q.shifted_t(num_shift - den_shift);
}

inline LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline std::size_t poly_term_count(const LaurentPoly& p) { return p.term_count(); }

/// Exact value at (lambda, t). PoleAtZero when t = 0 meets a negative t power.
inline BigRat poly_eval(const LaurentPoly& p, const BigRat& lambda_val, const BigRat& t_val) {
    if (t_val.is_zero() && !p.is_zero() && p.min_t_exp() < 0) {
        throw PoleAtZero("evaluation at t = 0 of a polynomial with t^" + std::to_string(p.min_t_exp()));
    }
    BigRat sum;
    for (const auto& term : p.terms()) {
        BigRat v = term.coeff;
        if (term.exp.lambda_exp) v *= pow(lambda_val, term.exp.lambda_exp);
        if (term.exp.t_exp) v *= pow(t_val, term.exp.t_exp);
        sum += v;
    }
    return sum;
}

/// Substitutes a value for lambda, leaving a Laurent polynomial in t.
inline LaurentPoly substitute_lambda(const LaurentPoly& p, const BigRat& lambda_val) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(p.term_count());
    for (const auto& term : p.terms()) {
        BigRat v = term.coeff;
        if (term.exp.lambda_exp) v *= pow(lambda_val, term.exp.lambda_exp);
        out.push_back({{0, term.exp.t_exp}, std::move(v)});
    }
    return LaurentPoly::from_terms(std::move(out));
}

/// lim_{t->0} p: the t^0 part, provided no negative t power is present.
inline LaurentPoly poly_limit_at_t0(const LaurentPoly& p) {
    if (!p.is_zero() && p.min_t_exp() < 0) {
        throw PoleAtZero("limit t -> 0 diverges: term with t^" + std::to_string(p.min_t_exp()));
    }
    std::vector<LaurentPoly::Term> keep;
    for (const auto& term : p.terms()) {
        if (term.exp.t_exp == 0) keep.push_back(term);
    }
    return LaurentPoly::from_terms(std::move(keep));
}

// Grammar (superset of to_string output):
//   poly   := term (('+' | '-') term)*
//   term   := ['-'] factor ('*' factor)*
//   factor := integer ['/' integer] | ('l' | 't') ['^' ['-'] integer]
inline LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw ParseError(what + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_digits = [&]() -> std::string {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected digits");
        return std::string(text.substr(start, pos - start));
    };
    auto read_int = [&]() -> int {
        skip_ws();
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        const std::string digits = read_digits();
        if (digits.size() > 9) fail("exponent out of range");
        const int v = std::stoi(digits);
        return negative ? -v : v;
    };

    std::vector<Term> terms;
    skip_ws();
    if (pos == text.size()) fail("empty polynomial");
    bool negative = false;
    while (true) {
        skip_ws();
        if (pos < text.size() && text[pos] == '-') {
            negative = !negative;
            ++pos;
            skip_ws();
        }
        BigRat coeff = negative ? BigRat(-1) : BigRat(1);
        ExponentPair exp;
        bool first = true;
        while (true) {
            skip_ws();
            if (!first) {
                if (pos < text.size() && text[pos] == '*') {
                    ++pos;
                    skip_ws();
                } else {
                    break;
                }
            }
            first = false;
            if (pos >= text.size()) fail("expected factor");
            const char c = text[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = read_digits();
                std::string den = "1";
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    den = read_digits();
                }
                coeff *= BigRat(BigInt(num, 10), BigInt(den, 10));
            } else if (c == 'l' || c == 't') {
                ++pos;
                int e = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    e = read_int();
                }
                (c == 'l' ? exp.lambda_exp : exp.t_exp) += e;
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
        }
        check_lambda_exp(exp.lambda_exp);
        terms.push_back({exp, coeff});
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] == '+') {
            negative = false;
        } else if (text[pos] == '-') {
            negative = true;
        } else {
            fail(std::string("unexpected character '") + text[pos] + "'");
        }
        ++pos;
    }
    return from_terms(std::move(terms));
}

} // namespace lambdadet

#endif // LAMBDADET_LAURENT_POLY_HPP
