#ifndef LAMBDADET_MATRIX_HPP
#define LAMBDADET_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "lambdadet/bigrat.hpp"
#include "lambdadet/error.hpp"
#include "lambdadet/laurent_poly.hpp"

namespace lambdadet {

/// Square n-by-n grid with 1-based (i, j) indexing.
template <typename T>
class Grid {
public:
    Grid() = default;
    explicit Grid(int size, const T& fill = T{}) : size_(size), cells_(static_cast<std::size_t>(size) * size, fill) {
        if (size < 0) throw SizeMismatch("negative grid size");
    }

    static Grid from_rows(const std::vector<std::vector<T>>& rows) {
        Grid g(static_cast<int>(rows.size()));
        for (int i = 1; i <= g.size_; ++i) {
            if (static_cast<int>(rows[i - 1].size()) != g.size_) {
                throw SizeMismatch("row " + std::to_string(i) + " has " + std::to_string(rows[i - 1].size()) +
                                   " entries, expected " + std::to_string(g.size_));
            }
            for (int j = 1; j <= g.size_; ++j) g(i, j) = rows[i - 1][j - 1];
        }
        return g;
    }

    int size() const noexcept { return size_; }

    T& operator()(int i, int j) { return cells_[index(i, j)]; }
    const T& operator()(int i, int j) const { return cells_[index(i, j)]; }

    /// Connected k-by-k submatrix whose top-left entry is (i, j).
    Grid window(int i, int j, int k) const {
        Grid w(k);
        for (int r = 1; r <= k; ++r)
            for (int c = 1; c <= k; ++c) w(r, c) = (*this)(i + r - 1, j + c - 1);
        return w;
    }

    std::vector<std::vector<T>> rows() const {
        std::vector<std::vector<T>> out(static_cast<std::size_t>(size_));
        for (int i = 1; i <= size_; ++i)
            for (int j = 1; j <= size_; ++j) out[i - 1].push_back((*this)(i, j));
        return out;
    }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(j - 1);
    }

    int size_ = 0;
    std::vector<T> cells_;
};

using PolyMatrix = Grid<LaurentPoly>;
using InputMatrix = PolyMatrix;
using RatMatrix = Grid<BigRat>;

inline PolyMatrix all_ones_matrix(int n) { return PolyMatrix(n, LaurentPoly(1)); }

inline bool is_constant_matrix(const PolyMatrix& m) {
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j)
            if (!m(i, j).is_constant()) return false;
    return true;
}

/// Constant entries as rationals; NonConstantEntry otherwise.
inline RatMatrix to_rational(const PolyMatrix& m) {
    RatMatrix r(m.size());
    for (int i = 1; i <= m.size(); ++i) {
        for (int j = 1; j <= m.size(); ++j) {
            if (!m(i, j).is_constant()) {
                throw NonConstantEntry("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                       m(i, j).to_string());
            }
            r(i, j) = m(i, j).constant_value();
        }
    }
    return r;
}

// JSON matrix files: {"size": n, "entries": [[...], ...]} where an entry is
// an integer or a polynomial string in the LaurentPoly grammar.

inline LaurentPoly entry_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return LaurentPoly(BigRat(static_cast<long>(v.get<long long>())));
    if (v.is_string()) return LaurentPoly::parse(v.get<std::string>());
    throw ParseError("matrix entry must be an integer or a polynomial string, got " + v.dump());
}

inline PolyMatrix matrix_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
        throw ParseError("matrix document needs an \"entries\" array");
    }
    const auto& rows = doc["entries"];
    const int n = static_cast<int>(rows.size());
    if (n < 1) throw ParseError("matrix must have at least one row");
    if (doc.contains("size")) {
        if (!doc["size"].is_number_integer() || doc["size"].get<int>() != n) {
            throw SizeMismatch("\"size\" does not match the number of rows");
        }
    }
    PolyMatrix m(n);
    for (int i = 1; i <= n; ++i) {
        const auto& row = rows[i - 1];
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw SizeMismatch("row " + std::to_string(i) + " is not of length " + std::to_string(n));
        }
        for (int j = 1; j <= n; ++j) m(i, j) = entry_from_json(row[j - 1]);
    }
    return m;
}

/// Integer entries are written as JSON numbers when they fit, everything
/// else as polynomial strings.
inline nlohmann::json matrix_to_json(const PolyMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= m.size(); ++j) {
            const auto& e = m(i, j);
            if (e.is_constant() && e.constant_value().is_integer() && e.constant_value().numerator().fits_slong_p()) {
                row.push_back(e.constant_value().numerator().get_si());
            } else {
                row.push_back(e.to_string());
            }
        }
        rows.push_back(std::move(row));
    }
    return {{"size", m.size()}, {"entries", std::move(rows)}};
}

} // namespace lambdadet

#endif // LAMBDADET_MATRIX_HPP
