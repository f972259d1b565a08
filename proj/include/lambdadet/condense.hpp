#ifndef LAMBDADET_CONDENSE_HPP
#define LAMBDADET_CONDENSE_HPP

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "lambdadet/bigrat.hpp"
#include "lambdadet/error.hpp"
#include "lambdadet/laurent_poly.hpp"
#include "lambdadet/matrix.hpp"

namespace lambdadet {

enum class Parity { even, odd };

/// Central diamond of 1s surrounded by 0s.
///   even: size 2n, entry 1 iff |2i-2n-1| + |2j-2n-1| <= 2n
///   odd:  size 2n+1, entry 1 iff |i-n-1| + |j-n-1| <= n
inline PolyMatrix diamond_matrix(int half_order, Parity parity) {
    if (half_order < 1) throw SizeMismatch("diamond half-order must be at least 1");
    const int n = half_order;
    const int size = parity == Parity::even ? 2 * n : 2 * n + 1;
    PolyMatrix m(size, LaurentPoly(0));
    for (int i = 1; i <= size; ++i) {
        for (int j = 1; j <= size; ++j) {
            const bool inside = parity == Parity::even
                                    ? std::abs(2 * i - 2 * n - 1) + std::abs(2 * j - 2 * n - 1) <= 2 * n
                                    : std::abs(i - n - 1) + std::abs(j - n - 1) <= n;
            if (inside) m(i, j) = LaurentPoly(1);
        }
    }
    return m;
}

/// Replaces every zero entry by t.
inline PolyMatrix t_perturb(const PolyMatrix& m) {
    PolyMatrix out = m;
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j)
            if (m(i, j).is_zero()) out(i, j) = LaurentPoly::t();
    return out;
}

/// Values of every connected k-by-k submatrix, k = 1..n. Layer k is an
/// (n-k+1)-square grid; layer 1 is the input and layer n holds the result.
template <typename T>
class CondensationPyramid {
public:
    explicit CondensationPyramid(std::vector<Grid<T>> layers) : layers_(std::move(layers)) {}

    int order() const noexcept { return static_cast<int>(layers_.size()); }
    const Grid<T>& layer(int k) const { return layers_.at(static_cast<std::size_t>(k - 1)); }
    const T& top() const { return layers_.back()(1, 1); }
    const std::vector<Grid<T>>& layers() const noexcept { return layers_; }

private:
    std::vector<Grid<T>> layers_;
};

using SymbolicPyramid = CondensationPyramid<LaurentPoly>;
using NumericPyramid = CondensationPyramid<BigRat>;

namespace detail {

// Runs body(index) for index in [0, count) on up to `threads` workers.
// The first exception thrown by any worker is rethrown here.
template <typename Body>
void parallel_for(int count, int threads, Body&& body) {
    threads = std::clamp(threads, 1, std::max(1, count));
    if (threads == 1) {
        for (int idx = 0; idx < count; ++idx) body(idx);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (int idx = w; idx < count; idx += threads) body(idx);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& worker : workers) worker.join();
    if (failure) std::rethrow_exception(failure);
}

inline std::string position(int k, int i, int j) {
    return "layer " + std::to_string(k) + " position (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace detail

/// Symbolic lambda-determinant over Q(lambda)[t, 1/t]:
///   det = (NW * SE + lambda * NE * SW) / C
/// evaluated bottom-up over all connected submatrices, every division exact.
inline SymbolicPyramid lambda_det_dp(const PolyMatrix& m, int threads = 1) {
    const int n = m.size();
    if (n < 1) throw SizeMismatch("empty matrix");
    const LaurentPoly lambda = LaurentPoly::lambda();
    std::vector<PolyMatrix> layers{m};
    for (int k = 2; k <= n; ++k) {
        const int width = n - k + 1;
        const PolyMatrix& prev = layers[static_cast<std::size_t>(k - 2)];
        const PolyMatrix* inner = k >= 3 ? &layers[static_cast<std::size_t>(k - 3)] : nullptr;
        PolyMatrix next(width);
        detail::parallel_for(width * width, threads, [&](int idx) {
            const int i = idx / width + 1;
            const int j = idx % width + 1;
            LaurentPoly num = prev(i, j) * prev(i + 1, j + 1) + lambda * (prev(i, j + 1) * prev(i + 1, j));
            if (inner == nullptr) {
                next(i, j) = std::move(num);
                return;
            }
            const LaurentPoly& center = (*inner)(i + 1, j + 1);
            if (center.is_zero()) {
                throw ZeroMinor("central minor vanishes at " + detail::position(k, i, j));
            }
            next(i, j) = poly_exact_div(num, center);
        });
        layers.push_back(std::move(next));
    }
    return SymbolicPyramid(std::move(layers));
}

/// Same recurrence with lambda fixed before recursing. With zero_over_zero a
/// 0/0 step yields 0; x/0 with x != 0 is always an error.
inline NumericPyramid lambda_det_numeric(const RatMatrix& m, const BigRat& lambda, bool zero_over_zero) {
    const int n = m.size();
    if (n < 1) throw SizeMismatch("empty matrix");
    std::vector<RatMatrix> layers{m};
    for (int k = 2; k <= n; ++k) {
        const int width = n - k + 1;
        const RatMatrix& prev = layers[static_cast<std::size_t>(k - 2)];
        RatMatrix next(width);
        for (int i = 1; i <= width; ++i) {
            for (int j = 1; j <= width; ++j) {
                BigRat num = prev(i, j) * prev(i + 1, j + 1) + lambda * prev(i, j + 1) * prev(i + 1, j);
                if (k == 2) {
                    next(i, j) = std::move(num);
                    continue;
                }
                const BigRat& center = layers[static_cast<std::size_t>(k - 3)](i + 1, j + 1);
                if (center.is_zero()) {
                    if (!num.is_zero()) {
                        throw CondensationBreakdown(num.to_string() + "/0 at " + detail::position(k, i, j));
                    }
                    if (!zero_over_zero) throw IndeterminateForm("0/0 at " + detail::position(k, i, j));
                    next(i, j) = BigRat(0);
                    continue;
                }
                next(i, j) = num / center;
            }
        }
        layers.push_back(std::move(next));
    }
    return NumericPyramid(std::move(layers));
}

inline NumericPyramid lambda_det_numeric(const PolyMatrix& m, const BigRat& lambda, bool zero_over_zero) {
    return lambda_det_numeric(to_rational(m), lambda, zero_over_zero);
}

/// lim_{t->0} of the lambda-determinant of the t-perturbed matrix.
inline LaurentPoly lambda_det_limit(const PolyMatrix& m, int threads = 1) {
    if (!is_constant_matrix(m)) {
        throw NonConstantEntry("the t-perturbation limit needs a constant matrix");
    }
    return poly_limit_at_t0(lambda_det_dp(t_perturb(m), threads).top());
}

/// Numeric layers 1..n, for display and for the trimmed-region checks.
inline std::vector<RatMatrix> condensation_trace(const PolyMatrix& m, const BigRat& lambda,
                                                 bool zero_over_zero = false) {
    return lambda_det_numeric(m, lambda, zero_over_zero).layers();
}

// ---------------------------------------------------------------------------
// Output

template <typename T>
std::string cell_text(const T& v) {
    return v.to_string();
}

/// Layers separated by blank lines, columns right-aligned per layer.
template <typename T>
std::string format_layers_text(const std::vector<Grid<T>>& layers) {
    std::ostringstream os;
    for (std::size_t k = 0; k < layers.size(); ++k) {
        const auto& g = layers[k];
        std::size_t w = 1;
        for (int i = 1; i <= g.size(); ++i)
            for (int j = 1; j <= g.size(); ++j) w = std::max(w, cell_text(g(i, j)).size());
        os << "layer " << (k + 1) << ":\n";
        for (int i = 1; i <= g.size(); ++i) {
            for (int j = 1; j <= g.size(); ++j) {
                const std::string s = cell_text(g(i, j));
                os << (j > 1 ? " " : "") << std::string(w - s.size(), ' ') << s;
            }
            os << '\n';
        }
        if (k + 1 < layers.size()) os << '\n';
    }
    return os.str();
}

/// Nested arrays; rationals and polynomials as strings.
template <typename T>
nlohmann::json layers_to_json(const std::vector<Grid<T>>& layers) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& g : layers) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 1; i <= g.size(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 1; j <= g.size(); ++j) row.push_back(cell_text(g(i, j)));
            rows.push_back(std::move(row));
        }
        out.push_back(std::move(rows));
    }
    return out;
}

} // namespace lambdadet

#endif // LAMBDADET_CONDENSE_HPP
