#ifndef LAMBDADET_BIGRAT_HPP
#define LAMBDADET_BIGRAT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "lambdadet/error.hpp"

namespace lambdadet {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
/// Zero is 0/1. Thin value wrapper over GMP's mpq_class that keeps the
/// canonical form after every operation.
class BigRat {
public:
    BigRat() = default;
    BigRat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    BigRat(int value) : q_(static_cast<long>(value)) {}  // NOLINT
    BigRat(const BigInt& value) : q_(value) {}  // NOLINT
    /// Takes a value already in canonical form.
    explicit BigRat(const mpq_class& value) : q_(value) {}

    BigRat(const BigInt& numerator, const BigInt& denominator) {
        if (denominator == 0) {
            throw DivisionByZero("rational with zero denominator");
        }
        q_ = mpq_class(numerator, denominator);
        q_.canonicalize();
    }

    /// Parses "a", "-a", "a/b" with decimal integers a, b (b != 0).
    static BigRat parse(std::string_view text) {
        std::string s(text);
        auto trim = [](std::string& v) {
            const auto first = v.find_first_not_of(" \t\n\r");
            const auto last = v.find_last_not_of(" \t\n\r");
            v = first == std::string::npos ? std::string{} : v.substr(first, last - first + 1);
        };
        trim(s);
        if (s.empty()) {
            throw ParseError("empty rational literal");
        }
        const auto slash = s.find('/');
        std::string num = s.substr(0, slash);
        std::string den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
        trim(num);
        trim(den);
        if (!is_integer_literal(num) || !is_integer_literal(den)) {
            throw ParseError("malformed rational literal '" + s + "'");
        }
        if (num.front() == '+') num.erase(0, 1);
        if (den.front() == '+') den.erase(0, 1);
        return BigRat(BigInt(num, 10), BigInt(den, 10));
    }

    const mpq_class& raw() const noexcept { return q_; }
    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    std::string to_string() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    BigRat& operator+=(const BigRat& o) { q_ += o.q_; return *this; }
    BigRat& operator-=(const BigRat& o) { q_ -= o.q_; return *this; }
    BigRat& operator*=(const BigRat& o) { q_ *= o.q_; return *this; }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
    friend BigRat operator-(const BigRat& a) { BigRat r; r.q_ = -a.q_; return r; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.to_string(); }

private:
    static bool is_integer_literal(const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    }

    mpq_class q_;
};

/// base^exponent; negative exponents invert (DivisionByZero for 0^-k).
inline BigRat pow(const BigRat& base, long exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw DivisionByZero("zero raised to a negative power");
        return pow(BigRat(1) / base, -exponent);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return BigRat(num, den);
}

inline BigInt pow2(unsigned long exponent) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
    return r;
}

} // namespace lambdadet

#endif // LAMBDADET_BIGRAT_HPP
