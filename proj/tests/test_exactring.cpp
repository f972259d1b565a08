#include <random>

#include <gtest/gtest.h>

#include "lambdadet/laurent_poly.hpp"

using namespace lambdadet;

namespace {

const LaurentPoly L = LaurentPoly::lambda();
const LaurentPoly T = LaurentPoly::t();

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

// Up to `terms` random terms with small rational coefficients, lambda in
// [0, 3] and t in [-3, 3].
LaurentPoly random_poly(std::mt19937_64& rng, int terms = 4) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4), le(0, 3), te(-3, 3), count(0, terms);
    std::vector<LaurentPoly::Term> out;
    for (int k = count(rng); k > 0; --k) {
        out.push_back({{le(rng), te(rng)}, BigRat(BigInt(num(rng)), BigInt(den(rng)))});
    }
    return LaurentPoly::from_terms(std::move(out));
}

} // namespace

TEST(BigRat, Canonical) {
    const BigRat r(BigInt(6), BigInt(-4));
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(BigRat(0, 5).to_string(), "0");
    EXPECT_EQ(BigRat::parse("10/-4"), BigRat(-5, 2));
    EXPECT_EQ(BigRat::parse("-7").to_string(), "-7");
}

TEST(BigRat, Errors) {
    EXPECT_THROW(BigRat(1, 0), DivisionByZero);
    EXPECT_THROW(BigRat(1) / BigRat(0), DivisionByZero);
    EXPECT_THROW(BigRat::parse("1/0"), Error);
    EXPECT_THROW(BigRat::parse("abc"), ParseError);
    EXPECT_THROW(BigRat::parse(""), ParseError);
}

TEST(BigRat, PowNegativeExponent) {
    EXPECT_EQ(pow(BigRat(2, 3), -2), BigRat(9, 4));
    EXPECT_EQ(pow(BigRat(5), 0), BigRat(1));
    EXPECT_EQ(pow2(70), BigInt("1180591620717411303424"));
}

TEST(PolyMul, SpecExamples) {
    EXPECT_EQ(poly_mul(1 + L, 1 + L), P("1 + 2*l + l^2"));
    EXPECT_EQ(poly_mul(L * T.shifted_t(-2), T), L);
    EXPECT_EQ((1 + L) * (1 + L) * (1 + L), P("1 + 3*l + 3*l^2 + l^3"));
}

TEST(PolyMul, ZeroIsAbsorbing) {
    EXPECT_TRUE((P("3*l*t^-2 + 1") * LaurentPoly()).is_zero());
    EXPECT_EQ(LaurentPoly().term_count(), 0u);
}

TEST(PolyMul, LargeExponentBoxUsesSparseKernel) {
    // The exponent box of the product spans far more than the dense limit.
    const LaurentPoly a = P("1 + t^900000") + L.shifted_t(-900000);
    const LaurentPoly b = P("1 + l^3*t^5");
    const LaurentPoly prod = a * b;
    EXPECT_EQ(prod.term_count(), 6u);
    EXPECT_EQ(prod.coeff(4, -899995), BigRat(1));
    EXPECT_EQ(poly_exact_div(prod, b), a);
    EXPECT_EQ(poly_exact_div(prod, a), b);
}

TEST(PolyDiv, SpecExamples) {
    EXPECT_EQ(poly_exact_div(1 - T * T, 1 - T), 1 + T);
    EXPECT_EQ(poly_exact_div(pow(1 + L, 6), pow(1 + L, 3)), pow(1 + L, 3));
    const LaurentPoly minor = pow(1 + L, 6);
    EXPECT_EQ(poly_exact_div(minor * minor + L * minor * minor, pow(1 + L, 3)), pow(1 + L, 10));
}

TEST(PolyDiv, MonomialAndNegativeShift) {
    EXPECT_EQ(poly_exact_div(P("2*l*t + 4*l^2*t^3"), P("2*l*t^-1")), P("t^2 + 2*l*t^4"));
    EXPECT_EQ(poly_exact_div(P("t^-3 + t^-1"), P("t^-2 + 1")), P("t^-1"));
}

TEST(PolyDiv, Errors) {
    EXPECT_THROW(poly_exact_div(1 + T, LaurentPoly()), DivisionByZero);
    EXPECT_THROW(poly_exact_div(1 + T * T, 1 + T), InexactDivision);
    EXPECT_THROW(poly_exact_div(1 + L, 1 + T), InexactDivision);
    EXPECT_EQ(poly_exact_div(L, T), P("l*t^-1"));
}

TEST(PolyDiv, RoundTripRandom) {
    std::mt19937_64 rng(20040516);
    for (int trial = 0; trial < 300; ++trial) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        const LaurentPoly prod = a * b;
        EXPECT_EQ(poly_exact_div(prod, b) * b, prod);
        EXPECT_EQ(poly_exact_div(prod, b), a);
    }
}

TEST(Ring, AxiomsRandom) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a * LaurentPoly(1), a);
    }
}

TEST(Eval, SpecExamples) {
    EXPECT_EQ(poly_eval(pow(1 + L, 3), 1, 0), BigRat(8));
    EXPECT_EQ(poly_eval(P("2*l + 2*l^2"), 1, 0), BigRat(4));
    EXPECT_EQ(poly_eval(P("l*t^-2"), 3, BigRat(1, 2)), BigRat(12));
    EXPECT_THROW(poly_eval(P("1 + t^-1"), 1, 0), PoleAtZero);
}

TEST(Eval, HomomorphismRandom) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> v(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng);
        BigRat tv(v(rng), 3);
        if (tv.is_zero()) tv = BigRat(1, 7);
        const BigRat lv(v(rng), 2);
        EXPECT_EQ(poly_eval(a * b, lv, tv), poly_eval(a, lv, tv) * poly_eval(b, lv, tv));
        EXPECT_EQ(poly_eval(a + b, lv, tv), poly_eval(a, lv, tv) + poly_eval(b, lv, tv));
    }
}

TEST(Limit, SpecExamples) {
    EXPECT_EQ(poly_limit_at_t0(3 + T), LaurentPoly(3));
    EXPECT_THROW(poly_limit_at_t0(P("t^-1 + 1")), PoleAtZero);
    EXPECT_EQ(poly_limit_at_t0(P("2*l + 2*l^2 + 2*l*t^3 + 1/2*t^6")), P("2*l + 2*l^2"));
}

TEST(SubstituteLambda, KeepsT) {
    EXPECT_EQ(substitute_lambda(P("1 + l*t + l^2*t"), 2), P("1 + 6*t"));
}

TEST(TermCount, SpecExamples) { EXPECT_EQ(poly_term_count(pow(1 + L, 2)), 3u); }

TEST(Text, CanonicalForm) {
    EXPECT_EQ(LaurentPoly().to_string(), "0");
    EXPECT_EQ((1 + L).to_string(), "1 + 1*l^1");
    EXPECT_EQ(P("1/2*t^6 + 2*l + l^3*t^6 - 3*t^-1").to_string(), "-3*t^-1 + 2*l^1 + 1/2*t^6 + 1*l^3*t^6");
}

TEST(Text, RoundTripRandom) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const LaurentPoly a = random_poly(rng, 6);
        EXPECT_EQ(LaurentPoly::parse(a.to_string()), a) << a.to_string();
    }
}

TEST(Text, ParseErrors) {
    EXPECT_THROW(P("1 +"), ParseError);
    EXPECT_THROW(P("x"), ParseError);
    EXPECT_THROW(P("l^"), ParseError);
    EXPECT_THROW(P("l^-1"), InvalidExponent);
}

TEST(Construction, NegativeLambdaExponent) {
    EXPECT_THROW(LaurentPoly::monomial(1, -1, 0), InvalidExponent);
    EXPECT_TRUE(LaurentPoly::monomial(0, 2, 2).is_zero());
}

TEST(Construction, FromTermsMergesAndDropsZeros) {
    const LaurentPoly p = LaurentPoly::from_terms({{{1, 0}, BigRat(2)}, {{1, 0}, BigRat(-2)}, {{0, 1}, BigRat(3)}});
    EXPECT_EQ(p, 3 * T);
    EXPECT_EQ(p.term_count(), 1u);
}
