#include "appell/poly.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "test_support.hpp"

namespace appell {
namespace {

using testing::random_bipoly;
using testing::random_rational;

TEST(RationalTest, CanonicalForm) {
    const Rational r(6, 8);
    EXPECT_EQ(r.numerator(), 3);
    EXPECT_EQ(r.denominator(), 4);

    const Rational negative_den(3, -6);
    EXPECT_EQ(negative_den.numerator(), -1);
    EXPECT_EQ(negative_den.denominator(), 2);

    const Rational zero(0, 5);
    EXPECT_TRUE(zero.is_zero());
    EXPECT_EQ(zero.numerator(), 0);
    EXPECT_EQ(zero.denominator(), 1);
}

TEST(RationalTest, ZeroDenominatorRejected) {
    EXPECT_THROW(Rational(2, 0), std::invalid_argument);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(RationalTest, Parse) {
    EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
    EXPECT_EQ(Rational::parse("-4/8").str(), "-1/2");
    EXPECT_EQ(Rational::parse("7").str(), "7");
    EXPECT_EQ(Rational::parse("4/-6"), Rational(-2, 3));
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST(RationalTest, PowHandlesNegativeExponents) {
    EXPECT_EQ(pow(Rational(2), 3), Rational(8));
    EXPECT_EQ(pow(Rational(2), -2), Rational(1, 4));
    EXPECT_EQ(pow(Rational(0), 0), Rational(1));
    EXPECT_THROW(pow(Rational(0), -1), std::domain_error);
}

TEST(CombinatoricsTest, FallingFactorial) {
    EXPECT_EQ(falling_factorial(5, 2), 20);
    EXPECT_EQ(falling_factorial(0, 0), 1);
    EXPECT_EQ(falling_factorial(7, 0), 1);
    EXPECT_EQ(falling_factorial(3, 5), 0);
    EXPECT_EQ(falling_factorial(3, 3), 6);
}

TEST(CombinatoricsTest, Binomial) {
    EXPECT_EQ(binomial(6, 2), 15);
    EXPECT_EQ(binomial(9, 0), 1);
    EXPECT_EQ(binomial(2, 5), 0);
    EXPECT_EQ(binomial(40, 20), Integer("137846528820"));
}

BiPoly x_cubed_minus_3nux() {
    return BiPoly::term(Rational(1), 3, 0) + BiPoly::term(Rational(-3), 1, 1);
}

TEST(BiPolyTest, AdditionExamples) {
    const BiPoly p = BiPoly::term(Rational(1), 2, 0) - BiPoly::nu();
    EXPECT_EQ(p + BiPoly::nu(), BiPoly::term(Rational(1), 2, 0));

    const std::mt19937::result_type seed = 7;
    std::mt19937 rng(seed);
    for (int i = 0; i < 32; ++i) {
        const BiPoly q = random_bipoly(rng);
        EXPECT_EQ(BiPoly() + q, q);
    }

    const BiPoly three_nux = BiPoly::term(Rational(3), 1, 1);
    EXPECT_EQ(x_cubed_minus_3nux() + three_nux, BiPoly::term(Rational(1), 3, 0));
}

TEST(BiPolyTest, MultiplicationExamples) {
    const BiPoly x = BiPoly::x();
    const BiPoly nu = BiPoly::nu();
    EXPECT_EQ((x - nu) * (x + nu),
              BiPoly::term(Rational(1), 2, 0) - BiPoly::term(Rational(1), 0, 2));
    const BiPoly p = x_cubed_minus_3nux();
    EXPECT_EQ(BiPoly(1) * p, p);
    EXPECT_EQ(x * (x * x - nu), BiPoly::term(Rational(1), 3, 0) - BiPoly::term(Rational(1), 1, 1));
}

TEST(BiPolyTest, DiffExamples) {
    EXPECT_EQ(diff_x(x_cubed_minus_3nux()),
              BiPoly::term(Rational(3), 2, 0) + BiPoly::term(Rational(-3), 0, 1));
    EXPECT_TRUE(diff_x(BiPoly::term(Rational(1), 0, 2)).is_zero());
    EXPECT_EQ(diff_x(BiPoly::term(Rational(1), 2, 0) - BiPoly::nu()), BiPoly::term(Rational(2), 1, 0));
}

TEST(BiPolyTest, EvalExamples) {
    const BiPoly p = BiPoly::term(Rational(1), 2, 0) - BiPoly::nu();
    EXPECT_EQ(p.eval(Rational(2), Rational(1)), Rational(3));
    EXPECT_EQ(p.eval(Rational(1), Rational(1)), Rational(0));

    const BiPoly h4 = BiPoly::term(Rational(16), 4, 0) + BiPoly::term(Rational(-48), 2, 0) + BiPoly(12);
    EXPECT_EQ(h4.eval(Rational(1), Rational(0)), Rational(-20));
}

TEST(BiPolyTest, DegreeOfZeroIsEmpty) {
    EXPECT_FALSE(BiPoly().degree_x().has_value());
    EXPECT_FALSE(BiPoly().degree_nu().has_value());
    EXPECT_EQ(x_cubed_minus_3nux().degree_x(), 3u);
    EXPECT_EQ(x_cubed_minus_3nux().degree_nu(), 1u);
}

TEST(BiPolyTest, SubstituteAndScale) {
    const BiPoly p = x_cubed_minus_3nux();
    EXPECT_EQ(p.substitute_nu(Rational(1)),
              BiPoly::term(Rational(1), 3, 0) + BiPoly::term(Rational(-3), 1, 0));
    EXPECT_EQ(BiPoly::x().scale_x(Rational(2)), BiPoly::term(Rational(2), 1, 0));
    EXPECT_EQ(p.scale_x(Rational(2)).substitute_nu(Rational(2)),
              BiPoly::term(Rational(8), 3, 0) + BiPoly::term(Rational(-12), 1, 0));
}

TEST(RenderTest, Grammar) {
    EXPECT_EQ(BiPoly().str(), "0");
    EXPECT_EQ(BiPoly(1).str(), "1");
    EXPECT_EQ(BiPoly(-1).str(), "-1");
    EXPECT_EQ(BiPoly(Rational(1, 2)).str(), "1/2");
    EXPECT_EQ(BiPoly::x().str(), "x");
    EXPECT_EQ(BiPoly::nu().str(), "v");
    EXPECT_EQ((-BiPoly::nu()).str(), "-v");
    EXPECT_EQ(BiPoly::term(Rational(15), 0, 2).str(), "15*v^2");
    EXPECT_EQ(BiPoly::term(Rational(1, 2), 1, 0).str(), "1/2*x");
    EXPECT_EQ(x_cubed_minus_3nux().str(), "x^3 - 3*v*x");
    EXPECT_EQ((BiPoly::term(Rational(1), 4, 0) + BiPoly::term(Rational(-6), 2, 1) +
               BiPoly::term(Rational(3), 0, 2))
                  .str(),
              "x^4 - 6*v*x^2 + 3*v^2");
}

TEST(RenderTest, CanonicalTermOrder) {
    // Descending in deg_x, ties ascending in deg_nu.
    const BiPoly p = BiPoly::term(Rational(3), 1, 2) + BiPoly::term(Rational(2), 1, 0) +
                     BiPoly::term(Rational(1), 3, 0);
    EXPECT_EQ(p.str(), "x^3 + 2*x + 3*v^2*x");
}

TEST(NuPolyTest, BasicsAndRendering) {
    EXPECT_EQ(NuPoly().str(), "0");
    EXPECT_EQ(NuPoly(1).str(), "1");
    EXPECT_EQ(NuPoly::term(Rational(-15), 3).str(), "-15*v^3");
    EXPECT_EQ((NuPoly(1) + NuPoly::term(Rational(1), 1)).str(), "1 + v");
    EXPECT_FALSE(NuPoly().degree().has_value());
    EXPECT_EQ(NuPoly::term(Rational(3), 2).degree(), 2u);
}

TEST(NuPolyTest, ArithmeticAndEmbedding) {
    const NuPoly a = NuPoly::term(Rational(2), 1);
    const NuPoly b = NuPoly::term(Rational(-2), 1);
    EXPECT_TRUE((a + b).is_zero());
    EXPECT_EQ(a.times_nu(), NuPoly::term(Rational(2), 2));
    EXPECT_EQ((-a), b);
    EXPECT_EQ(a.to_bipoly(), BiPoly::term(Rational(2), 0, 1));
    EXPECT_EQ(NuPoly::term(Rational(5), 2).coefficient(2), Rational(5));
    EXPECT_EQ(NuPoly::term(Rational(5), 2).coefficient(1), Rational(0));
}

TEST(PolyPropertyTest, RingAxioms) {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 1000; ++i) {
        const BiPoly a = random_bipoly(rng);
        const BiPoly b = random_bipoly(rng);
        const BiPoly c = random_bipoly(rng);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(PolyPropertyTest, LeibnizRule) {
    std::mt19937 rng(42);
    for (int i = 0; i < 1000; ++i) {
        const BiPoly a = random_bipoly(rng);
        const BiPoly b = random_bipoly(rng);
        ASSERT_EQ(diff_x(a * b), a * diff_x(b) + b * diff_x(a));
    }
}

TEST(PolyPropertyTest, EvalIsRingHomomorphism) {
    std::mt19937 rng(3);
    for (int i = 0; i < 1000; ++i) {
        const BiPoly a = random_bipoly(rng, 4, 5);
        const BiPoly b = random_bipoly(rng, 4, 5);
        const Rational x = random_rational(rng);
        const Rational nu = random_rational(rng);
        ASSERT_EQ((a * b).eval(x, nu), a.eval(x, nu) * b.eval(x, nu));
        ASSERT_EQ((a + b).eval(x, nu), a.eval(x, nu) + b.eval(x, nu));
    }
}

TEST(PolyPropertyTest, CancellationKeepsCanonicalForm) {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const BiPoly a = random_bipoly(rng);
        ASSERT_TRUE((a - a).is_zero());
        ASSERT_EQ((a - a).str(), "0");
        const BiPoly square = a * a;
        for (const auto& [mono, coeff] : square.terms()) {
            ASSERT_FALSE(coeff.is_zero());
        }
    }
}

}  // namespace
}  // namespace appell
