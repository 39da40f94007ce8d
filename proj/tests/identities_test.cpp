#include "appell/identities.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <stdexcept>

#include "appell/hermite.hpp"

namespace appell {
namespace {

TEST(Theorem1Test, PointExamples) {
    EXPECT_TRUE(verify_theorem1(0, 8).passed());
    EXPECT_TRUE(verify_theorem1(2, 10).passed());
    EXPECT_TRUE(verify_theorem1(4, 12).passed());
}

TEST(Theorem1Test, RejectsShallowTruncation) {
    EXPECT_THROW(verify_theorem1(2, 3), std::invalid_argument);
    EXPECT_THROW(verify_theorem1(0, 1), std::invalid_argument);
    EXPECT_NO_THROW(verify_theorem1(0, 2));
}

TEST(Theorem2Test, PointExamples) {
    for (unsigned n = 0; n <= 8; ++n) {
        EXPECT_TRUE(verify_theorem2(0, n).passed()) << "N=" << n;
    }
    EXPECT_TRUE(verify_theorem2(1, 2).passed());
    EXPECT_TRUE(verify_theorem2(3, 4).passed());
}

TEST(Theorem2Test, RhsCollapsesAtKZero) {
    // With k = 0 only l = 0 survives and the sum reduces to
    // sum_i a_i(N, v) x^i, which is H_N of variance v.
    const CoeffTable table = CoeffTable::build_recurrence(7);
    BiPoly expected;
    for (unsigned i = 0; i <= 7; ++i) {
        expected += table.at(7, i).to_bipoly() * BiPoly::term(Rational(1), i, 0);
    }
    EXPECT_EQ(theorem2_rhs(0, 7, table), expected);
    EXPECT_EQ(expected, hermite_variance(7));
}

TEST(Theorem2Test, HandExpandedKOneNTwo) {
    // a_0(2) = -v, a_2(2) = 1: the k=1 sum gives -v x + (x^3 - 2 v x).
    const CoeffTable table = CoeffTable::build_recurrence(2);
    const BiPoly rhs = theorem2_rhs(1, 2, table);
    EXPECT_EQ(rhs, BiPoly::term(Rational(1), 3, 0) + BiPoly::term(Rational(-3), 1, 1));
}

TEST(OperatorFormTest, PointExamples) {
    EXPECT_TRUE(verify_operator_form(0, 5).passed());
    EXPECT_TRUE(verify_operator_form(2, 3).passed());
    EXPECT_TRUE(verify_operator_form(1, 1).passed());
}

TEST(OperatorFormTest, AgreesWithTheorem2Rhs) {
    for (unsigned k = 0; k <= 6; ++k) {
        for (unsigned n = 0; n <= 6; ++n) {
            const CoeffTable table = CoeffTable::build_recurrence(n);
            BiPoly shifted = hermite_variance(k);
            for (unsigned d = 0; d < n; ++d) {
                shifted = apply_appell_operator(shifted);
            }
            ASSERT_EQ(shifted, theorem2_rhs(k, n, table)) << "k=" << k << " N=" << n;
            ASSERT_EQ(shifted, hermite_variance(k + n)) << "k=" << k << " N=" << n;
        }
    }
}

TEST(MonomialExpansionTest, PointExamples) {
    EXPECT_TRUE(verify_monomial_expansion(0).passed());
    EXPECT_TRUE(verify_monomial_expansion(1).passed());
    EXPECT_TRUE(verify_monomial_expansion(10).passed());
}

TEST(MonomialExpansionTest, HandExpandedMOne) {
    // 3 v H_1 + H_3 = x^3 and v H_0 + H_2 = x^2.
    EXPECT_EQ(BiPoly::term(Rational(3), 0, 1) * hermite_variance(1) + hermite_variance(3),
              BiPoly::term(Rational(1), 3, 0));
    EXPECT_EQ(BiPoly::nu() * hermite_variance(0) + hermite_variance(2),
              BiPoly::term(Rational(1), 2, 0));
}

TEST(ConversionVerifierTest, PointExamples) {
    EXPECT_TRUE(verify_conversion(0).passed());
    EXPECT_TRUE(verify_conversion(2).passed());
    EXPECT_TRUE(verify_conversion(6).passed());
}

TEST(OdeVerifierTest, PointExamples) {
    EXPECT_TRUE(verify_ode(0).passed());
    EXPECT_TRUE(verify_ode(2).passed());
    EXPECT_TRUE(verify_ode(3).passed());
}

TEST(SuiteTest, DefaultsPass) {
    EXPECT_TRUE(suite_theorem1(6, 12).passed());
    EXPECT_TRUE(suite_theorem2(4, 4).passed());
    EXPECT_TRUE(suite_theorem3(12).passed());
    EXPECT_TRUE(suite_operator_form(4, 4).passed());
    EXPECT_TRUE(suite_monomial(6).passed());
    EXPECT_TRUE(suite_conversion(12).passed());
    EXPECT_TRUE(suite_ode(12).passed());
}

TEST(SuiteTest, GridDescriptions) {
    EXPECT_EQ(suite_theorem1(6, 12).grid, "N=0..6, T=12");
    EXPECT_EQ(suite_theorem2(3, 5).grid, "k=0..3, N=0..5");
    EXPECT_EQ(suite_monomial(4).grid, "m=0..4");
}

TEST(ReportTest, PassedIffNoFailures) {
    VerificationReport report{"demo", "n=0..0", {}};
    EXPECT_TRUE(report.passed());
    report.failures.push_back({{{"n", 0}}, "1", "0"});
    EXPECT_FALSE(report.passed());
}

TEST(ReportTest, JsonShapeAndFailureCap) {
    VerificationReport report{"demo", "n=0..6", {}};
    for (long long n = 0; n < 7; ++n) {
        report.failures.push_back({{{"n", n}, {"route", 1}}, "lhs" + std::to_string(n), "rhs"});
    }
    const auto capped = nlohmann::json::parse(report.to_json());
    EXPECT_EQ(capped.at("identity"), "demo");
    EXPECT_EQ(capped.at("grid"), "n=0..6");
    EXPECT_FALSE(capped.at("passed").get<bool>());
    EXPECT_EQ(capped.at("failures").size(), 5u);
    EXPECT_EQ(capped.at("failures_total"), 7);
    EXPECT_EQ(capped.at("failures")[0].at("params").at("n"), 0);
    EXPECT_EQ(capped.at("failures")[0].at("lhs"), "lhs0");

    const auto full = nlohmann::json::parse(report.to_json(SIZE_MAX));
    EXPECT_EQ(full.at("failures").size(), 7u);

    const auto passing = nlohmann::json::parse(VerificationReport{"ok", "-", {}}.to_json());
    EXPECT_TRUE(passing.at("passed").get<bool>());
    EXPECT_EQ(passing.at("failures").size(), 0u);
}

}  // namespace
}  // namespace appell
