#include "appell/identities.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

#include "appell/hermite.hpp"
#include "appell/series.hpp"

namespace appell {

namespace {

using Params = std::vector<std::pair<std::string, long long>>;

void check_equal(VerificationReport& report, Params params, const BiPoly& lhs, const BiPoly& rhs) {
    if (lhs != rhs) {
        report.failures.push_back({std::move(params), lhs.str(), rhs.str()});
    }
}

void merge(VerificationReport& suite, VerificationReport point) {
    for (auto& failure : point.failures) {
        suite.failures.push_back(std::move(failure));
    }
}

std::string range(const char* name, unsigned max) {
    return std::string(name) + "=0.." + std::to_string(max);
}

}  // namespace

std::string VerificationReport::to_json(std::size_t max_failures) const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["grid"] = grid;
    j["passed"] = passed();
    auto listed = nlohmann::ordered_json::array();
    const std::size_t shown = std::min(max_failures, failures.size());
    for (std::size_t f = 0; f < shown; ++f) {
        nlohmann::ordered_json params;
        for (const auto& [key, value] : failures[f].params) {
            params[key] = value;
        }
        listed.push_back({{"params", std::move(params)},
                          {"lhs", failures[f].lhs},
                          {"rhs", failures[f].rhs}});
    }
    j["failures"] = std::move(listed);
    j["failures_total"] = failures.size();
    return j.dump();
}

VerificationReport verify_theorem1(unsigned n, unsigned truncation) {
    if (truncation < n + 2) {
        throw std::invalid_argument("verify_theorem1: truncation must be at least N + 2");
    }
    VerificationReport report{"thm1", "N=" + std::to_string(n) + ", T=" + std::to_string(truncation), {}};

    const TruncSeries oracle = exp(TruncSeries::generating_argument(truncation));
    TruncSeries lhs(oracle);
    for (unsigned d = 0; d < n; ++d) {
        lhs = diff_t(lhs);
    }

    const unsigned result_order = truncation - n;
    const CoeffTable table = CoeffTable::build_recurrence(n);
    const TruncSeries shift(result_order, {BiPoly::x(), -BiPoly::nu()});
    TruncSeries power(result_order, {BiPoly(1)});
    TruncSeries poly_part = scale(table.at(n, 0).to_bipoly(), power);
    for (unsigned i = 1; i <= n; ++i) {
        power = power * shift;
        poly_part = poly_part + scale(table.at(n, i).to_bipoly(), power);
    }
    const TruncSeries rhs = poly_part * oracle;

    for (unsigned k = 0; k <= result_order; ++k) {
        check_equal(report,
                    {{"N", n}, {"T", truncation}, {"order", k}},
                    lhs.coefficient(k), rhs.coefficient(k));
    }
    return report;
}

BiPoly theorem2_rhs(unsigned k, unsigned n, const CoeffTable& table) {
    BiPoly rhs;
    for (unsigned i = 0; i <= n; ++i) {
        const NuPoly& a = table.at(n, i);
        if (a.is_zero()) {
            continue;
        }
        BiPoly inner;
        const unsigned l_min = k > i ? k - i : 0;
        for (unsigned l = l_min; l <= k; ++l) {
            const Integer count = binomial(k, l) * falling_factorial(i, k - l);
            if (sgn(count) == 0) {
                continue;
            }
            const long x_exp = static_cast<long>(i) + l - k;
            if (x_exp < 0) {
                throw std::logic_error("theorem2_rhs: negative x-exponent");
            }
            const Rational coeff = (k - l) % 2 == 1 ? Rational(-count) : Rational(count);
            inner += BiPoly::term(coeff, static_cast<unsigned>(x_exp), k - l) * hermite_variance(l);
        }
        rhs += a.to_bipoly() * inner;
    }
    return rhs;
}

VerificationReport verify_theorem2(unsigned k, unsigned n) {
    VerificationReport report{"thm2", "k=" + std::to_string(k) + ", N=" + std::to_string(n), {}};
    const CoeffTable table = CoeffTable::build_recurrence(n);
    check_equal(report, {{"k", k}, {"N", n}},
                hermite_variance(k + n), theorem2_rhs(k, n, table));
    return report;
}

VerificationReport verify_operator_form(unsigned k, unsigned n) {
    VerificationReport report{"operator", "k=" + std::to_string(k) + ", N=" + std::to_string(n), {}};
    BiPoly shifted = hermite_variance(k);
    for (unsigned d = 0; d < n; ++d) {
        shifted = apply_appell_operator(shifted);
    }
    check_equal(report, {{"k", k}, {"N", n}, {"route", 1}}, shifted, hermite_variance(k + n));
    const CoeffTable table = CoeffTable::build_recurrence(n);
    check_equal(report, {{"k", k}, {"N", n}, {"route", 2}}, shifted, theorem2_rhs(k, n, table));
    return report;
}

VerificationReport verify_monomial_expansion(unsigned m) {
    VerificationReport report{"monomial", "m=" + std::to_string(m), {}};
    for (int odd = 1; odd >= 0; --odd) {
        BiPoly expansion;
        for (unsigned l = 0; l <= m; ++l) {
            const Integer count = binomial(2 * m + odd, 2 * l + odd) *
                                  falling_factorial(2 * (m - l), m - l);
            const Rational coeff = Rational(count) * pow(Rational(1, 2), static_cast<long>(m - l));
            expansion += BiPoly::term(coeff, 0, m - l) * hermite_variance(2 * l + odd);
        }
        check_equal(report, {{"m", m}, {"odd", odd}},
                    BiPoly::term(Rational(1), 2 * m + odd, 0), expansion);
    }
    return report;
}

VerificationReport verify_conversion(unsigned n) {
    VerificationReport report{"conversion", "n=" + std::to_string(n), {}};
    check_equal(report, {{"n", n}, {"route", 1}},
                convert_probabilists_to_physicists(n), hermite_physicists(n));
    check_equal(report, {{"n", n}, {"route", 2}},
                convert_physicists_to_probabilists(n), hermite_probabilists(n));
    check_equal(report, {{"n", n}, {"route", 3}},
                identify_physicists_as_variance(n), hermite_physicists(n));
    return report;
}

VerificationReport verify_ode(unsigned n) {
    VerificationReport report{"ode", "n=" + std::to_string(n), {}};
    const Rational order(static_cast<long>(n));

    const BiPoly u = hermite_variance(n);
    const BiPoly variance_residual =
        BiPoly::nu() * diff_x(diff_x(u)) - BiPoly::x() * diff_x(u) + u * order;
    check_equal(report, {{"n", n}, {"family", 0}}, variance_residual, BiPoly());

    const BiPoly w = hermite_probabilists(n);
    const BiPoly probabilists_residual = diff_x(diff_x(w)) - BiPoly::x() * diff_x(w) + w * order;
    check_equal(report, {{"n", n}, {"family", 1}}, probabilists_residual, BiPoly());
    return report;
}

VerificationReport suite_theorem1(unsigned max_n, unsigned truncation) {
    VerificationReport suite{"thm1", range("N", max_n) + ", T=" + std::to_string(truncation), {}};
    for (unsigned n = 0; n <= max_n; ++n) {
        merge(suite, verify_theorem1(n, truncation));
    }
    return suite;
}

VerificationReport suite_theorem2(unsigned max_k, unsigned max_n) {
    VerificationReport suite{"thm2", range("k", max_k) + ", " + range("N", max_n), {}};
    for (unsigned k = 0; k <= max_k; ++k) {
        for (unsigned n = 0; n <= max_n; ++n) {
            merge(suite, verify_theorem2(k, n));
        }
    }
    return suite;
}

VerificationReport suite_theorem3(unsigned max_n) {
    VerificationReport suite{"thm3", range("N", max_n), {}};
    const CoeffTable table = CoeffTable::build_recurrence(max_n);
    for (unsigned n = 0; n <= max_n; ++n) {
        for (unsigned i = 0; i <= n; ++i) {
            const unsigned gap = n - i;
            const NuPoly closed = gap % 2 == 1 ? odd_gap_zero(n, (gap + 1) / 2)
                                               : closed_form_coefficient(n, gap / 2);
            if (table.at(n, i) != closed) {
                suite.failures.push_back({{{"N", n}, {"i", i}},
                                          table.at(n, i).str(), closed.str()});
            }
        }
    }
    return suite;
}

VerificationReport suite_operator_form(unsigned max_k, unsigned max_n) {
    VerificationReport suite{"operator", range("k", max_k) + ", " + range("N", max_n), {}};
    for (unsigned k = 0; k <= max_k; ++k) {
        for (unsigned n = 0; n <= max_n; ++n) {
            merge(suite, verify_operator_form(k, n));
        }
    }
    return suite;
}

VerificationReport suite_monomial(unsigned max_m) {
    VerificationReport suite{"monomial", range("m", max_m), {}};
    for (unsigned m = 0; m <= max_m; ++m) {
        merge(suite, verify_monomial_expansion(m));
    }
    return suite;
}

VerificationReport suite_conversion(unsigned max_n) {
    VerificationReport suite{"conversion", range("n", max_n), {}};
    for (unsigned n = 0; n <= max_n; ++n) {
        merge(suite, verify_conversion(n));
    }
    return suite;
}

VerificationReport suite_ode(unsigned max_n) {
    VerificationReport suite{"ode", range("n", max_n), {}};
    for (unsigned n = 0; n <= max_n; ++n) {
        merge(suite, verify_ode(n));
    }
    return suite;
}

}  // namespace appell
