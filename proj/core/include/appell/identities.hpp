#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "appell/coeffs.hpp"

namespace appell {

struct VerificationFailure {
    /// Named parameters of the failing grid point, in a fixed order.
    std::vector<std::pair<std::string, long long>> params;
    std::string lhs;
    std::string rhs;
};

/// Outcome of one verifier run. A report passes exactly when it has no
/// failures; failures appear in grid order (sorted by parameter tuple).
struct VerificationReport {
    std::string identity;
    std::string grid;
    std::vector<VerificationFailure> failures;

    bool passed() const { return failures.empty(); }

    /// {"identity", "grid", "passed", "failures", "failures_total"}.
    /// At most max_failures failure entries are serialized;
    /// "failures_total" always carries the real count.
    std::string to_json(std::size_t max_failures = 5) const;
};

/// N-fold t-derivative of the order-T exponential oracle versus
/// (sum_i a_i(N, v) (x - v t)^i) times the oracle, compared coefficient by
/// coefficient up to order T - N. Rejects T < N + 2.
VerificationReport verify_theorem1(unsigned n, unsigned truncation);

/// H_{k+N} versus its expansion
/// sum_i a_i(N, v) sum_{l >= max(0, k-i)}^{k} C(k,l) (i)_{k-l} (-v)^{k-l} x^{i+l-k} H_l.
VerificationReport verify_theorem2(unsigned k, unsigned n);

/// N-fold Appell shift of H_k versus H_{k+N} directly and versus the
/// expansion sum checked by verify_theorem2.
VerificationReport verify_operator_form(unsigned k, unsigned n);

/// x^{2m+1} and x^{2m} versus their expansions in the variance-nu basis.
VerificationReport verify_monomial_expansion(unsigned m);

/// Probabilists' <-> physicists' rescaling in both directions, plus the
/// identification of physicists' H_n inside the variance family.
VerificationReport verify_conversion(unsigned n);

/// v u'' - x u' + n u = 0 for u = hermite_variance(n), and
/// u'' - x u' + n u = 0 for u = hermite_probabilists(n).
VerificationReport verify_ode(unsigned n);

// Grid suites; each runs the point verifier over the full range and merges
// the outcomes into a single report.
VerificationReport suite_theorem1(unsigned max_n, unsigned truncation);
VerificationReport suite_theorem2(unsigned max_k, unsigned max_n);
/// Recurrence route versus closed-form route over every triangle entry.
VerificationReport suite_theorem3(unsigned max_n);
VerificationReport suite_operator_form(unsigned max_k, unsigned max_n);
VerificationReport suite_monomial(unsigned max_m);
VerificationReport suite_conversion(unsigned max_n);
VerificationReport suite_ode(unsigned max_n);

/// The expansion sum on the right-hand side of verify_theorem2; the table
/// must cover row n. Exposed for cross-checks.
BiPoly theorem2_rhs(unsigned k, unsigned n, const CoeffTable& table);

}  // namespace appell
