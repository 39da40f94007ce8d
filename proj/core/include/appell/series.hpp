#pragma once

#include <ostream>
#include <vector>

#include "appell/poly.hpp"

namespace appell {

/// Power series in t truncated at a fixed order, with BiPoly coefficients.
///
/// A series of order T holds exactly the T+1 coefficients of t^0 .. t^T.
/// Arithmetic between two series is exact up to the smaller of the two
/// orders, which becomes the order of the result; differentiation lowers
/// the order by one.
class TruncSeries {
public:
    /// Zero series of the given order.
    explicit TruncSeries(unsigned order) : coeffs_(order + 1) {}

    /// Series whose low coefficients are as given, zero-padded up to order.
    /// Rejects more than order+1 coefficients.
    TruncSeries(unsigned order, std::vector<BiPoly> low_coeffs);

    /// The exponent polynomial of the variance-nu generating function,
    /// x t - (v/2) t^2, truncated at the given order.
    static TruncSeries generating_argument(unsigned order);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

    /// Coefficient of t^k; rejects k > order.
    const BiPoly& coefficient(unsigned k) const;

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::vector<BiPoly> coeffs_;

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries scale(const BiPoly& p, const TruncSeries& s);
    friend TruncSeries scale(const Rational& c, const TruncSeries& s);
    friend TruncSeries diff_t(const TruncSeries& s);
    friend TruncSeries exp(const TruncSeries& s);
};

/// Pointwise sum, truncated to the smaller order.
TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);

/// Cauchy product, truncated to the smaller order.
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

TruncSeries scale(const BiPoly& p, const TruncSeries& s);
TruncSeries scale(const Rational& c, const TruncSeries& s);

/// Formal derivative d/dt; order drops by one. Rejects order-0 input.
TruncSeries diff_t(const TruncSeries& s);

/// exp(s) = sum of s^k/k! up to the order of s. Rejects a series whose
/// constant term is nonzero.
TruncSeries exp(const TruncSeries& s);

std::ostream& operator<<(std::ostream& os, const TruncSeries& s);

}  // namespace appell
