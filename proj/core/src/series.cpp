#include "appell/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace appell {

TruncSeries::TruncSeries(unsigned order, std::vector<BiPoly> low_coeffs) : coeffs_(std::move(low_coeffs)) {
    if (coeffs_.size() > static_cast<size_t>(order) + 1) {
        throw std::invalid_argument("TruncSeries: more coefficients than the order admits");
    }
    coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::generating_argument(unsigned order) {
    TruncSeries s(order);
    if (order >= 1) {
        s.coeffs_[1] = BiPoly::x();
    }
    if (order >= 2) {
        s.coeffs_[2] = BiPoly::term(Rational(-1, 2), 0, 1);
    }
    return s;
}

const BiPoly& TruncSeries::coefficient(unsigned k) const {
    if (k >= coeffs_.size()) {
        throw std::out_of_range("TruncSeries: coefficient index exceeds the order");
    }
    return coeffs_[k];
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    const unsigned order = std::min(a.order(), b.order());
    TruncSeries r(order);
    for (unsigned k = 0; k <= order; ++k) {
        r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    }
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const unsigned order = std::min(a.order(), b.order());
    TruncSeries r(order);
    for (unsigned i = 0; i <= order; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (unsigned j = 0; i + j <= order; ++j) {
            if (!b.coeffs_[j].is_zero()) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return r;
}

TruncSeries scale(const BiPoly& p, const TruncSeries& s) {
    TruncSeries r(s.order());
    for (unsigned k = 0; k <= s.order(); ++k) {
        r.coeffs_[k] = p * s.coeffs_[k];
    }
    return r;
}

TruncSeries scale(const Rational& c, const TruncSeries& s) {
    TruncSeries r(s.order());
    for (unsigned k = 0; k <= s.order(); ++k) {
        r.coeffs_[k] = s.coeffs_[k] * c;
    }
    return r;
}

TruncSeries diff_t(const TruncSeries& s) {
    if (s.order() == 0) {
        throw std::invalid_argument("diff_t: derivative of an order-0 series has no significant coefficients");
    }
    TruncSeries r(s.order() - 1);
    for (unsigned k = 0; k + 1 <= s.order(); ++k) {
        r.coeffs_[k] = s.coeffs_[k + 1] * Rational(static_cast<long>(k) + 1);
    }
    return r;
}

TruncSeries exp(const TruncSeries& s) {
    if (!s.coefficient(0).is_zero()) {
        throw std::invalid_argument("exp: series must have zero constant term");
    }
    const unsigned order = s.order();
    TruncSeries result(order, {BiPoly(1)});
    TruncSeries power(result);
    for (unsigned k = 1; k <= order; ++k) {
        power = scale(Rational(1, static_cast<long>(k)), power * s);
        result = result + power;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
    os << '[';
    for (unsigned k = 0; k <= s.order(); ++k) {
        if (k > 0) {
            os << ", ";
        }
        os << s.coefficient(k);
    }
    return os << ']';
}

}  // namespace appell
