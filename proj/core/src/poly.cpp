#include "appell/poly.hpp"

#include <algorithm>

namespace appell {

namespace {

void append_term_text(std::string& out, const Rational& coeff, unsigned deg_x, unsigned deg_nu) {
    const bool negative = coeff.sign() < 0;
    if (out.empty()) {
        if (negative) {
            out += '-';
        }
    } else {
        out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(coeff);
    std::string body;
    if (!magnitude.is_one() || (deg_x == 0 && deg_nu == 0)) {
        body = magnitude.str();
    }
    if (deg_nu > 0) {
        if (!body.empty()) {
            body += '*';
        }
        body += deg_nu == 1 ? "v" : "v^" + std::to_string(deg_nu);
    }
    if (deg_x > 0) {
        if (!body.empty()) {
            body += '*';
        }
        body += deg_x == 1 ? "x" : "x^" + std::to_string(deg_x);
    }
    out += body;
}

}  // namespace

// ---------------------------------------------------------------- NuPoly

NuPoly::NuPoly(const Rational& constant) {
    add_term(0, constant);
}

NuPoly NuPoly::term(const Rational& coeff, unsigned deg_nu) {
    NuPoly p;
    p.add_term(deg_nu, coeff);
    return p;
}

std::optional<unsigned> NuPoly::degree() const {
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return coeffs_.rbegin()->first;
}

Rational NuPoly::coefficient(unsigned deg_nu) const {
    const auto it = coeffs_.find(deg_nu);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void NuPoly::add_term(unsigned deg_nu, const Rational& coeff) {
    if (coeff.is_zero()) {
        return;
    }
    const auto [it, inserted] = coeffs_.try_emplace(deg_nu, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            coeffs_.erase(it);
        }
    }
}

NuPoly& NuPoly::operator+=(const NuPoly& rhs) {
    for (const auto& [deg, c] : rhs.coeffs_) {
        add_term(deg, c);
    }
    return *this;
}

NuPoly& NuPoly::operator-=(const NuPoly& rhs) {
    for (const auto& [deg, c] : rhs.coeffs_) {
        add_term(deg, -c);
    }
    return *this;
}

NuPoly& NuPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [deg, c] : coeffs_) {
        c *= scalar;
    }
    return *this;
}

NuPoly NuPoly::operator-() const {
    NuPoly r(*this);
    for (auto& [deg, c] : r.coeffs_) {
        c = -c;
    }
    return r;
}

NuPoly NuPoly::times_nu(unsigned power) const {
    NuPoly r;
    for (const auto& [deg, c] : coeffs_) {
        r.coeffs_.emplace(deg + power, c);
    }
    return r;
}

BiPoly NuPoly::to_bipoly() const {
    BiPoly r;
    for (const auto& [deg, c] : coeffs_) {
        r += BiPoly::term(c, 0, deg);
    }
    return r;
}

std::string NuPoly::str() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [deg, c] : coeffs_) {
        append_term_text(out, c, 0, deg);
    }
    return out;
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(const Rational& constant) {
    add_term(Monomial{0, 0}, constant);
}

BiPoly BiPoly::term(const Rational& coeff, unsigned deg_x, unsigned deg_nu) {
    BiPoly p;
    p.add_term(Monomial{deg_x, deg_nu}, coeff);
    return p;
}

bool BiPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0} &&
           terms_.begin()->second.is_one();
}

std::optional<unsigned> BiPoly::degree_x() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    // Map order is descending in deg_x.
    return terms_.begin()->first.deg_x;
}

std::optional<unsigned> BiPoly::degree_nu() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    unsigned best = 0;
    for (const auto& [mono, c] : terms_) {
        best = std::max(best, mono.deg_nu);
    }
    return best;
}

Rational BiPoly::coefficient(unsigned deg_x, unsigned deg_nu) const {
    const auto it = terms_.find(Monomial{deg_x, deg_nu});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(const Monomial& mono, const Rational& coeff) {
    if (coeff.is_zero()) {
        return;
    }
    const auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [mono, c] : rhs.terms_) {
        add_term(mono, c);
    }
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    for (const auto& [mono, c] : rhs.terms_) {
        add_term(mono, -c);
    }
    return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
    BiPoly r;
    for (const auto& [ma, ca] : lhs.terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            r.add_term(Monomial{ma.deg_x + mb.deg_x, ma.deg_nu + mb.deg_nu}, ca * cb);
        }
    }
    return r;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly r(*this);
    for (auto& [mono, c] : r.terms_) {
        c = -c;
    }
    return r;
}

BiPoly BiPoly::pow(unsigned exponent) const {
    BiPoly r(1);
    for (unsigned i = 0; i < exponent; ++i) {
        r *= *this;
    }
    return r;
}

Rational BiPoly::eval(const Rational& x_value, const Rational& nu_value) const {
    Rational r;
    for (const auto& [mono, c] : terms_) {
        r += c * appell::pow(x_value, mono.deg_x) * appell::pow(nu_value, mono.deg_nu);
    }
    return r;
}

BiPoly BiPoly::substitute_nu(const Rational& nu_value) const {
    BiPoly r;
    for (const auto& [mono, c] : terms_) {
        r.add_term(Monomial{mono.deg_x, 0}, c * appell::pow(nu_value, mono.deg_nu));
    }
    return r;
}

BiPoly BiPoly::scale_x(const Rational& factor) const {
    BiPoly r;
    for (const auto& [mono, c] : terms_) {
        r.add_term(mono, c * appell::pow(factor, mono.deg_x));
    }
    return r;
}

std::string BiPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [mono, c] : terms_) {
        append_term_text(out, c, mono.deg_x, mono.deg_nu);
    }
    return out;
}

BiPoly diff_x(const BiPoly& p) {
    BiPoly r;
    for (const auto& [mono, c] : p.terms()) {
        if (mono.deg_x > 0) {
            r += BiPoly::term(c * Rational(static_cast<long>(mono.deg_x)), mono.deg_x - 1, mono.deg_nu);
        }
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) {
    return os << p.str();
}

std::ostream& operator<<(std::ostream& os, const NuPoly& p) {
    return os << p.str();
}

}  // namespace appell
