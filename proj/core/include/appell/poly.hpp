#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "appell/rational.hpp"

namespace appell {

/// Exponent pair of one term c * x^deg_x * v^deg_nu.
struct Monomial {
    unsigned deg_x = 0;
    unsigned deg_nu = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order, which is also the rendering order:
/// descending in deg_x, ties broken ascending in deg_nu.
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.deg_x != b.deg_x) {
            return a.deg_x > b.deg_x;
        }
        return a.deg_nu < b.deg_nu;
    }
};

class BiPoly;

/// Sparse exact polynomial in v alone. Never stores a zero coefficient,
/// so value equality is map equality.
class NuPoly {
public:
    using CoeffMap = std::map<unsigned, Rational>;

    NuPoly() = default;
    NuPoly(long constant) : NuPoly(Rational(constant)) {}
    NuPoly(const Rational& constant);
    static NuPoly term(const Rational& coeff, unsigned deg_nu);

    bool is_zero() const { return coeffs_.empty(); }
    /// Empty for the zero polynomial.
    std::optional<unsigned> degree() const;
    Rational coefficient(unsigned deg_nu) const;
    const CoeffMap& coeffs() const { return coeffs_; }

    NuPoly& operator+=(const NuPoly& rhs);
    NuPoly& operator-=(const NuPoly& rhs);
    NuPoly& operator*=(const Rational& scalar);
    friend NuPoly operator+(NuPoly lhs, const NuPoly& rhs) { return lhs += rhs; }
    friend NuPoly operator-(NuPoly lhs, const NuPoly& rhs) { return lhs -= rhs; }
    friend NuPoly operator*(NuPoly lhs, const Rational& scalar) { return lhs *= scalar; }
    friend NuPoly operator*(const Rational& scalar, NuPoly rhs) { return rhs *= scalar; }
    NuPoly operator-() const;

    /// Multiplies by v^power.
    NuPoly times_nu(unsigned power = 1) const;

    BiPoly to_bipoly() const;

    friend bool operator==(const NuPoly&, const NuPoly&) = default;

    std::string str() const;

private:
    void add_term(unsigned deg_nu, const Rational& coeff);

    CoeffMap coeffs_;
};

/// Sparse exact polynomial in the two commuting indeterminates x and v.
/// Never stores a zero coefficient, so value equality is map equality.
///
/// Text rendering: terms in canonical order, each as
/// coeff ["*v^" k] ["*x^" k] with exponent 1 shortened to "v"/"x",
/// exponent 0 omitted, and a coefficient of magnitude 1 omitted unless the
/// term is constant. The zero polynomial renders as "0".
/// Example: "x^3 - 3*v*x".
class BiPoly {
public:
    using TermMap = std::map<Monomial, Rational, TermOrder>;

    BiPoly() = default;
    BiPoly(long constant) : BiPoly(Rational(constant)) {}
    BiPoly(const Rational& constant);
    static BiPoly x() { return term(Rational(1), 1, 0); }
    static BiPoly nu() { return term(Rational(1), 0, 1); }
    static BiPoly term(const Rational& coeff, unsigned deg_x, unsigned deg_nu);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Empty for the zero polynomial.
    std::optional<unsigned> degree_x() const;
    std::optional<unsigned> degree_nu() const;
    Rational coefficient(unsigned deg_x, unsigned deg_nu) const;
    const TermMap& terms() const { return terms_; }

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const BiPoly& rhs);
    BiPoly& operator*=(const Rational& scalar);
    friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
    friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
    friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
    friend BiPoly operator*(BiPoly lhs, const Rational& scalar) { return lhs *= scalar; }
    friend BiPoly operator*(const Rational& scalar, BiPoly rhs) { return rhs *= scalar; }
    BiPoly operator-() const;

    BiPoly pow(unsigned exponent) const;

    Rational eval(const Rational& x_value, const Rational& nu_value) const;
    /// Substitutes v := nu_value, leaving a polynomial in x.
    BiPoly substitute_nu(const Rational& nu_value) const;
    /// Substitutes x := factor * x.
    BiPoly scale_x(const Rational& factor) const;

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    std::string str() const;

private:
    void add_term(const Monomial& mono, const Rational& coeff);

    TermMap terms_;
};

/// Formal partial derivative with respect to x; v is a constant.
BiPoly diff_x(const BiPoly& p);

std::ostream& operator<<(std::ostream& os, const BiPoly& p);
std::ostream& operator<<(std::ostream& os, const NuPoly& p);

}  // namespace appell
