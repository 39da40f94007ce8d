#include "appell/rational.hpp"

#include <stdexcept>

namespace appell {

namespace {

mpq_class make_canonical(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) : value_(make_canonical(num, den)) {}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        Integer n;
        if (mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0) {
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        }
        return Rational(n);
    }
    Integer num, den;
    if (mpz_set_str(num.get_mpz_t(), text.substr(0, slash).c_str(), 10) != 0 ||
        mpz_set_str(den.get_mpz_t(), text.substr(slash + 1).c_str(), 10) != 0) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
    if (sgn(den) == 0) {
        throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    }
    return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent == 0) {
        return Rational(1);
    }
    const bool invert = exponent < 0;
    if (invert && base.is_zero()) {
        throw std::domain_error("pow: zero base with negative exponent");
    }
    const auto e = static_cast<unsigned long>(invert ? -exponent : exponent);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    return invert ? Rational(den, num) : Rational(num, den);
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) {
        return Integer(0);
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer falling_factorial(unsigned long i, unsigned long m) {
    if (m > i) {
        return Integer(0);
    }
    Integer r(1);
    for (unsigned long j = 0; j < m; ++j) {
        r *= Integer(i - j);
    }
    return r;
}

}  // namespace appell
