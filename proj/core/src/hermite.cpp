#include "appell/hermite.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace appell {

BiPoly hermite(HermiteKind kind, unsigned n) {
    switch (kind) {
        case HermiteKind::Physicists:
            return hermite_physicists(n);
        case HermiteKind::Probabilists:
            return hermite_probabilists(n);
        case HermiteKind::Variance:
            break;
    }
    return hermite_variance(n);
}

BiPoly apply_appell_operator(const BiPoly& p) {
    return BiPoly::x() * p - BiPoly::nu() * diff_x(p);
}

BiPoly hermite_variance(unsigned n) {
    static std::mutex mutex;
    static std::vector<BiPoly> cache{BiPoly(1)};

    std::lock_guard<std::mutex> lock(mutex);
    while (cache.size() <= n) {
        cache.push_back(apply_appell_operator(cache.back()));
    }
    return cache[n];
}

namespace {

BiPoly iterate_operator(unsigned n, const Rational& x_factor) {
    BiPoly p(1);
    const BiPoly scaled_x = BiPoly::x() * x_factor;
    for (unsigned i = 0; i < n; ++i) {
        p = scaled_x * p - diff_x(p);
    }
    return p;
}

}  // namespace

BiPoly hermite_physicists(unsigned n) {
    return iterate_operator(n, Rational(2));
}

BiPoly hermite_probabilists(unsigned n) {
    return iterate_operator(n, Rational(1));
}

BiPoly sqrt2_parity_rescale(const BiPoly& p, unsigned n, int sign) {
    BiPoly r;
    for (const auto& [mono, c] : p.terms()) {
        if ((mono.deg_x + n) % 2 != 0) {
            throw std::logic_error("sqrt2_parity_rescale: x-exponent parity differs from n");
        }
        const long half = static_cast<long>((mono.deg_x + n) / 2);
        r += BiPoly::term(c * pow(Rational(2), sign >= 0 ? half : -half), mono.deg_x, mono.deg_nu);
    }
    return r;
}

BiPoly convert_probabilists_to_physicists(unsigned n) {
    return sqrt2_parity_rescale(hermite_probabilists(n), n, +1);
}

BiPoly convert_physicists_to_probabilists(unsigned n) {
    return sqrt2_parity_rescale(hermite_physicists(n), n, -1);
}

BiPoly identify_physicists_as_variance(unsigned n) {
    return hermite_variance(n).substitute_nu(Rational(2)).scale_x(Rational(2));
}

}  // namespace appell
