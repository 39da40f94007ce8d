#pragma once

#include "appell/poly.hpp"

namespace appell {

enum class HermiteKind { Physicists, Probabilists, Variance };

/// Dispatch over the three families. Only the Variance result depends on v;
/// the identifications Physicists = Variance(v:=2, x:=2x) and
/// Probabilists = Variance(v:=1) tie the tags together.
BiPoly hermite(HermiteKind kind, unsigned n);

/// One Appell shift: p |-> x p - v dp/dx.
BiPoly apply_appell_operator(const BiPoly& p);

/// H_n of variance v: the n-fold Appell shift of the constant 1.
/// Construction is incremental and memoized; safe to call concurrently.
BiPoly hermite_variance(unsigned n);

/// Physicists' H_n: n-fold application of p |-> 2x p - dp/dx to 1.
/// No v dependence.
BiPoly hermite_physicists(unsigned n);

/// Probabilists' H*_n: n-fold application of p |-> x p - dp/dx to 1.
/// Equals hermite_variance(n) with v := 1.
BiPoly hermite_probabilists(unsigned n);

/// Monomial rescaling c x^j |-> c 2^{sign*(n+j)/2} x^j with sign = +1 or -1.
/// Every x-exponent of p must have the parity of n, so the halved exponent
/// is an integer; a violation throws std::logic_error.
BiPoly sqrt2_parity_rescale(const BiPoly& p, unsigned n, int sign);

/// H*_n mapped term-by-term onto physicists' H_n (each c x^j scaled by
/// 2^{(n+j)/2}).
BiPoly convert_probabilists_to_physicists(unsigned n);

/// Physicists' H_n mapped back onto H*_n (each c x^j scaled by 2^{-(n+j)/2}).
BiPoly convert_physicists_to_probabilists(unsigned n);

/// Physicists' H_n realized inside the variance family: hermite_variance(n)
/// with v := 2 and x := 2x.
BiPoly identify_physicists_as_variance(unsigned n);

}  // namespace appell
