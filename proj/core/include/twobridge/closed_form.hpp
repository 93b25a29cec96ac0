#ifndef TWOBRIDGE_CLOSED_FORM_HPP
#define TWOBRIDGE_CLOSED_FORM_HPP

#include "twobridge/laurent.hpp"
#include "twobridge/param.hpp"

namespace twobridge {

/// Minkus' formula: sum over k = 0..q-1 of (-1)^k t^{eps_0 + ... + eps_k},
/// in canonical normal form. For a link (q even) this is the reduced
/// polynomial.
LaurentPoly1 minkus_poly(const TwoBridgeParam& param);

/// The raw alternating sum of the formula above, before unit normalization.
/// For links it vanishes at t = 1.
LaurentPoly1 minkus_poly_raw(const TwoBridgeParam& param);

/// Two-variable polynomial of a 2-bridge link:
/// sum over i = 1..q/2 of eps_{2i-1} x^{sum eps_{2j}, j<i}
/// y^{(eps_{2i-1}-1)/2 + sum eps_{2k-1}, k<i}, exponents accumulated by
/// running partial sums. Canonical normal form. Requires q even.
LaurentPoly2 two_variable_poly(const TwoBridgeParam& param);

/// Alternating count sum of eps_{2i-1} for i = 1..q/2 (the value of the
/// raw two-variable sum at x = y = 1). Requires q even.
Int linking_degree(const TwoBridgeParam& param);

} // namespace twobridge

#endif
