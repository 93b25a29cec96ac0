#ifndef TWOBRIDGE_PARAM_HPP
#define TWOBRIDGE_PARAM_HPP

#include <cstdint>
#include <vector>

#include "twobridge/errors.hpp"

namespace twobridge {

using Int = std::int64_t;

enum class LinkKind { Knot, Link };

/// Validated fraction p/q identifying the 2-bridge knot or link K_{p/q}.
/// Invariants: 0 < p < q, gcd(p,q) = 1, p odd. Knot iff q odd.
class TwoBridgeParam {
public:
    Int p() const { return p_; }
    Int q() const { return q_; }
    LinkKind kind() const { return q_ % 2 == 0 ? LinkKind::Link : LinkKind::Knot; }
    bool is_link() const { return kind() == LinkKind::Link; }

    friend TwoBridgeParam new_param(Int p, Int q);

private:
    TwoBridgeParam(Int p, Int q) : p_(p), q_(q) {}
    Int p_;
    Int q_;
};

// Dense walk arrays scale with q; keep them cheap.
inline constexpr Int kMaxQ = 1'000'000;

TwoBridgeParam new_param(Int p, Int q);

// For even p with q odd, substitute the mirror image q-p (odd since q is odd).
// The Alexander polynomial is unchanged by mirroring.
TwoBridgeParam mirror_normalize(Int p, Int q);

enum class SignOrigin { Epsilon, EpsilonWithZero, Shifted };

struct SignSequence {
    std::vector<int> signs; // entries are +1 or -1
    SignOrigin origin;
};

/// epsilon_i = (-1)^floor(i*p/q), 0 <= i <= q-1.
int epsilon(const TwoBridgeParam& param, Int i);

/// (epsilon_1, ..., epsilon_{q-1}).
SignSequence epsilon_sequence(const TwoBridgeParam& param);

/// (epsilon_0, ..., epsilon_{q-1}) with epsilon_0 = +1; length q.
SignSequence epsilon_sequence_with_zero(const TwoBridgeParam& param);

/// Signs of the multiples of p shifted down by p/2, against the multiples
/// of q: s_i = (-1)^floor((2ip - p)/(2q)) for i = 1..q. Computed with the
/// doubled numerator so no floating point is involved.
SignSequence shifted_sign_sequence(const TwoBridgeParam& param);

} // namespace twobridge

#endif
