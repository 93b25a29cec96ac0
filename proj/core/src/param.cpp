#include "twobridge/param.hpp"

#include <numeric>
#include <string>

namespace twobridge {

TwoBridgeParam new_param(Int p, Int q) {
    if (!(0 < p && p < q)) {
        throw RangeError("require 0 < p < q, got p=" + std::to_string(p) +
                         " q=" + std::to_string(q));
    }
    if (q > kMaxQ) {
        throw RangeError("q=" + std::to_string(q) + " exceeds limit " +
                         std::to_string(kMaxQ));
    }
    if (p % 2 == 0) {
        throw ParityError("p must be odd, got p=" + std::to_string(p));
    }
    if (std::gcd(p, q) != 1) {
        throw GcdError("gcd(p,q) must be 1, got p=" + std::to_string(p) +
                       " q=" + std::to_string(q));
    }
    return TwoBridgeParam(p, q);
}

TwoBridgeParam mirror_normalize(Int p, Int q) {
    if (0 < p && p < q && p % 2 == 0 && q % 2 == 1) {
        return new_param(q - p, q);
    }
    return new_param(p, q);
}

int epsilon(const TwoBridgeParam& param, Int i) {
    if (i < 0 || i > param.q() - 1) {
        throw IndexError("epsilon index " + std::to_string(i) +
                         " out of range [0, " + std::to_string(param.q() - 1) + "]");
    }
    return (i * param.p() / param.q()) % 2 == 0 ? 1 : -1;
}

SignSequence epsilon_sequence(const TwoBridgeParam& param) {
    SignSequence seq;
    seq.origin = SignOrigin::Epsilon;
    seq.signs.reserve(static_cast<std::size_t>(param.q() - 1));
    for (Int i = 1; i <= param.q() - 1; ++i) {
        seq.signs.push_back(epsilon(param, i));
    }
    return seq;
}

SignSequence epsilon_sequence_with_zero(const TwoBridgeParam& param) {
    SignSequence seq;
    seq.origin = SignOrigin::EpsilonWithZero;
    seq.signs.reserve(static_cast<std::size_t>(param.q()));
    for (Int i = 0; i <= param.q() - 1; ++i) {
        seq.signs.push_back(epsilon(param, i));
    }
    return seq;
}

SignSequence shifted_sign_sequence(const TwoBridgeParam& param) {
    SignSequence seq;
    seq.origin = SignOrigin::Shifted;
    seq.signs.reserve(static_cast<std::size_t>(param.q()));
    for (Int i = 1; i <= param.q(); ++i) {
        Int doubled = 2 * i * param.p() - param.p(); // position (i - 1/2) p, doubled
        Int floor_val = doubled / (2 * param.q());   // doubled > 0, plain division is floor
        seq.signs.push_back(floor_val % 2 == 0 ? 1 : -1);
    }
    return seq;
}

} // namespace twobridge
