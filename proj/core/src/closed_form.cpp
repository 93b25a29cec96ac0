#include "twobridge/closed_form.hpp"

namespace twobridge {

LaurentPoly1 minkus_poly_raw(const TwoBridgeParam& param) {
    LaurentPoly1 p;
    Int partial = 0;
    for (Int k = 0; k <= param.q() - 1; ++k) {
        partial += epsilon(param, k);
        p.add_term({partial}, k % 2 == 0 ? 1 : -1);
    }
    return p;
}

LaurentPoly1 minkus_poly(const TwoBridgeParam& param) {
    return normalize(minkus_poly_raw(param)).normal;
}

LaurentPoly2 two_variable_poly(const TwoBridgeParam& param) {
    if (!param.is_link()) {
        throw KindError("two-variable polynomial requires a link (q even), got q=" +
                        std::to_string(param.q()));
    }
    LaurentPoly2 p;
    Int even_sum = 0; // sum of eps_{2j}, j < i
    Int odd_sum = 0;  // sum of eps_{2k-1}, k < i
    for (Int i = 1; i <= param.q() / 2; ++i) {
        Int eps_odd = epsilon(param, 2 * i - 1);
        p.add_term({even_sum, (eps_odd - 1) / 2 + odd_sum}, eps_odd);
        odd_sum += eps_odd;
        if (2 * i <= param.q() - 1) even_sum += epsilon(param, 2 * i);
    }
    return normalize(p).normal;
}

Int linking_degree(const TwoBridgeParam& param) {
    if (!param.is_link()) {
        throw KindError("linking degree requires a link (q even), got q=" +
                        std::to_string(param.q()));
    }
    Int sum = 0;
    for (Int i = 1; i <= param.q() / 2; ++i) sum += epsilon(param, 2 * i - 1);
    return sum;
}

} // namespace twobridge
