#include "twobridge/laurent.hpp"

#include <cstdlib>

namespace twobridge {

LaurentPoly1 substitute_diagonal(const LaurentPoly2& p) {
    LaurentPoly1 r;
    for (const auto& [e, c] : p.terms()) {
        r.add_term({e[0] + e[1]}, c);
    }
    return r;
}

std::vector<Coeff> coefficient_profile(const LaurentPoly1& p) {
    auto nf = normalize(p); // throws ZeroPolynomial on zero
    Coeff max_exp = nf.normal.terms().rbegin()->first[0];
    std::vector<Coeff> dense(static_cast<std::size_t>(max_exp) + 1, 0);
    for (const auto& [e, c] : nf.normal.terms()) {
        dense[static_cast<std::size_t>(e[0])] = c;
    }
    return dense;
}

bool is_trapezoidal(const LaurentPoly1& p) {
    std::vector<Coeff> c = coefficient_profile(p);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) return false;
        if (k > 0 && (c[k] > 0) == (c[k - 1] > 0)) return false;
    }
    // magnitudes must be non-decreasing, then non-increasing
    std::size_t k = 1;
    while (k < c.size() && std::abs(c[k]) >= std::abs(c[k - 1])) ++k;
    while (k < c.size() && std::abs(c[k]) <= std::abs(c[k - 1])) ++k;
    return k == c.size();
}

} // namespace twobridge
