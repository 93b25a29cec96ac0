#ifndef TWOBRIDGE_LAURENT_HPP
#define TWOBRIDGE_LAURENT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "twobridge/errors.hpp"

namespace twobridge {

using Coeff = std::int64_t;

/// Exact integer Laurent polynomial in N variables. Terms are kept sparse,
/// keyed by the exponent tuple in ascending lexicographic order; zero
/// coefficients are never stored.
template <std::size_t N>
class LaurentPoly {
public:
    using Exponents = std::array<Coeff, N>;
    using TermMap = std::map<Exponents, Coeff>;

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }

    static LaurentPoly constant(Coeff c) {
        LaurentPoly p;
        p.add_term(Exponents{}, c);
        return p;
    }

    static LaurentPoly monomial(const Exponents& e, Coeff c) {
        LaurentPoly p;
        p.add_term(e, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& e, Coeff c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else if ((it->second += c) == 0) {
            terms_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return a + (-b);
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (std::size_t k = 0; k < N; ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

private:
    TermMap terms_;
};

using LaurentPoly1 = LaurentPoly<1>;
using LaurentPoly2 = LaurentPoly<2>;

/// The unit u = sign * prod_k v_k^{shift_k} divided out during
/// normalization, together with the canonical representative:
/// unit * normal reproduces the input exactly.
template <std::size_t N>
struct UnitNormalForm {
    LaurentPoly<N> normal;
    int sign = 1;                          // +1 or -1
    std::array<Coeff, N> shifts{};         // exponent of each variable in the unit
};

/// Canonical representative of the class of p up to units: every variable's
/// minimum exponent is shifted to 0 and the coefficient of the
/// lexicographically smallest present monomial is made positive.
template <std::size_t N>
UnitNormalForm<N> normalize(const LaurentPoly<N>& p) {
    if (p.is_zero()) throw ZeroPolynomial("cannot normalize the zero polynomial");
    UnitNormalForm<N> out;
    std::array<Coeff, N> mins = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t k = 0; k < N; ++k) {
            if (e[k] < mins[k]) mins[k] = e[k];
        }
    }
    LaurentPoly<N> shifted;
    for (const auto& [e, c] : p.terms()) {
        std::array<Coeff, N> ne;
        for (std::size_t k = 0; k < N; ++k) ne[k] = e[k] - mins[k];
        shifted.add_term(ne, c);
    }
    int sign = shifted.terms().begin()->second > 0 ? 1 : -1;
    out.normal = sign == 1 ? shifted : -shifted;
    out.sign = sign;
    out.shifts = mins;
    return out;
}

/// The paper's relation f ≐ g: equal up to multiplication by a unit
/// ±(monomial). Zero equals only zero.
template <std::size_t N>
bool eq_up_to_units(const LaurentPoly<N>& a, const LaurentPoly<N>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return normalize(a).normal == normalize(b).normal;
}

/// Set every variable to t: c * x^i y^j contributes c * t^{i+j}.
LaurentPoly1 substitute_diagonal(const LaurentPoly2& p);

/// Negate all exponents (t -> 1/t, (x,y) -> (1/x,1/y)).
template <std::size_t N>
LaurentPoly<N> invert_variables(const LaurentPoly<N>& p) {
    LaurentPoly<N> r;
    for (const auto& [e, c] : p.terms()) {
        std::array<Coeff, N> ne;
        for (std::size_t k = 0; k < N; ++k) ne[k] = -e[k];
        r.add_term(ne, c);
    }
    return r;
}

namespace detail {
inline Coeff int_pow(Coeff base, Coeff exp) {
    if (exp < 0) {
        if (base == 1) return 1;
        if (base == -1) return exp % 2 == 0 ? 1 : -1;
        throw DomainError("negative exponent with base other than +-1");
    }
    Coeff r = 1;
    for (Coeff k = 0; k < exp; ++k) r *= base;
    return r;
}
} // namespace detail

template <std::size_t N>
Coeff evaluate(const LaurentPoly<N>& p, const std::array<Coeff, N>& point) {
    Coeff total = 0;
    for (const auto& [e, c] : p.terms()) {
        Coeff term = c;
        for (std::size_t k = 0; k < N; ++k) term *= detail::int_pow(point[k], e[k]);
        total += term;
    }
    return total;
}

/// Dense coefficients of the normalized form, exponent 0 through max.
std::vector<Coeff> coefficient_profile(const LaurentPoly1& p);

/// True iff the normalized dense coefficients have no internal zeros,
/// strictly alternate in sign, and their magnitudes rise then fall
/// (trapezoidal shape).
bool is_trapezoidal(const LaurentPoly1& p);

} // namespace twobridge

#endif
