#include "twobridge/fox.hpp"

namespace twobridge {

void GroupRingElement::add(const FreeWord& w, Coeff c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else if ((it->second += c) == 0) {
        terms_.erase(it);
    }
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, c);
    return r;
}

GroupRingElement GroupRingElement::left_mul(const FreeWord& prefix) const {
    GroupRingElement r;
    for (const auto& [w, c] : terms_) {
        FreeWord pw = prefix;
        pw.insert(pw.end(), w.begin(), w.end());
        r.add(pw, c);
    }
    return r;
}

FreeWord relator_word(const TwoBridgeParam& param) {
    if (!param.is_link()) {
        throw KindError("relator word requires a link (q even), got q=" +
                        std::to_string(param.q()));
    }
    FreeWord w;
    w.reserve(static_cast<std::size_t>(param.q() - 1));
    for (Int i = 1; i <= param.q() - 1; ++i) {
        Generator g = i % 2 == 1 ? Generator::B : Generator::A;
        w.push_back({g, epsilon(param, i)});
    }
    return w;
}

GroupRingElement fox_derivative(const FreeWord& word, Generator gen) {
    GroupRingElement deriv;
    FreeWord prefix;
    for (const Letter& letter : word) {
        if (letter.gen == gen) {
            if (letter.exp == 1) {
                deriv.add(prefix, 1); // d g / d g = 1
            } else {
                FreeWord w = prefix;
                w.push_back({gen, -1});
                deriv.add(w, -1); // d g^-1 / d g = -g^-1
            }
        }
        prefix.push_back(letter);
    }
    return deriv;
}

LaurentPoly2 abelianize_word(const FreeWord& word) {
    Coeff a_exp = 0;
    Coeff b_exp = 0;
    for (const Letter& letter : word) {
        (letter.gen == Generator::A ? a_exp : b_exp) += letter.exp;
    }
    return LaurentPoly2::monomial({a_exp, b_exp}, 1);
}

LaurentPoly2 abelianize(const GroupRingElement& elem) {
    LaurentPoly2 p;
    for (const auto& [w, c] : elem.terms()) {
        Coeff a_exp = 0;
        Coeff b_exp = 0;
        for (const Letter& letter : w) {
            (letter.gen == Generator::A ? a_exp : b_exp) += letter.exp;
        }
        p.add_term({a_exp, b_exp}, c);
    }
    return p;
}

LaurentPoly2 closed_form_partial_a(const TwoBridgeParam& param) {
    if (!param.is_link()) {
        throw KindError("closed-form partial requires a link (q even)");
    }
    LaurentPoly2 p;
    Int even_sum = 0; // sum of eps_{2j}, j < i
    Int odd_sum = 0;  // sum of eps_{2k-1}, k <= i
    for (Int i = 1; i <= (param.q() - 2) / 2; ++i) {
        Int eps_even = epsilon(param, 2 * i);
        odd_sum += epsilon(param, 2 * i - 1);
        p.add_term({(eps_even - 1) / 2 + even_sum, odd_sum}, eps_even);
        even_sum += eps_even;
    }
    return p;
}

LaurentPoly2 closed_form_partial_b(const TwoBridgeParam& param) {
    if (!param.is_link()) {
        throw KindError("closed-form partial requires a link (q even)");
    }
    LaurentPoly2 p;
    Int even_sum = 0;
    Int odd_sum = 0;
    for (Int i = 1; i <= param.q() / 2; ++i) {
        Int eps_odd = epsilon(param, 2 * i - 1);
        p.add_term({even_sum, (eps_odd - 1) / 2 + odd_sum}, eps_odd);
        odd_sum += eps_odd;
        if (2 * i <= param.q() - 1) even_sum += epsilon(param, 2 * i);
    }
    return p;
}

namespace {

LaurentPoly2 variable_poly(std::size_t var, Coeff exp) {
    std::array<Coeff, 2> e{};
    e[var] = exp;
    return LaurentPoly2::monomial(e, 1);
}

} // namespace

IdentityReport verify_identities(const TwoBridgeParam& param) {
    if (!param.is_link()) {
        throw KindError("identity check requires a link (q even)");
    }
    IdentityReport report;
    const LaurentPoly2 one = LaurentPoly2::constant(1);
    const LaurentPoly2 x = variable_poly(0, 1);
    const LaurentPoly2 y = variable_poly(1, 1);

    LaurentPoly2 partial_a = closed_form_partial_a(param);
    LaurentPoly2 partial_b = closed_form_partial_b(param);

    // (x-1) dw/da = sum (x^{eps_{2i}} - 1) x^{sum_{j<i} eps_{2j}} y^{sum_{k<=i} eps_{2k-1}}
    LaurentPoly2 lhs_a = (x - one) * partial_a;
    LaurentPoly2 rhs_a;
    {
        Int even_sum = 0;
        Int odd_sum = 0;
        for (Int i = 1; i <= (param.q() - 2) / 2; ++i) {
            Int eps_even = epsilon(param, 2 * i);
            odd_sum += epsilon(param, 2 * i - 1);
            LaurentPoly2 factor = variable_poly(0, eps_even) - one;
            rhs_a = rhs_a + factor * LaurentPoly2::monomial({even_sum, odd_sum}, 1);
            even_sum += eps_even;
        }
    }
    report.partial_a_expansion = lhs_a == rhs_a;

    // (y-1) dw/db = sum (y^{eps_{2i-1}} - 1) x^{sum_{j<i} eps_{2j}} y^{sum_{k<i} eps_{2k-1}}
    LaurentPoly2 lhs_b = (y - one) * partial_b;
    LaurentPoly2 rhs_b;
    {
        Int even_sum = 0;
        Int odd_sum = 0;
        for (Int i = 1; i <= param.q() / 2; ++i) {
            Int eps_odd = epsilon(param, 2 * i - 1);
            LaurentPoly2 factor = variable_poly(1, eps_odd) - one;
            rhs_b = rhs_b + factor * LaurentPoly2::monomial({even_sum, odd_sum}, 1);
            odd_sum += eps_odd;
            if (2 * i <= param.q() - 1) even_sum += epsilon(param, 2 * i);
        }
    }
    report.partial_b_expansion = lhs_b == rhs_b;

    // the sum telescopes to -1 + x^{sum eps_even} y^{sum eps_odd}
    Int total_even = 0;
    Int total_odd = 0;
    for (Int i = 1; i <= param.q() - 1; ++i) {
        (i % 2 == 0 ? total_even : total_odd) += epsilon(param, i);
    }
    LaurentPoly2 abelianized_w = LaurentPoly2::monomial({total_even, total_odd}, 1);
    report.telescoped_sum = (lhs_a + lhs_b) == (abelianized_w - one);

    // M_{1,1} = 1 - x^{E} y^{O} + (x-1) dw/da equals -(y-1) dw/db
    LaurentPoly2 m11 = one - abelianized_w + lhs_a;
    report.matrix_entry_cancellation = m11 == -lhs_b;

    return report;
}

LaurentPoly2 alexander_via_fox(const TwoBridgeParam& param) {
    GroupRingElement deriv = fox_derivative(relator_word(param), Generator::B);
    return normalize(abelianize(deriv)).normal;
}

} // namespace twobridge
