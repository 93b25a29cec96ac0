#ifndef TWOBRIDGE_FOX_HPP
#define TWOBRIDGE_FOX_HPP

#include <map>
#include <vector>

#include "twobridge/laurent.hpp"
#include "twobridge/param.hpp"

namespace twobridge {

enum class Generator { A, B };

struct Letter {
    Generator gen;
    int exp; // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A word in the free group on a, b; stored as written, not freely reduced.
using FreeWord = std::vector<Letter>;

/// Formal integer combination of free words; zero-coefficient entries pruned.
class GroupRingElement {
public:
    GroupRingElement() = default;

    void add(const FreeWord& w, Coeff c);
    bool is_zero() const { return terms_.empty(); }
    const std::map<FreeWord, Coeff>& terms() const { return terms_; }

    friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);

    /// Left-multiply every word by the given word.
    GroupRingElement left_mul(const FreeWord& w) const;

private:
    std::map<FreeWord, Coeff> terms_;
};

/// The commutator relator's word w = b^{eps_1} a^{eps_2} ... b^{eps_{q-1}}
/// from the over presentation <a, b | a w a^-1 w^-1>. Requires q even.
FreeWord relator_word(const TwoBridgeParam& param);

/// Fox free derivative: d(uv) = du + u dv, dg/dg = 1, dg^-1/dg = -g^-1,
/// dh^{+-1}/dg = 0 for h != g. Computed by a single left-to-right pass with
/// prefix accumulation.
GroupRingElement fox_derivative(const FreeWord& word, Generator gen);

/// a -> x, b -> y: each word maps to x^{sum of a-exponents} y^{sum of
/// b-exponents}.
LaurentPoly2 abelianize(const GroupRingElement& elem);
LaurentPoly2 abelianize_word(const FreeWord& word);

/// Direct transcriptions of the abelianized partial derivatives of w.
LaurentPoly2 closed_form_partial_a(const TwoBridgeParam& param);
LaurentPoly2 closed_form_partial_b(const TwoBridgeParam& param);

struct IdentityReport {
    bool partial_a_expansion = false; // (x-1) dw/da matches its telescoping expansion
    bool partial_b_expansion = false; // (y-1) dw/db matches its telescoping expansion
    bool telescoped_sum = false;      // the two add up to -1 + x^{E} y^{O}
    bool matrix_entry_cancellation = false; // M_{1,1} = -(y-1) dw/db
    bool all() const {
        return partial_a_expansion && partial_b_expansion && telescoped_sum &&
               matrix_entry_cancellation;
    }
};

/// Checks the four displayed identities as exact polynomial equalities
/// (no unit slack). Requires q even.
IdentityReport verify_identities(const TwoBridgeParam& param);

/// The two-variable Alexander polynomial by Fox calculus: the abelianized
/// derivative of the relator word with respect to b, in canonical normal
/// form. The gcd of the two Alexander-matrix entries is resolved
/// analytically: both are unit multiples of this derivative once the
/// M_{1,1} cancellation holds, which verify_identities checks.
LaurentPoly2 alexander_via_fox(const TwoBridgeParam& param);

} // namespace twobridge

#endif
