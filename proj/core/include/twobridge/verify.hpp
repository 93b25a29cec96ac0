#ifndef TWOBRIDGE_VERIFY_HPP
#define TWOBRIDGE_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/param.hpp"

namespace twobridge {

struct SuiteResult {
    std::string name;
    Int checked = 0;
    Int failed = 0;
    std::optional<std::pair<Int, Int>> first_counterexample; // (p, q)
    bool passed() const { return failed == 0; }
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    // informational: link parameters whose reduced polynomial is not
    // trapezoidal (reported, not asserted)
    std::vector<std::pair<Int, Int>> non_trapezoidal_links;
    bool all_passed() const;
};

/// Enumerate all valid parameters (p odd, gcd(p,q)=1, 0<p<q) with q <= qmax.
std::vector<TwoBridgeParam> all_params(Int qmax);

/// Run every cross-validation suite over all parameters with q <= qmax:
/// walk/formula/oracle agreement, the four polynomial identities, walk
/// structure invariants, symmetry, classical evaluations, trapezoidality
/// of knot polynomials, and the (t-1)-reduced-polynomial relation.
VerifyReport run_verification(Int qmax);

} // namespace twobridge

#endif
