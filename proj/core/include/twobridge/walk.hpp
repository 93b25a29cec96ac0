#ifndef TWOBRIDGE_WALK_HPP
#define TWOBRIDGE_WALK_HPP

#include <array>
#include <map>
#include <vector>

#include "twobridge/laurent.hpp"
#include "twobridge/param.hpp"

namespace twobridge {

/// Walk on the integers driven by a sign sequence: +1 steps right, -1 left.
/// positions[0] = 0 and positions[k+1] - positions[k] = steps[k].
/// crossing_counts is filled only by walk_1d_hartley; its keys are the
/// half-integers crossed, stored doubled (always odd).
struct WalkTrace1D {
    std::vector<int> steps;
    std::vector<Int> positions;
    std::map<Int, Int> visit_counts;
    std::map<Int, Int> crossing_counts;
};

struct Step2D {
    int dx; // +1 or -1
    int dy; // +1, 0, or -1
};

/// Walk on Z x Z starting at (0,0); q/2 visited points for (q-2)/2 steps.
struct WalkTrace2D {
    std::vector<Step2D> steps;
    std::vector<std::array<Int, 2>> positions;
    std::map<std::array<Int, 2>, Int> visit_counts;
};

/// One step per epsilon sign (indices 1..q-1), counting visits to integers.
WalkTrace1D walk_1d_minkus(const TwoBridgeParam& param);

/// Coefficient at integer n is (-1)^{n-n0} * visits(n), n0 the leftmost
/// visited integer; canonical normal form.
LaurentPoly1 poly_from_1d_visits(const WalkTrace1D& trace);

/// One step per shifted sign (q steps), counting crossings of half-integers.
WalkTrace1D walk_1d_hartley(const TwoBridgeParam& param);

/// Crossing counts at consecutive half-integers with alternating signs.
LaurentPoly1 poly_from_1d_crossings(const WalkTrace1D& trace);

/// One step for every other epsilon sign starting with the second:
/// dx = eps_{2m}, dy = +1/-1 when eps_{2m-1} = eps_{2m+1} = +1/-1, else 0.
/// Requires q even.
WalkTrace2D walk_2d(const TwoBridgeParam& param);

/// Term (-1)^{i+j} * k * x^i y^j per visited point (i,j) with count k.
LaurentPoly2 poly_from_2d_visits(const WalkTrace2D& trace);

} // namespace twobridge

#endif
