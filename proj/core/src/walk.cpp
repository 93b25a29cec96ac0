#include "twobridge/walk.hpp"

namespace twobridge {

namespace {

WalkTrace1D run_1d(const SignSequence& seq) {
    WalkTrace1D trace;
    trace.steps = seq.signs;
    trace.positions.reserve(seq.signs.size() + 1);
    trace.positions.push_back(0);
    Int pos = 0;
    trace.visit_counts[0] = 1;
    for (int s : seq.signs) {
        pos += s;
        trace.positions.push_back(pos);
        ++trace.visit_counts[pos];
    }
    return trace;
}

} // namespace

WalkTrace1D walk_1d_minkus(const TwoBridgeParam& param) {
    return run_1d(epsilon_sequence(param));
}

LaurentPoly1 poly_from_1d_visits(const WalkTrace1D& trace) {
    LaurentPoly1 p;
    Int leftmost = trace.visit_counts.begin()->first;
    for (const auto& [n, count] : trace.visit_counts) {
        Coeff sign = (n - leftmost) % 2 == 0 ? 1 : -1;
        p.add_term({n - leftmost}, sign * count);
    }
    return normalize(p).normal;
}

WalkTrace1D walk_1d_hartley(const TwoBridgeParam& param) {
    WalkTrace1D trace = run_1d(shifted_sign_sequence(param));
    // a unit step from a to a+-1 crosses exactly the half-integer (2a+-1)/2
    for (std::size_t k = 0; k + 1 < trace.positions.size(); ++k) {
        ++trace.crossing_counts[trace.positions[k] + trace.positions[k + 1]];
    }
    return trace;
}

LaurentPoly1 poly_from_1d_crossings(const WalkTrace1D& trace) {
    LaurentPoly1 p;
    Int lowest = trace.crossing_counts.begin()->first; // doubled half-integer
    for (const auto& [doubled, count] : trace.crossing_counts) {
        Int offset = (doubled - lowest) / 2;
        Coeff sign = offset % 2 == 0 ? 1 : -1;
        p.add_term({offset}, sign * count);
    }
    return normalize(p).normal;
}

WalkTrace2D walk_2d(const TwoBridgeParam& param) {
    if (!param.is_link()) {
        throw KindError("2-D walk requires a link (q even), got q=" +
                        std::to_string(param.q()));
    }
    WalkTrace2D trace;
    Int half_steps = (param.q() - 2) / 2;
    trace.steps.reserve(static_cast<std::size_t>(half_steps));
    trace.positions.push_back({0, 0});
    trace.visit_counts[{0, 0}] = 1;
    std::array<Int, 2> pos{0, 0};
    for (Int m = 1; m <= half_steps; ++m) {
        int prev = epsilon(param, 2 * m - 1);
        int next = epsilon(param, 2 * m + 1);
        Step2D step;
        step.dx = epsilon(param, 2 * m);
        step.dy = prev == next ? prev : 0;
        trace.steps.push_back(step);
        pos[0] += step.dx;
        pos[1] += step.dy;
        trace.positions.push_back(pos);
        ++trace.visit_counts[pos];
    }
    return trace;
}

LaurentPoly2 poly_from_2d_visits(const WalkTrace2D& trace) {
    LaurentPoly2 p;
    for (const auto& [point, count] : trace.visit_counts) {
        Coeff sign = (point[0] + point[1]) % 2 == 0 ? 1 : -1;
        p.add_term(point, sign * count);
    }
    return normalize(p).normal;
}

} // namespace twobridge
