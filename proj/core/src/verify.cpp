#include "twobridge/verify.hpp"

#include <cmath>
#include <numeric>

#include "twobridge/closed_form.hpp"
#include "twobridge/fox.hpp"
#include "twobridge/walk.hpp"

namespace twobridge {

bool VerifyReport::all_passed() const {
    for (const auto& s : suites) {
        if (!s.passed()) return false;
    }
    return true;
}

std::vector<TwoBridgeParam> all_params(Int qmax) {
    std::vector<TwoBridgeParam> params;
    for (Int q = 2; q <= qmax; ++q) {
        for (Int p = 1; p < q; p += 2) {
            if (std::gcd(p, q) == 1) params.push_back(new_param(p, q));
        }
    }
    return params;
}

namespace {

using Check = std::function<bool(const TwoBridgeParam&)>;

SuiteResult run_suite(const std::string& name,
                      const std::vector<TwoBridgeParam>& params,
                      bool links_only, const Check& check) {
    SuiteResult result;
    result.name = name;
    for (const auto& param : params) {
        if (links_only && !param.is_link()) continue;
        ++result.checked;
        if (!check(param)) {
            ++result.failed;
            if (!result.first_counterexample) {
                result.first_counterexample = {param.p(), param.q()};
            }
        }
    }
    return result;
}

// quadratic-time transcription of the two-variable formula, kept as an
// oracle for the running-partial-sum implementation
LaurentPoly2 two_variable_poly_naive(const TwoBridgeParam& param) {
    LaurentPoly2 poly;
    for (Int i = 1; i <= param.q() / 2; ++i) {
        Int x_exp = 0;
        for (Int j = 1; j <= i - 1; ++j) x_exp += epsilon(param, 2 * j);
        Int eps_odd = epsilon(param, 2 * i - 1);
        Int y_exp = (eps_odd - 1) / 2;
        for (Int k = 1; k <= i - 1; ++k) y_exp += epsilon(param, 2 * k - 1);
        poly.add_term({x_exp, y_exp}, eps_odd);
    }
    return normalize(poly).normal;
}

bool contiguous_positive_support(const std::map<Int, Int>& counts) {
    Int expected = counts.begin()->first;
    for (const auto& [n, count] : counts) {
        if (n != expected++ || count <= 0) return false;
    }
    return true;
}

bool walk_structure_ok(const TwoBridgeParam& param) {
    WalkTrace1D minkus = walk_1d_minkus(param);
    if (static_cast<Int>(minkus.steps.size()) != param.q() - 1) return false;
    if (!contiguous_positive_support(minkus.visit_counts)) return false;

    WalkTrace1D hartley = walk_1d_hartley(param);
    if (static_cast<Int>(hartley.steps.size()) != param.q()) return false;
    if (!contiguous_positive_support(hartley.visit_counts)) return false;

    if (!param.is_link()) return true;

    WalkTrace2D walk = walk_2d(param);
    if (static_cast<Int>(walk.steps.size()) != (param.q() - 2) / 2) return false;
    if (static_cast<Int>(walk.positions.size()) != param.q() / 2) return false;
    // checkerboard sign law: the visit at time m sits on a point whose
    // parity sign equals eps_{2m-1}
    for (std::size_t idx = 0; idx < walk.positions.size(); ++idx) {
        Int m = static_cast<Int>(idx) + 1;
        Int parity = walk.positions[idx][0] + walk.positions[idx][1];
        int sign = parity % 2 == 0 ? 1 : -1;
        if (sign != epsilon(param, 2 * m - 1)) return false;
    }
    return true;
}

bool classical_evaluations_ok(const TwoBridgeParam& param) {
    if (param.is_link()) {
        return evaluate(minkus_poly_raw(param), {1}) == 0;
    }
    Coeff v = evaluate(minkus_poly(param), {1});
    return v == 1 || v == -1;
}

} // namespace

VerifyReport run_verification(Int qmax) {
    VerifyReport report;
    std::vector<TwoBridgeParam> params = all_params(qmax);

    report.suites.push_back(run_suite(
        "minkus-walk vs formula", params, false, [](const TwoBridgeParam& param) {
            return eq_up_to_units(poly_from_1d_visits(walk_1d_minkus(param)),
                                  minkus_poly(param));
        }));

    report.suites.push_back(run_suite(
        "hartley-walk vs formula", params, false, [](const TwoBridgeParam& param) {
            return eq_up_to_units(poly_from_1d_crossings(walk_1d_hartley(param)),
                                  minkus_poly(param));
        }));

    report.suites.push_back(run_suite(
        "2d-walk vs formula vs fox", params, true, [](const TwoBridgeParam& param) {
            LaurentPoly2 from_walk = poly_from_2d_visits(walk_2d(param));
            LaurentPoly2 from_formula = two_variable_poly(param);
            LaurentPoly2 from_fox = alexander_via_fox(param);
            return eq_up_to_units(from_walk, from_formula) &&
                   eq_up_to_units(from_formula, from_fox);
        }));

    report.suites.push_back(run_suite(
        "formula vs naive transcription", params, true, [](const TwoBridgeParam& param) {
            return two_variable_poly(param) == two_variable_poly_naive(param);
        }));

    report.suites.push_back(run_suite(
        "fox partials vs closed form", params, true, [](const TwoBridgeParam& param) {
            FreeWord w = relator_word(param);
            return abelianize(fox_derivative(w, Generator::A)) ==
                       closed_form_partial_a(param) &&
                   abelianize(fox_derivative(w, Generator::B)) ==
                       closed_form_partial_b(param);
        }));

    report.suites.push_back(run_suite(
        "fox identities", params, true, [](const TwoBridgeParam& param) {
            return verify_identities(param).all();
        }));

    report.suites.push_back(run_suite("walk structure", params, false,
                                      walk_structure_ok));

    report.suites.push_back(run_suite(
        "symmetry under variable inversion", params, false,
        [](const TwoBridgeParam& param) {
            LaurentPoly1 delta = minkus_poly(param);
            if (!eq_up_to_units(delta, invert_variables(delta))) return false;
            if (!param.is_link()) return true;
            LaurentPoly2 delta2 = two_variable_poly(param);
            return eq_up_to_units(delta2, invert_variables(delta2));
        }));

    report.suites.push_back(run_suite("classical evaluations at 1", params, false,
                                      classical_evaluations_ok));

    report.suites.push_back(run_suite(
        "knot trapezoidality", params, false, [](const TwoBridgeParam& param) {
            return param.is_link() || is_trapezoidal(minkus_poly(param));
        }));

    report.suites.push_back(run_suite(
        "reduced-polynomial relation", params, true, [](const TwoBridgeParam& param) {
            LaurentPoly1 diagonal = substitute_diagonal(two_variable_poly(param));
            LaurentPoly1 t_minus_1;
            t_minus_1.add_term({1}, 1);
            t_minus_1.add_term({0}, -1);
            return eq_up_to_units(t_minus_1 * diagonal, minkus_poly(param));
        }));

    for (const auto& param : params) {
        if (param.is_link() && !is_trapezoidal(minkus_poly(param))) {
            report.non_trapezoidal_links.emplace_back(param.p(), param.q());
        }
    }

    return report;
}

} // namespace twobridge
