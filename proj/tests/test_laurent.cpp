#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "twobridge/laurent.hpp"

using namespace twobridge;
using tbtest::p1;
using tbtest::p2;

TEST_CASE("ring arithmetic") {
    CHECK(p1({{0, 1}, {1, -1}}) * p1({{0, 1}, {1, 1}}) == p1({{0, 1}, {2, -1}}));
    CHECK(p2({{{1, 0}, 1}, {{0, 0}, -1}}) * LaurentPoly2::constant(1) ==
          p2({{{1, 0}, 1}, {{0, 0}, -1}}));
    // (t - 1)(t^4 - 2t^3 + 3t^2 - 2t + 1)
    auto product = p1({{1, 1}, {0, -1}}) *
                   p1({{4, 1}, {3, -2}, {2, 3}, {1, -2}, {0, 1}});
    CHECK(product == p1({{5, 1}, {4, -3}, {3, 5}, {2, -5}, {1, 3}, {0, -1}}));
}

TEST_CASE("multiply agrees with a dense convolution oracle") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = tbtest::random_poly<1>(rng);
        auto b = tbtest::random_poly<1>(rng);
        // dense convolution over the shifted coefficient arrays
        constexpr Coeff kOffset = 8;
        std::vector<Coeff> da(17, 0), db(17, 0);
        for (const auto& [e, c] : a.terms()) da[static_cast<std::size_t>(e[0] + kOffset)] = c;
        for (const auto& [e, c] : b.terms()) db[static_cast<std::size_t>(e[0] + kOffset)] = c;
        LaurentPoly1 expected;
        for (std::size_t i = 0; i < da.size(); ++i) {
            for (std::size_t j = 0; j < db.size(); ++j) {
                expected.add_term({static_cast<Coeff>(i + j) - 2 * kOffset}, da[i] * db[j]);
            }
        }
        CHECK(a * b == expected);
    }
}

TEST_CASE("normalize picks the printed representative") {
    auto nf = normalize(p1({{-1, 1}, {0, -3}, {1, 5}, {2, -3}, {3, 1}}));
    CHECK(nf.normal == p1({{0, 1}, {1, -3}, {2, 5}, {3, -3}, {4, 1}}));
    CHECK(nf.sign == 1);
    CHECK(nf.shifts[0] == -1);

    auto neg_x = normalize(p2({{{1, 0}, -1}}));
    CHECK(neg_x.normal == LaurentPoly2::constant(1));
    CHECK(neg_x.sign == -1);
    CHECK(neg_x.shifts[0] == 1);

    auto printed = p2({{{2, 2}, 1}, {{2, 1}, -1}, {{1, 2}, -1}, {{1, 1}, 3},
                       {{1, 0}, -1}, {{0, 1}, -1}, {{0, 0}, 1}});
    CHECK(normalize(printed).normal == printed);

    CHECK_THROWS_AS(normalize(LaurentPoly1::zero()), ZeroPolynomial);
}

TEST_CASE("unit times normal form reproduces the input") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = tbtest::random_nonzero_poly<2>(rng);
        auto nf = normalize(p);
        LaurentPoly2 unit = LaurentPoly2::monomial({nf.shifts[0], nf.shifts[1]}, nf.sign);
        CHECK(unit * nf.normal == p);
    }
}

TEST_CASE("equality up to units") {
    CHECK(eq_up_to_units(p1({{1, 1}, {2, -1}}), p1({{0, 1}, {1, -1}})));
    CHECK(eq_up_to_units(p1({{0, 1}, {1, -3}, {2, 5}, {3, -3}, {4, 1}}),
                         p1({{-2, 1}, {-1, -3}, {0, 5}, {1, -3}, {2, 1}})));
    CHECK_FALSE(eq_up_to_units(p1({{0, 1}, {1, -1}}), p1({{0, 1}, {1, 1}})));
    CHECK(eq_up_to_units(LaurentPoly1::zero(), LaurentPoly1::zero()));
    CHECK_FALSE(eq_up_to_units(LaurentPoly1::zero(), LaurentPoly1::constant(1)));
}

TEST_CASE("eq_up_to_units absorbs random units") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<Coeff> exp_dist(-3, 3);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = tbtest::random_nonzero_poly<2>(rng);
        LaurentPoly2 unit = LaurentPoly2::monomial({exp_dist(rng), exp_dist(rng)},
                                                   sign_dist(rng) ? 1 : -1);
        CHECK(eq_up_to_units(p, unit * p));
    }
}

TEST_CASE("substitute_diagonal merges exponent sums") {
    auto delta = p2({{{2, 2}, 1}, {{2, 1}, -1}, {{1, 2}, -1}, {{1, 1}, 3},
                     {{1, 0}, -1}, {{0, 1}, -1}, {{0, 0}, 1}});
    CHECK(substitute_diagonal(delta) ==
          p1({{4, 1}, {3, -2}, {2, 3}, {1, -2}, {0, 1}}));
    CHECK(substitute_diagonal(LaurentPoly2::constant(1)) == LaurentPoly1::constant(1));
    CHECK(substitute_diagonal(p2({{{1, 1}, 1}, {{0, 0}, 1}})) == p1({{2, 1}, {0, 1}}));
}

TEST_CASE("invert_variables") {
    CHECK(invert_variables(p1({{0, 1}, {1, -3}, {2, 5}, {3, -3}, {4, 1}})) ==
          p1({{0, 1}, {-1, -3}, {-2, 5}, {-3, -3}, {-4, 1}}));
    CHECK(invert_variables(LaurentPoly1::constant(7)) == LaurentPoly1::constant(7));
    CHECK(invert_variables(p2({{{1, 1}, 1}})) == p2({{{-1, -1}, 1}}));

    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = tbtest::random_poly<2>(rng);
        CHECK(invert_variables(invert_variables(p)) == p);
    }
}

TEST_CASE("evaluate") {
    CHECK(evaluate(p1({{0, 1}, {1, -3}, {2, 5}, {3, -3}, {4, 1}}), {1}) == 1);
    auto delta = p2({{{2, 2}, 1}, {{2, 1}, -1}, {{1, 2}, -1}, {{1, 1}, 3},
                     {{1, 0}, -1}, {{0, 1}, -1}, {{0, 0}, 1}});
    CHECK(evaluate(delta, {1, 1}) == 1);
    CHECK(evaluate(LaurentPoly1::constant(1), {42}) == 1);
    CHECK(evaluate(p1({{-1, 1}}), {-1}) == -1);
    CHECK_THROWS_AS(evaluate(p1({{-1, 1}}), {2}), DomainError);

    std::mt19937 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = tbtest::random_poly<2>(rng);
        Coeff sum = 0;
        for (const auto& [e, c] : p.terms()) sum += c;
        CHECK(evaluate(p, {1, 1}) == sum);
    }
}

TEST_CASE("coefficient_profile") {
    CHECK(coefficient_profile(p1({{0, 1}, {1, -3}, {2, 5}, {3, -3}, {4, 1}})) ==
          std::vector<Coeff>{1, -3, 5, -3, 1});
    CHECK(coefficient_profile(p1({{0, 2}, {1, -3}, {2, 2}})) ==
          std::vector<Coeff>{2, -3, 2});
    CHECK(coefficient_profile(LaurentPoly1::constant(1)) == std::vector<Coeff>{1});
    CHECK_THROWS_AS(coefficient_profile(LaurentPoly1::zero()), ZeroPolynomial);
}

TEST_CASE("is_trapezoidal") {
    CHECK(is_trapezoidal(p1({{0, 1}, {1, -3}, {2, 5}, {3, -3}, {4, 1}})));
    CHECK(is_trapezoidal(p1({{0, 2}, {1, -3}, {2, 2}})));
    CHECK_FALSE(is_trapezoidal(p1({{0, 1}, {1, -1}, {2, 2}, {3, -1}, {4, 3}})));
    CHECK_FALSE(is_trapezoidal(p1({{0, 1}, {2, 1}})));     // internal zero
    CHECK_FALSE(is_trapezoidal(p1({{0, 1}, {1, 1}})));     // no sign alternation
    CHECK(is_trapezoidal(LaurentPoly1::constant(3)));
}

TEST_CASE("ring axioms spot-checked on random operands") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = tbtest::random_poly<2>(rng);
        auto b = tbtest::random_poly<2>(rng);
        auto c = tbtest::random_poly<2>(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + (-a) == LaurentPoly2::zero());
    }
}

TEST_CASE("normalize is idempotent") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = tbtest::random_nonzero_poly<1>(rng);
        auto once = normalize(p).normal;
        CHECK(normalize(once).normal == once);
    }
}
