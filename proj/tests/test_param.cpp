#include <doctest.h>

#include "test_util.hpp"
#include "twobridge/param.hpp"

using namespace twobridge;
using tbtest::sign_string;

TEST_CASE("new_param validates and classifies") {
    CHECK(new_param(5, 13).kind() == LinkKind::Knot);
    CHECK(new_param(5, 18).kind() == LinkKind::Link);
    CHECK(new_param(1, 2).kind() == LinkKind::Link);
    CHECK_THROWS_AS(new_param(2, 7), ParityError);
    CHECK_THROWS_AS(new_param(0, 5), RangeError);
    CHECK_THROWS_AS(new_param(5, 5), RangeError);
    CHECK_THROWS_AS(new_param(7, 5), RangeError);
    CHECK_THROWS_AS(new_param(3, 9), GcdError);
    CHECK_THROWS_AS(new_param(1, 2'000'000), RangeError);
}

TEST_CASE("mirror_normalize substitutes q - p for even p") {
    CHECK(mirror_normalize(2, 7).p() == 5);
    CHECK(mirror_normalize(4, 7).p() == 3);
    CHECK(mirror_normalize(2, 5).p() == 3);
    // odd p passes through untouched
    CHECK(mirror_normalize(5, 13).p() == 5);
    // p even with q even is not repairable; parity is rejected first
    CHECK_THROWS_AS(mirror_normalize(2, 8), ParityError);
}

TEST_CASE("epsilon values") {
    auto k513 = new_param(5, 13);
    auto l518 = new_param(5, 18);
    CHECK(epsilon(k513, 0) == 1);
    CHECK(epsilon(k513, 3) == -1);
    CHECK(epsilon(l518, 8) == 1);
    CHECK_THROWS_AS(epsilon(k513, 13), IndexError);
    CHECK_THROWS_AS(epsilon(k513, -1), IndexError);
}

TEST_CASE("epsilon sequences match the printed ones") {
    CHECK(sign_string(epsilon_sequence(new_param(5, 13))) == "++---++---++");
    CHECK(sign_string(epsilon_sequence(new_param(5, 18))) == "+++----+++----+++");
    CHECK(sign_string(epsilon_sequence(new_param(1, 2))) == "+");
}

TEST_CASE("epsilon sequence with the zeroth term") {
    auto seq = epsilon_sequence_with_zero(new_param(5, 13));
    CHECK(seq.signs.size() == 13);
    CHECK(seq.signs.front() == 1);
    CHECK(sign_string(seq) == "+++---++---++");
    CHECK(sign_string(epsilon_sequence_with_zero(new_param(1, 3))) == "+++");
    CHECK(sign_string(epsilon_sequence_with_zero(new_param(1, 2))) == "++");
}

TEST_CASE("shifted sign sequence") {
    CHECK(sign_string(shifted_sign_sequence(new_param(3, 7))) == "++---++");
    // direct floor evaluation: floor(1/4) = floor(3/4) = 0
    CHECK(sign_string(shifted_sign_sequence(new_param(1, 2))) == "++");
    CHECK(sign_string(shifted_sign_sequence(new_param(1, 3))) == "+++");
    CHECK(shifted_sign_sequence(new_param(5, 13)).signs.size() == 13);
}

TEST_CASE("epsilon_1 is always +1 and flips track the floor") {
    for (Int q = 2; q <= 60; ++q) {
        for (Int p = 1; p < q; p += 2) {
            if (std::gcd(p, q) != 1) continue;
            auto param = new_param(p, q);
            auto seq = epsilon_sequence(param);
            CHECK(seq.signs.front() == 1);
            for (Int i = 2; i <= q - 1; ++i) {
                bool flip = seq.signs[i - 1] != seq.signs[i - 2];
                bool floor_changed = (i * p / q) != ((i - 1) * p / q);
                CHECK(flip == floor_changed);
            }
        }
    }
}

TEST_CASE("minus count equals the count of odd floors") {
    for (Int q = 2; q <= 60; ++q) {
        for (Int p = 1; p < q; p += 2) {
            if (std::gcd(p, q) != 1) continue;
            auto seq = epsilon_sequence(new_param(p, q));
            Int minus = 0;
            for (int s : seq.signs) minus += s < 0;
            Int odd_floors = 0;
            for (Int i = 1; i <= q - 1; ++i) odd_floors += (i * p / q) % 2 != 0;
            CHECK(minus == odd_floors);
        }
    }
}

TEST_CASE("integer-division floor agrees with the exact rational bracket") {
    // f = floor(ip/q) iff fq <= ip < (f+1)q, checked in exact integers
    for (Int q = 2; q <= 200; ++q) {
        for (Int p = 1; p < q; p += 2) {
            if (std::gcd(p, q) != 1) continue;
            auto param = new_param(p, q);
            for (Int i = 0; i <= q - 1; ++i) {
                Int f = i * p / q;
                REQUIRE(f * q <= i * p);
                REQUIRE(i * p < (f + 1) * q);
                CHECK(epsilon(param, i) == (f % 2 == 0 ? 1 : -1));
            }
        }
    }
}
