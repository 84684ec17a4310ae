#include "doctest.h"

#include "charzeta/padic.hpp"

using namespace charzeta;
using Tail = PAdicApprox::Tail;

TEST_CASE("digit_sum") {
    CHECK(digit_sum(5, 3) == 3);
    CHECK(digit_sum(7, 2) == 3);
    CHECK(digit_sum(8, 3) == 4);
    CHECK(digit_sum(0, 5) == 0);
    // non-integer p-adics have l = infinity
    CHECK_FALSE(digit_sum_padic(PAdicApprox::from_int(3, -1)).has_value());
    CHECK(digit_sum_padic(PAdicApprox::from_int(3, 14)) == 4);
}

TEST_CASE("integer round trips and negation") {
    for (long long v : {0LL, 1LL, -1LL, 5LL, -5LL, 80LL, -19517LL}) {
        auto y = PAdicApprox::from_int(3, v);
        CHECK(y.to_int() == v);
        CHECK(y.neg().to_int() == -v);
    }
    auto m5 = PAdicApprox::from_int(3, -5);
    CHECK(m5.neg().stored_digits() == std::vector<uint32_t>{2, 1});
    CHECK(m5.neg().tail() == Tail::Zero);
    auto one = PAdicApprox::from_int(3, 1);
    CHECK(one.neg().tail() == Tail::AllPMinus1); // -1 = all digits p-1
    CHECK(one.neg().stored_digits().empty());
    CHECK(PAdicApprox::from_int(3, 0).neg().is_zero());
}

TEST_CASE("digit string parsing") {
    auto y = PAdicApprox::parse(3, "2.1");
    CHECK(y.to_int() == 5);
    auto m1 = PAdicApprox::parse(3, "*");
    CHECK(m1.to_int() == -1);
}

TEST_CASE("digit string parsing errors and tails") {
    CHECK_THROWS_AS(PAdicApprox::parse(3, "3.1"), Error);
    auto y = PAdicApprox::parse(3, "1.2.*");
    CHECK(y.to_int() == -2); // 1 + 2*3 + "all 2s" = 7 - 9 = -2
    auto u = PAdicApprox(3, {1, 2}, Tail::Unknown);
    CHECK_FALSE(u.to_int().has_value());
    CHECK_THROWS_WITH_AS(u.digit(5), doctest::Contains("InsufficientDigits"), Error);
}

TEST_CASE("y_trunc: spec values") {
    CHECK(y_trunc(PAdicApprox::from_int(3, 1), 2) == 8);   // digits of -1: (2,2,...)
    CHECK(y_trunc(PAdicApprox::from_int(3, -5), 1) == 2);  // prefix (2) of (2,1)
    CHECK(y_trunc(PAdicApprox::from_int(3, -8), 2) == 8);  // digit sum exactly 4
    CHECK(y_trunc(PAdicApprox::from_int(3, -8), 1) == 2);
    // digit splitting: -y = 7 = (1,2): target 2 takes 1 + one of the 2s -> 4
    CHECK(y_trunc(PAdicApprox::from_int(3, -7), 1) == 4);
    CHECK(y_trunc(PAdicApprox::from_int(3, -4), 1) == 4);
    CHECK(y_trunc(PAdicApprox::from_int(2, -7), 2) == 3);
    // errors
    CHECK_THROWS_WITH_AS(y_trunc(PAdicApprox::from_int(3, -5), 2),
                         doctest::Contains("ClassNotOpen"), Error);
    CHECK_THROWS_WITH_AS(y_trunc(PAdicApprox(3, {2, 1}, Tail::Unknown), 2),
                         doctest::Contains("InsufficientDigits"), Error);
    // y = 5 + O(9): -y has digits (1,1,...), so y_1 = 4 is decided by the prefix
    CHECK(y_trunc(PAdicApprox(3, {2, 1}, Tail::Unknown), 1) == 4);
}

TEST_CASE("y_trunc fixed point and stability") {
    // y_trunc(-j, n) = j whenever l(j) = n(p-1)
    for (long long p : {2LL, 3LL, 5LL}) {
        for (long long j = 1; j <= 400; ++j) {
            long long l = digit_sum(j, p);
            if (l % (p - 1)) continue;
            long long n = l / (p - 1);
            CHECK(y_trunc(PAdicApprox::from_int(p, -j), n) == j);
        }
    }
    // depends only on digits up to the last one used: add beta in p^(e+1) Z_p
    auto y = PAdicApprox::from_int(3, -8); // digits (2,2): e = 1
    for (long long beta : {9LL, 27LL, -18LL}) {
        CHECK(y_trunc(PAdicApprox::from_int(3, -8 + beta * 1), 2) == 8);
    }
}

TEST_CASE("digit_sum subadditivity (carry criterion)") {
    for (long long a = 0; a < 60; ++a)
        for (long long b = 0; b < 60; ++b) {
            long long lhs = digit_sum(a, 3) + digit_sum(b, 3);
            CHECK(lhs >= digit_sum(a + b, 3));
        }
    // equality iff no carries: spot-check
    CHECK(digit_sum(2, 3) + digit_sum(6, 3) == digit_sum(8, 3));
    CHECK(digit_sum(2, 3) + digit_sum(1, 3) > digit_sum(3, 3));
}

TEST_CASE("integer_approximant") {
    CHECK(integer_approximant(PAdicApprox::from_int(3, 1), 2) == 8);
    CHECK(integer_approximant(PAdicApprox::from_int(3, -5), 3) == 5);
    CHECK(integer_approximant(PAdicApprox::from_int(3, -5), 1, std::pair{1LL, 8LL}) == 17);
    // truncated input needs digits
    PAdicApprox u(3, {1}, Tail::Unknown);
    CHECK_THROWS_WITH_AS(integer_approximant(u, 2), doctest::Contains("InsufficientDigits"),
                         Error);
    CHECK(integer_approximant(u, 1) == 2); // -j == y mod 3 with y == 1: j = 2
}

TEST_CASE("padic add/mul agree with integers") {
    for (long long a : {-37LL, -5LL, 0LL, 1LL, 29LL})
        for (long long b : {-11LL, -1LL, 0LL, 7LL, 15LL}) {
            auto pa = PAdicApprox::from_int(5, a), pb = PAdicApprox::from_int(5, b);
            CHECK(pa.add(pb).to_int() == a + b);
            CHECK(pa.mul(pb).to_int() == a * b);
        }
    // truncated result keeps min known digits
    PAdicApprox u(3, {1, 2, 1}, Tail::Unknown);
    auto s = u.add(PAdicApprox::from_int(3, 4));
    CHECK(s.stored() <= 3);
    CHECK(s.digit(0) == (uint32_t)((1 + 1) % 3));
}
