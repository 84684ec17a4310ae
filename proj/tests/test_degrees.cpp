#include "doctest.h"

#include "charzeta/degrees.hpp"

using namespace charzeta;

TEST_CASE("greedy element: spec examples") {
    auto g = greedy_element(5, 1, 3);
    REQUIRE(g.has_value());
    CHECK(g->parts == std::vector<long long>{2, 3});
    g = greedy_element(4, 1, 3);
    REQUIRE(g.has_value());
    CHECK(g->parts == std::vector<long long>{4, 0});
    CHECK_FALSE(greedy_element(5, 2, 3).has_value()); // l(5)=3 < 4
    CHECK_THROWS_WITH_AS(greedy_element(5, 1, 4), doctest::Contains("NotPrimeField"), Error);
}

TEST_CASE("greedy element invariants: no-carry, positivity, divisibility") {
    for (long long p : {2LL, 3LL, 5LL}) {
        for (long long j = 0; j <= 300; ++j) {
            for (long long k = 0; k <= 4; ++k) {
                auto g = greedy_element(j, k, p);
                if (digit_sum(j, p) < k * (p - 1)) {
                    CHECK_FALSE(g.has_value());
                    continue;
                }
                REQUIRE(g.has_value());
                long long total = 0;
                long long lsum = 0;
                for (auto x : g->parts) {
                    total += x;
                    lsum += digit_sum(x, p);
                }
                CHECK(total == j);
                CHECK(lsum == digit_sum(j, p)); // digitwise split, no carries
                for (long long i = 0; i < k; ++i) {
                    CHECK(g->parts[(size_t)i] > 0);
                    CHECK(g->parts[(size_t)i] % (p - 1) == 0);
                }
            }
        }
    }
}

TEST_CASE("deg_power_sum: anchored values") {
    CHECK(deg_power_sum(5, 1, 3) == 3);
    CHECK(deg_power_sum(4, 1, 3) == 0);
    CHECK(deg_power_sum(8, 2, 3) == 6);
    CHECK_FALSE(deg_power_sum(5, 2, 3).has_value()); // -infinity
}

TEST_CASE("calibration: formula equals brute force") {
    for (long long p : {2LL, 3LL, 5LL}) {
        auto rows = calibrate_degrees(p, 3, 100);
        for (const auto& r : rows) CHECK(r.match);
    }
}

TEST_CASE("deg_special") {
    CHECK(deg_special(5, 3) == 1);
    CHECK(deg_special(8, 3) == 2);
    CHECK(deg_special(0, 3) == 0);
    // equals both the greedy existence bound and the actual special degree
    for (long long p : {2LL, 3LL}) {
        auto F = Fq::make(p, 1);
        for (long long j = 0; j <= 64; ++j) {
            long long d = deg_special(j, p);
            CHECK(greedy_element(j, d, p).has_value());
            CHECK_FALSE(greedy_element(j, d + 1, p).has_value());
            CHECK(special_poly(F, j).xdeg() == d);
        }
    }
}
