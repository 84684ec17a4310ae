#include "doctest.h"

#include "charzeta/degrees.hpp"
#include "charzeta/newton.hpp"

using namespace charzeta;

namespace {
FqPtr F3() { return Fq::make(3, 1); }

NewtonPolygon z_polygon(const FqPtr& F, long long j) {
    return polygon_of_series(special_poly(F, j));
}
} // namespace

TEST_CASE("polygon: spec point sets") {
    // z(x,-5): points (0,0), (1,-3)
    auto F = F3();
    auto pg = z_polygon(F, 5);
    REQUIRE(pg.segments.size() == 1);
    CHECK(pg.segments[0].slope == Rat(-3));
    CHECK(pg.segments[0].length == 1);
    CHECK(pg.complete);

    // constant series 1: no segments
    auto pg0 = z_polygon(F, 0);
    CHECK(pg0.segments.empty());
    CHECK(pg0.complete);

    // z(x,-8): slopes (-6, 0), lengths (1, 1)
    auto pg8 = z_polygon(F, 8);
    REQUIRE(pg8.segments.size() == 2);
    CHECK(pg8.segments[0].slope == Rat(-6));
    CHECK(pg8.segments[1].slope == Rat(0));
    CHECK(pg8.segments[0].length == 1);
    CHECK(pg8.segments[1].length == 1);
}

TEST_CASE("polygon rejects a non-unit constant term") {
    std::vector<PolyPoint> pts{{0, PolyPoint::Kind::Exact, Rat(1)},
                               {1, PolyPoint::Kind::Exact, Rat(0)}};
    TailSpec t;
    CHECK_THROWS_WITH_AS(polygon(pts, t), doctest::Contains("NonUnitLeading"), Error);
}

TEST_CASE("polygon certification against bounded points") {
    TailSpec t;
    t.mode = TailSpec::Mode::Complete;
    // bound point above the hull: certified
    std::vector<PolyPoint> pts{{0, PolyPoint::Kind::Exact, Rat(0)},
                               {1, PolyPoint::Kind::AtLeast, Rat(5)},
                               {2, PolyPoint::Kind::Exact, Rat(4)}};
    auto pg = polygon(pts, t);
    REQUIRE(pg.segments.size() == 1);
    CHECK(pg.segments[0].slope == Rat(2));
    CHECK(pg.segments[0].length == 2);
    // bound point possibly below: nothing certified
    pts[1].val = Rat(1);
    pg = polygon(pts, t);
    CHECK(pg.segments.empty());
    CHECK(pg.undetermined_tail);
    // bound point exactly on the segment line: geometry unchanged, certified
    pts[1].val = Rat(2);
    pg = polygon(pts, t);
    REQUIRE(pg.segments.size() == 1);
    CHECK(pg.segments[0].length == 2);
    // bound point on the *extension* of a segment: length uncertain
    std::vector<PolyPoint> ext{{0, PolyPoint::Kind::Exact, Rat(0)},
                               {1, PolyPoint::Kind::Exact, Rat(1)},
                               {2, PolyPoint::Kind::AtLeast, Rat(2)}};
    pg = polygon(ext, t);
    CHECK(pg.segments.empty());
}

TEST_CASE("zeta_normalize shifts slopes by j") {
    auto F = F3();
    auto pg8 = zeta_normalize(z_polygon(F, 8), 8);
    REQUIRE(pg8.segments.size() == 2);
    CHECK(pg8.segments[0].slope == Rat(2));
    CHECK(pg8.segments[1].slope == Rat(8));
    auto pg5 = zeta_normalize(z_polygon(F, 5), 5);
    CHECK(pg5.segments[0].slope == Rat(2));
    // j = 0 is the identity
    auto pg = z_polygon(F, 8);
    auto same = zeta_normalize(pg, 0);
    CHECK(same.segments[0].slope == pg.segments[0].slope);
}

TEST_CASE("zeta_polygon: exact integer route matches the shifted z-polygon") {
    auto F = F3();
    for (long long j : {4LL, 5LL, 8LL, 26LL, 77LL}) {
        auto zeta = zeta_polygon(F, Place::at_infty(), ZetaPoint::integer(3, -j), 8, 8);
        auto shifted = zeta_normalize(z_polygon(F, j), j);
        REQUIRE(zeta.segments.size() == shifted.segments.size());
        for (size_t i = 0; i < zeta.segments.size(); ++i) {
            CHECK(zeta.segments[i].slope == shifted.segments[i].slope);
            CHECK(zeta.segments[i].length == shifted.segments[i].length);
        }
        CHECK(zeta.complete);
    }
}

TEST_CASE("zeta_polygon at y = +1: slopes p^(i+1)-1, unit lengths") {
    auto F = F3();
    auto pg = zeta_polygon(F, Place::at_infty(), ZetaPoint::integer(3, 1), 3, 7);
    REQUIRE(pg.segments.size() >= 3);
    CHECK(pg.segments[0].slope == Rat(2));
    CHECK(pg.segments[1].slope == Rat(8));
    CHECK(pg.segments[2].slope == Rat(26));
    for (size_t i = 0; i < 3; ++i) CHECK(pg.segments[i].length == 1);
    CHECK(pg.undetermined_tail); // entire series: infinitely many segments

    // count_zeroes at the certified slopes
    CHECK(count_zeroes(pg, Rat(2)) == 1);
    CHECK(count_zeroes(pg, Rat(8)) == 2);
    CHECK(count_zeroes(pg, Rat(1)) == 0);
    CHECK_THROWS_WITH_AS(count_zeroes(pg, Rat(1000000)), doctest::Contains("UndeterminedRange"),
                         Error);
}

TEST_CASE("count_zeroes equals l(j)/(p-1) at polygon slopes") {
    auto F = F3();
    for (long long j : {5LL, 8LL, 26LL, 77LL}) {
        auto pg = zeta_polygon(F, Place::at_infty(), ZetaPoint::integer(3, -j), 8, 8);
        for (const auto& s : pg.segments) {
            REQUIRE(s.slope.is_integer());
            long long jj = s.slope.num;
            CHECK(count_zeroes(pg, s.slope) == digit_sum(jj, 3) / 2);
        }
    }
}

TEST_CASE("equiv_n: spec examples and the y_trunc criterion") {
    auto F = F3();
    auto inf = Place::at_infty();
    CHECK(equiv_n(F, inf, ZetaPoint::integer(3, -5), ZetaPoint::integer(3, -2), 1, 8));
    CHECK_FALSE(equiv_n(F, inf, ZetaPoint::integer(3, -5), ZetaPoint::integer(3, -4), 1, 8));
    CHECK(equiv_n(F, inf, ZetaPoint::integer(3, -5), ZetaPoint::integer(3, -5), 1, 8));

    // equiv_n <=> y_trunc equality (prime field); singleton classes when the
    // polygon runs out of segments
    for (long long n = 1; n <= 2; ++n) {
        for (long long j1 = 0; j1 <= 40; ++j1) {
            for (long long j2 = j1; j2 <= 40; ++j2) {
                bool eq = equiv_n(F, inf, ZetaPoint::integer(3, -j1), ZetaPoint::integer(3, -j2),
                                  n, 9);
                bool want;
                if (digit_sum(j1, 3) < n * 2 || digit_sum(j2, 3) < n * 2) {
                    want = j1 == j2;
                } else {
                    want = y_trunc(PAdicApprox::from_int(3, -j1), n) ==
                           y_trunc(PAdicApprox::from_int(3, -j2), n);
                }
                CHECK(eq == want);
            }
        }
    }
}

TEST_CASE("neighborhood_radius: spec examples") {
    auto F = F3();
    auto inf = Place::at_infty();
    CHECK(neighborhood_radius(F, inf, ZetaPoint::integer(3, -2), 1, 4, 2, 8) == 1);
    CHECK(neighborhood_radius(F, inf, ZetaPoint::integer(3, -8), 2, 4, 2, 9) == 2);
    CHECK(neighborhood_radius(F, inf, ZetaPoint::integer(3, -8), 0, 4, 2, 8) == 0);
}

TEST_CASE("unit horizontal length and slope divisibility at infinity") {
    // Cor: every certified zeta segment has length 1 and positive slope
    // divisible by r-1 (tested wider in the acceptance suite)
    for (auto F : {Fq::make(2, 1), F3(), Fq::make(2, 2, {1, 1, 1})}) {
        long long r = F->q();
        for (long long yv : {1LL, -5LL, -11LL, 7LL}) {
            auto pg = zeta_polygon(F, Place::at_infty(), ZetaPoint::integer(F->p(), yv), 3, 7);
            for (const auto& s : pg.segments) {
                CHECK(s.length == 1);
                REQUIRE(s.slope.is_integer());
                CHECK(s.slope.num > 0);
                CHECK(s.slope.num % (r - 1) == 0);
            }
        }
    }
}

TEST_CASE("v-adic polygon: trivial segment of Example f5") {
    auto F = F3();
    auto f = FqPoly(F, {1, 0, 1});
    auto v = Place::at_v(f);
    auto pg = zeta_polygon(F, v, ZetaPoint::integer(3, -5), 4, 8);
    REQUIRE(pg.segments.size() == 2);
    CHECK(pg.segments[0].slope == Rat(0));
    CHECK(pg.segments[0].length == 1);
    CHECK(pg.segments[1].slope == Rat(5, 2));
    CHECK(pg.segments[1].length == 2);
    CHECK(pg.complete);

    // y = -4: (1 - f^4 x^-2)(1 - x^-1): slopes 0 (len 1), 2 (len 2)
    auto pg4 = zeta_polygon(F, v, ZetaPoint::integer(3, -4), 4, 8);
    REQUIRE(pg4.segments.size() == 2);
    CHECK(pg4.segments[0].slope == Rat(0));
    CHECK(pg4.segments[1].slope == Rat(2));
    CHECK(pg4.segments[1].length == 2);

    // y = 0: 1 - x^-d: single slope-0 segment of length d
    auto pg0 = zeta_polygon(F, v, ZetaPoint::integer(3, 0), 2, 8);
    REQUIRE(pg0.segments.size() == 1);
    CHECK(pg0.segments[0].slope == Rat(0));
    CHECK(pg0.segments[0].length == 2);
}

TEST_CASE("v-adic approximant route agrees with exact route on integers") {
    auto F = F3();
    auto f = FqPoly(F, {1, 0, 1});
    auto v = Place::at_v(f);
    // evaluation point -5 presented as a truncated p-adic with teich residue
    PAdicApprox trunc(3, {1, 1, 2, 2, 2, 2, 2}, PAdicApprox::Tail::Unknown); // -5 mod 3^7
    ZetaPoint y{trunc, ((-5) % 8 + 8) % 8};
    auto pg = zeta_polygon(F, v, y, 2, 6);
    REQUIRE(pg.segments.size() >= 2);
    CHECK(pg.segments[0].slope == Rat(0));
    CHECK(pg.segments[1].slope == Rat(5, 2));
    CHECK(pg.segments[1].length == 2);
    CHECK(pg.undetermined_tail);
}
