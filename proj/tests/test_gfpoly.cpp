#include "doctest.h"

#include <random>
#include <set>

#include "charzeta/fqpoly.hpp"
#include "charzeta/residue.hpp"
#include "charzeta/trunc_laurent.hpp"

using namespace charzeta;

namespace {
FqPtr F3() { return Fq::make(3, 1); }
FqPtr F9() { return Fq::make(3, 2, {1, 0, 1}); } // T^2 + 1
FqPoly poly(const FqPtr& F, std::vector<uint8_t> c) { return FqPoly(F, std::move(c)); }
} // namespace

TEST_CASE("fq_make validates the field spec") {
    auto F = F3();
    CHECK(F->q() == 3);
    auto F9_ = F9();
    CHECK(F9_->q() == 9);
    CHECK_THROWS_WITH_AS(Fq::make(4, 1), doctest::Contains("CompositeP"), Error);
    // T^2 + 2 = (T+1)(T+2) over F_3
    CHECK_THROWS_WITH_AS(Fq::make(3, 2, {2, 0, 1}), doctest::Contains("ReducibleModulus"), Error);
    CHECK_THROWS_WITH_AS(Fq::make(3, 2, {1, 1}), doctest::Contains("DegreeMismatch"), Error);
    CHECK_THROWS_WITH_AS(Fq::make(3, 2), doctest::Contains("DegreeMismatch"), Error);
}

TEST_CASE("field tables satisfy the axioms") {
    for (auto F : {F3(), F9(), Fq::make(2, 2, {1, 1, 1})}) {
        int q = F->q();
        for (int a = 0; a < q; ++a) {
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a) CHECK(F->mul(a, F->inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                for (int c = 0; c < q && a < 4; ++c)
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            }
        }
        // Frobenius is additive and fixes F_p
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                CHECK(F->frob(F->add(a, b), 1) == F->add(F->frob(a, 1), F->frob(b, 1)));
    }
}

TEST_CASE("polynomial arithmetic and division") {
    auto F = F3();
    auto a = poly(F, {1, 2, 0, 1}); // 1 + 2T + T^3
    auto b = poly(F, {2, 1});       // 2 + T
    auto [q, r] = a.divrem(b);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.degree() < b.degree()));
    CHECK((a * b).degree() == 4);
    CHECK(FqPoly::gcd(a * b, b) == b.monic());
}

TEST_CASE("monic_enumerate: q^e items, no duplicates, lexicographic") {
    auto F = F3();
    std::vector<FqPoly> out;
    for_each_monic(F, 1, [&](const FqPoly& n) { out.push_back(n); });
    REQUIRE(out.size() == 3);
    CHECK(out[0] == poly(F, {0, 1}));
    CHECK(out[1] == poly(F, {1, 1}));
    CHECK(out[2] == poly(F, {2, 1}));

    for_each_monic(F, 0, [&](const FqPoly& n) { CHECK(n.is_one()); });

    auto F9_ = F9();
    std::set<std::vector<uint8_t>> seen;
    size_t cnt = 0;
    for_each_monic(F9_, 2, [&](const FqPoly& n) {
        ++cnt;
        seen.insert(n.coeffs());
        CHECK(n.is_monic());
        CHECK(n.degree() == 2);
    });
    CHECK(cnt == 81);
    CHECK(seen.size() == 81);
}

TEST_CASE("nu_f counts irreducible-power divisibility") {
    auto F = F3();
    auto f = poly(F, {1, 0, 1}); // T^2+1 irreducible over F_3
    auto g = poly(F, {0, 1}) * f * f;
    CHECK(nu_f(g, f) == ExtVal::of(2));
    CHECK(nu_f(poly(F, {1, 1}), f) == ExtVal::of(0));
    CHECK(nu_f(FqPoly::zero(F), f).infinite);
    CHECK_THROWS_WITH_AS(nu_f(g, poly(F, {2, 0, 1})), doctest::Contains("NotIrreducible"), Error);
}

TEST_CASE("irreducibility test") {
    auto F = F3();
    CHECK(poly(F, {1, 0, 1}).is_irreducible());
    CHECK_FALSE(poly(F, {2, 0, 1}).is_irreducible());
    CHECK(poly(F, {1, 2, 0, 1}).is_irreducible()); // 1+2T+T^3 has no roots in F_3
    CHECK_FALSE((poly(F, {1, 0, 1}) * poly(F, {1, 1})).is_irreducible());
    auto F4 = Fq::make(2, 2, {1, 1, 1});
    int count = 0;
    for_each_monic(F4, 2, [&](const FqPoly& n) {
        if (n.is_irreducible()) ++count;
    });
    CHECK(count == (16 - 4) / 2); // (q^2 - q)/2 monic irreducible quadratics
}

TEST_CASE("one_unit_pow: Frobenius, negative exponents, zero exponent") {
    auto F = F3();
    auto unit = TruncLaurent::one_unit_part(poly(F, {1, 1})); // <T+1> = 1 + 1/T
    auto cube = one_unit_pow(unit, PAdicApprox::from_int(3, 3), 9);
    CHECK(cube.coeff(0) == 1);
    CHECK(cube.coeff(1) == 0);
    CHECK(cube.coeff(2) == 0);
    CHECK(cube.coeff(3) == 1);

    auto inv = one_unit_pow(unit, PAdicApprox::from_int(3, -1), 3);
    CHECK(inv.coeff(0) == 1);
    CHECK(inv.coeff(1) == 2);
    CHECK(inv.coeff(2) == 1);
    // geometric-series oracle: (1+u)^{-1} = 1 - u + u^2 - ...
    CHECK(TruncLaurent::congruent(inv * unit.truncated(3), TruncLaurent::one(F, 3, false), 3));

    auto zero = one_unit_pow(unit, PAdicApprox::from_int(3, 0), 7);
    CHECK(TruncLaurent::congruent(zero, TruncLaurent::one(F, 7, false), 7));
}

TEST_CASE("one_unit_pow action laws on random units") {
    auto F = F3();
    std::mt19937_64 rng(42);
    const long long N = 27;
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<uint8_t> uc((size_t)N, 0);
        uc[0] = 1;
        for (size_t k = 1; k < uc.size(); ++k) uc[k] = (uint8_t)(rng() % 3);
        TruncLaurent unit(F, 0, std::move(uc), N, false);
        long long y1 = (long long)(rng() % 2000) - 1000;
        long long y2 = (long long)(rng() % 2000) - 1000;
        auto a = one_unit_pow(one_unit_pow(unit, PAdicApprox::from_int(3, y1), N),
                              PAdicApprox::from_int(3, y2), N);
        auto b = one_unit_pow(unit, PAdicApprox::from_int(3, y1 * y2), N);
        CHECK(TruncLaurent::congruent(a, b, N));
        // digit congruence: y == y' mod p^M agrees mod (1/T)^(p^M)
        long long M = 2, pM = 9;
        auto c = one_unit_pow(unit, PAdicApprox::from_int(3, y1 + pM * 7), pM);
        auto d = one_unit_pow(unit, PAdicApprox::from_int(3, y1), pM);
        CHECK(TruncLaurent::congruent(c, d, pM));
        (void)M;
    }
}

TEST_CASE("nu_infty is a valuation on random truncated elements") {
    auto F = F3();
    std::mt19937_64 rng(7);
    auto random_elt = [&](long long off) {
        std::vector<uint8_t> c(12);
        for (auto& v : c) v = (uint8_t)(rng() % 3);
        return TruncLaurent(F, off, std::move(c), off + 12, false);
    };
    for (int t = 0; t < 50; ++t) {
        auto a = random_elt((long long)(rng() % 5) - 2);
        auto b = random_elt((long long)(rng() % 5) - 2);
        if (a.known_zero() || b.known_zero()) continue;
        auto va = a.valuation(), vb = b.valuation();
        auto prod = a * b;
        CHECK(prod.valuation().v == va.v + vb.v);
        auto sum = a + b;
        if (!sum.known_zero()) {
            CHECK(sum.valuation().v >= std::min(va.v, vb.v));
            if (va.v != vb.v) CHECK(sum.valuation().v == std::min(va.v, vb.v));
        }
    }
    // poly embedding: nu(1/T) = 1, nu(T) = -1
    CHECK(TruncLaurent::from_poly(poly(F, {0, 1})).valuation().v == -1);
}

TEST_CASE("teichmuller lift") {
    auto F = F3();
    auto f = poly(F, {1, 0, 1});
    auto R = ResidueRing::make(f, 4);
    // fixed point at n == 1 mod f
    auto one_lift = teichmuller(poly(F, {1}), R);
    CHECK(one_lift == ResidueElt::one(R));
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        std::vector<uint8_t> c(7);
        for (auto& v : c) v = (uint8_t)(rng() % 3);
        FqPoly n(F, std::move(c));
        if (n.is_zero() || n.mod(f).is_zero()) continue;
        auto w = teichmuller(n, R);
        CHECK(w.pow(R->cyc_order()) == ResidueElt::one(R));           // w^(q^d-1) = 1
        CHECK((w.rep() - n).mod(f).is_zero());                        // w == n mod f
        auto u = one_unit_part_v(n, R);
        CHECK((u - ResidueElt::one(R)).is_zero() == ((u.rep() - FqPoly::constant(F, 1)).is_zero()));
        CHECK(w * u == ResidueElt(R, n)); // n = w(n) * <n>_v
    }
    CHECK_THROWS_WITH_AS(teichmuller(f * poly(F, {1, 1}), R), doctest::Contains("NotCoprime"),
                         Error);
}
